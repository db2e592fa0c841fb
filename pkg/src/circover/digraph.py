"""The auxiliary node digraph of a circular matrix.

Nodes are the columns 1..n. Every row i = (start, length) contributes a
forward arc from node start-1 to node start+length-1 (both mod n): walking
it "jumps over" exactly the columns of the row's support. Every column j
contributes a forward short arc (j-1, j) jumping {j}. The full digraph also
carries the antiparallel reverse arcs (kind "reverse-row" / "reverse-short"),
which jump the same columns but count negatively toward the winding number.
The restricted digraph drops the reverse row arcs and keeps everything else.

Arc indexing matches the extended matrix stack (rows first, then one unit
row per column): a row arc with index i sits at slot i-1, a short arc for
column j at slot m+j-1. Forward and reverse arcs of the same slot are
antiparallel twins.

A closed path is a chained arc sequence returning to its start; arcs may
repeat (closed walks are legal inputs to winding computations). A circuit is a
closed path visiting each node at most once. Circuit enumeration is
deterministic: each circuit is reported exactly once, anchored and starting
at its smallest node, with DFS branches explored in the fixed global arc
order (forward rows, forward shorts, reverse rows, reverse shorts, each by
index).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd  # noqa: F401  (re-exported convenience for callers)

from .errors import BadParameters, NotClosedPath
from .matrices import CircularMatrix, norm_col

FORWARD_ROW = "forward-row"
FORWARD_SHORT = "forward-short"
REVERSE_ROW = "reverse-row"
REVERSE_SHORT = "reverse-short"

ARC_KINDS = (FORWARD_ROW, FORWARD_SHORT, REVERSE_ROW, REVERSE_SHORT)


@dataclass(frozen=True)
class Arc:
    kind: str
    index: int      # row index for row arcs, column index for short arcs
    tail: int
    head: int
    length: int     # signed circular step, positive forward
    slot: int       # position in the extended row stack, 0-based
    jump_mask: int  # bit j-1 set iff the arc jumps column j

    @property
    def is_forward(self) -> bool:
        return self.length > 0

    @property
    def is_row(self) -> bool:
        return self.kind in (FORWARD_ROW, REVERSE_ROW)

    def jumps(self, j: int) -> bool:
        return bool(self.jump_mask >> (j - 1) & 1)

    def descriptor(self) -> dict:
        return {"kind": self.kind, "index": self.index,
                "tail": self.tail, "head": self.head}


class AuxDigraph:
    """Arc container with deterministic ordering and per-node adjacency."""

    def __init__(self, matrix: CircularMatrix, restricted: bool):
        self.matrix = matrix
        self.restricted = restricted
        n, m = matrix.n, matrix.m
        arcs: list[Arc] = []
        for i in range(1, m + 1):
            start, length = matrix.rows[i - 1]
            tail = norm_col(start - 1, n)
            head = norm_col(start + length - 1, n)
            arcs.append(Arc(FORWARD_ROW, i, tail, head, length,
                            i - 1, matrix.support_mask(i)))
        for j in range(1, n + 1):
            arcs.append(Arc(FORWARD_SHORT, j, norm_col(j - 1, n), j, 1,
                            m + j - 1, 1 << (j - 1)))
        if not restricted:
            for i in range(1, m + 1):
                fwd = arcs[i - 1]
                arcs.append(Arc(REVERSE_ROW, i, fwd.head, fwd.tail,
                                -fwd.length, fwd.slot, fwd.jump_mask))
        for j in range(1, n + 1):
            arcs.append(Arc(REVERSE_SHORT, j, j, norm_col(j - 1, n), -1,
                            m + j - 1, 1 << (j - 1)))
        self.arcs: tuple[Arc, ...] = tuple(arcs)
        out: dict[int, list[Arc]] = {v: [] for v in range(1, n + 1)}
        for a in self.arcs:
            out[a.tail].append(a)
        self.out: dict[int, tuple[Arc, ...]] = {v: tuple(lst) for v, lst in out.items()}

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def slots(self) -> int:
        return self.matrix.m + self.matrix.n

    def find_arc(self, kind: str, index: int) -> Arc:
        for a in self.arcs:
            if a.kind == kind and a.index == index:
                return a
        raise BadParameters(f"no arc {kind}/{index}")


def build_digraph(matrix: CircularMatrix, *, restricted: bool = False) -> AuxDigraph:
    return AuxDigraph(matrix, restricted)


def incidence_matrix(digraph: AuxDigraph) -> list[list[int]]:
    """Signed node-arc incidence: -1 at the tail, +1 at the head.

    Columns follow digraph.arcs; for the full digraph that is the block
    order (forward rows, forward shorts, reverse rows, reverse shorts).
    """
    rows = [[0] * len(digraph.arcs) for _ in range(digraph.n)]
    for c, a in enumerate(digraph.arcs):
        rows[a.tail - 1][c] -= 1
        rows[a.head - 1][c] += 1
    return rows


class ClosedPath:
    """A chained closed arc sequence (arcs may repeat)."""

    def __init__(self, arcs, n: int, slots: int):
        arcs = tuple(arcs)
        if not arcs:
            raise NotClosedPath("empty arc sequence")
        for a, b in zip(arcs, arcs[1:]):
            if a.head != b.tail:
                raise NotClosedPath(
                    f"arc into {a.head} followed by arc out of {b.tail}"
                )
        if arcs[-1].head != arcs[0].tail:
            raise NotClosedPath(
                f"path ends at {arcs[-1].head} but started at {arcs[0].tail}"
            )
        self.arcs = arcs
        self.n = n
        self.slots = slots
        total = sum(a.length for a in arcs)
        assert total % n == 0, "chained closed path must wind integrally"
        self.winding = total // n

    def __len__(self):
        return len(self.arcs)

    def __eq__(self, other):
        return isinstance(other, ClosedPath) and self.arcs == other.arcs

    def __hash__(self):
        return hash(self.arcs)

    @property
    def nodes(self) -> frozenset[int]:
        return frozenset(a.tail for a in self.arcs)

    @property
    def is_simple(self) -> bool:
        return len({a.tail for a in self.arcs}) == len(self.arcs)

    def row_indices(self, *, forward: bool) -> tuple[int, ...]:
        kind = FORWARD_ROW if forward else REVERSE_ROW
        return tuple(a.index for a in self.arcs if a.kind == kind)

    def forward_counts(self) -> tuple[int, ...]:
        out = [0] * self.slots
        for a in self.arcs:
            if a.is_forward:
                out[a.slot] += 1
        return tuple(out)

    def reverse_counts(self) -> tuple[int, ...]:
        out = [0] * self.slots
        for a in self.arcs:
            if not a.is_forward:
                out[a.slot] += 1
        return tuple(out)

    def jump_counts(self, j: int) -> tuple[int, int]:
        """(#forward arcs jumping column j, #reverse arcs jumping column j)."""
        plus = minus = 0
        for a in self.arcs:
            if a.jumps(j):
                if a.is_forward:
                    plus += 1
                else:
                    minus += 1
        return plus, minus

    def canonical(self) -> "ClosedPath":
        """Rotate so the smallest tail node comes first (simple paths only)."""
        k = min(range(len(self.arcs)), key=lambda t: self.arcs[t].tail)
        return ClosedPath(self.arcs[k:] + self.arcs[:k], self.n, self.slots)

    def descriptor(self) -> list[dict]:
        return [a.descriptor() for a in self.arcs]


def closed_path(digraph: AuxDigraph, arcs) -> ClosedPath:
    return ClosedPath(arcs, digraph.n, digraph.slots)


@dataclass(frozen=True)
class CircuitEnumeration:
    circuits: tuple[ClosedPath, ...]
    complete: bool


def enumerate_circuits(
    digraph: AuxDigraph,
    *,
    min_winding: int | None = None,
    forbid_kinds: frozenset = frozenset(),
    max_count: int | None = None,
) -> CircuitEnumeration:
    """All simple circuits, canonical, deterministic order.

    min_winding filters on the winding number at emission time (the search
    itself is not pruned by it). forbid_kinds drops whole arc kinds before
    searching. Hitting max_count stops the search and flags the result
    incomplete instead of raising.
    """
    for k in forbid_kinds:
        if k not in ARC_KINDS:
            raise BadParameters(f"unknown arc kind {k!r}")
    found: list[ClosedPath] = []
    complete = True
    n = digraph.n

    def allowed(a: Arc) -> bool:
        return a.kind not in forbid_kinds

    path: list[Arc] = []
    on_path: set[int] = set()

    def visit(start: int, v: int) -> bool:
        # returns False to abort the whole search (cap hit)
        for a in digraph.out[v]:
            if not allowed(a):
                continue
            h = a.head
            if h == start and path:
                pass
            elif h == start:
                continue  # a one-arc loop cannot occur, but stay safe
            elif h < start or h in on_path:
                continue
            path.append(a)
            if h == start:
                cand = ClosedPath(tuple(path), n, digraph.slots)
                if min_winding is None or cand.winding >= min_winding:
                    found.append(cand)
                    if max_count is not None and len(found) >= max_count:
                        path.pop()
                        return False
            else:
                on_path.add(h)
                ok = visit(start, h)
                on_path.discard(h)
                if not ok:
                    path.pop()
                    return False
            path.pop()
        return True

    for start in range(1, n + 1):
        on_path = {start}
        path = []
        if not visit(start, start):
            complete = False
            break
    return CircuitEnumeration(tuple(found), complete)
