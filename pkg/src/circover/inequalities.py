"""Valid inequalities for integer covering over circular matrices.

Closed paths of the auxiliary digraph with positive winding induce valid
inequalities for the integer hull. For a closed path with winding p > 0,
net demand t (forward row demands minus reverse row demands), quotient
beta = floor(t/p) and remainder r = t - beta*p, the inequality reads

    sum_j (reverse_jumps(j) + r) * x_j  >=  r*(beta+1) + reverse_row_demand.

With homogeneous demands alpha per row the reverse-row-free digraph
suffices, and on a circuit the coefficients collapse to two values: r+1 on
crosses (columns whose backward short arc lies on the circuit), r elsewhere,
with right-hand side r*ceil(alpha*s/p) for s forward row arcs.

The block structure of a circuit (runs of circles or crosses hanging off
each essential plain node) certifies a circulant minor of order s and window
p; rows too short to jump p essential plain nodes ("bad rows") are exactly
what can spoil the minor being the full contraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable

from .digraph import (
    FORWARD_ROW,
    FORWARD_SHORT,
    REVERSE_ROW,
    REVERSE_SHORT,
    AuxDigraph,
    ClosedPath,
    build_digraph,
    enumerate_circuits,
)
from .errors import (
    BadParameters,
    NoEssentialBullets,
    NonpositiveWinding,
    NotCirculantMinor,
    RedundantInequality,
    ReverseRowArcPresent,
)
from .matrices import (
    CircularMatrix,
    Circulant,
    SupportMatrix,
    circulant_isomorphic,
    circulant_matrix,
    contract,
    cover_number,
    norm_col,
)


@dataclass(frozen=True)
class LinearInequality:
    """coeffs . x >= rhs with non-negative integer coefficients.

    Inequalities read off circuits, minors and row families keep the
    coefficients exactly as constructed, common factors included; the
    slack-equals-cost certificate depends on that scale. Use normalized()
    before comparing against a facet list.
    """

    coeffs: tuple[int, ...]
    rhs: int
    kind: str
    witness: object = field(default=None, compare=False, repr=False)

    def evaluate(self, x) -> Fraction:
        """Slack of the inequality at x (negative means violated)."""
        return sum(Fraction(c) * Fraction(v) for c, v in zip(self.coeffs, x)) - self.rhs

    def key(self) -> tuple:
        return (self.coeffs, self.rhs)

    def normalized(self) -> "LinearInequality":
        """The same halfspace with the coefficient gcd divided out."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        g = gcd(g, abs(self.rhs))
        if g <= 1:
            return self
        return LinearInequality(
            tuple(c // g for c in self.coeffs), self.rhs // g, self.kind, self.witness
        )


def make_inequality(coeffs, rhs, kind, witness=None, *, reduce=True) -> LinearInequality:
    out = []
    for c in coeffs:
        ci = int(c)
        assert ci == c, f"non-integer coefficient {c}"
        out.append(ci)
    ri = int(rhs)
    assert ri == rhs, f"non-integer right-hand side {rhs}"
    ineq = LinearInequality(tuple(out), ri, kind, witness)
    return ineq.normalized() if reduce else ineq


def nonnegativity(n: int) -> list[LinearInequality]:
    return [
        make_inequality([int(t == j) for t in range(n)], 0, "nonneg")
        for j in range(n)
    ]


def row_inequalities(matrix: CircularMatrix, demands) -> list[LinearInequality]:
    """One inequality per row: its support summed to at least its demand."""
    out = []
    for i in range(1, matrix.m + 1):
        out.append(make_inequality(
            matrix.row_vector(i), demands[i - 1], "boolean", {"row": i}
        ))
    return out


# ---------------------------------------------------------------------------
# circuit inequalities


def circuit_inequality(matrix: CircularMatrix, demands, path: ClosedPath) -> LinearInequality:
    """The inequality induced by a closed path with positive winding."""
    p = path.winding
    if p <= 0:
        raise NonpositiveWinding(f"winding {p}, need >= 1")
    t_plus = sum(demands[a.index - 1] for a in path.arcs if a.kind == FORWARD_ROW)
    t_minus = sum(demands[a.index - 1] for a in path.arcs if a.kind == REVERSE_ROW)
    t = t_plus - t_minus
    beta = t // p
    r = t - beta * p
    coeffs = [path.jump_counts(j)[1] + r for j in range(1, matrix.n + 1)]
    rhs = r * (beta + 1) + t_minus
    witness = {
        "winding": p,
        "net_demand": t,
        "quotient": beta,
        "remainder": r,
        "redundant": r == 0,
        "circuit": path.descriptor(),
    }
    return make_inequality(coeffs, rhs, "circuit", witness, reduce=False)


@dataclass(frozen=True)
class NodeClasses:
    """Column classes of a reverse-row-free closed path."""

    circles: frozenset[int]   # j with the forward short arc (j-1, j) on the path
    crosses: frozenset[int]   # j with the backward short arc (j, j-1) on the path
    bullets: frozenset[int]   # everything else
    essential: frozenset[int]  # bullets that are nodes of the path


def classify_nodes(path: ClosedPath, n: int) -> NodeClasses:
    circles = set()
    crosses = set()
    for a in path.arcs:
        if a.kind == REVERSE_ROW:
            raise ReverseRowArcPresent("node classes need a reverse-row-free path")
        if a.kind == FORWARD_SHORT:
            circles.add(a.index)
        elif a.kind == REVERSE_SHORT:
            crosses.add(a.index)
    assert not circles & crosses, "only the winding-0 two-cycle mixes them"
    bullets = frozenset(range(1, n + 1)) - circles - crosses
    return NodeClasses(
        frozenset(circles),
        frozenset(crosses),
        bullets,
        bullets & path.nodes,
    )


def homogeneous_circuit_inequality(
    matrix: CircularMatrix, path: ClosedPath, alpha: int = 1
) -> LinearInequality:
    """Two-valued form of the circuit inequality for demands alpha per row.

    Coefficient r+1 on crosses, r elsewhere, right-hand side
    r*ceil(alpha*s/p). Raises RedundantInequality when p < 2 or p divides
    alpha*s (those are never facets).
    """
    if not isinstance(alpha, int) or alpha < 1:
        raise BadParameters(f"demand level must be a positive int, got {alpha!r}")
    classes = classify_nodes(path, matrix.n)
    p = path.winding
    s = len(path.row_indices(forward=True))
    if p < 2:
        raise RedundantInequality(f"winding {p} < 2")
    if (alpha * s) % p == 0:
        raise RedundantInequality(f"winding {p} divides total demand {alpha * s}")
    r = alpha * s - p * ((alpha * s) // p)
    coeffs = [
        r + 1 if j in classes.crosses else r for j in range(1, matrix.n + 1)
    ]
    rhs = r * cover_number(alpha * s, p)
    witness = {
        "winding": p,
        "rows": sorted(path.row_indices(forward=True)),
        "remainder": r,
        "crosses": sorted(classes.crosses),
        "circles": sorted(classes.circles),
        "circuit": path.descriptor(),
    }
    return make_inequality(coeffs, rhs, "circuit", witness, reduce=False)


# ---------------------------------------------------------------------------
# block structure, bad rows, minors


@dataclass(frozen=True)
class Block:
    start: int                 # the essential plain node owning the block
    end: int                   # last node of the attached run (start if none)
    kind: str                  # "circle" | "cross" | "plain"
    entry: int                 # where a row arc of the circuit enters
    exit: int                  # where a row arc of the circuit leaves
    members: tuple[int, ...]


@dataclass(frozen=True)
class BlockStructure:
    blocks: tuple[Block, ...]
    winding: int
    essential: tuple[int, ...]


def block_decomposition(matrix: CircularMatrix, path: ClosedPath) -> BlockStructure:
    """Split the circuit's nodes into blocks anchored at essential plain nodes.

    Verifies on the way (for a circuit with winding p and s essential plain
    nodes): the circuit has exactly s row arcs, each jumping exactly p
    essential plain nodes, gcd(s, p) = 1, blocks partition the node set, and
    the row arcs connect each block's exit to the entry of the block p
    places further.
    """
    if matrix.dominating_rows():
        raise BadParameters("block structure needs a matrix without dominating rows")
    n = matrix.n
    p = path.winding
    if p < 1:
        raise BadParameters(f"winding {p} < 1")
    classes = classify_nodes(path, n)
    ess = sorted(classes.essential)
    if not ess:
        raise NoEssentialBullets("the circuit has no essential plain node")
    s = len(ess)

    def succ(j):
        return norm_col(j + 1, n)

    blocks = []
    for b in ess:
        nxt = succ(b)
        if nxt in classes.circles:
            v = nxt
            while succ(v) in classes.circles:
                v = succ(v)
            kind, entry, exit_ = "circle", b, v
        elif nxt in classes.crosses:
            v = nxt
            while succ(v) in classes.crosses:
                v = succ(v)
            kind, entry, exit_ = "cross", v, b
        else:
            v = b
            kind, entry, exit_ = "plain", b, b
        members = [b]
        c = b
        while c != v:
            c = succ(c)
            members.append(c)
        blocks.append(Block(b, v, kind, entry, exit_, tuple(members)))

    seen: set[int] = set()
    for blk in blocks:
        assert not seen & set(blk.members), "blocks must be disjoint"
        seen.update(blk.members)
    assert seen == set(path.nodes), "blocks must cover exactly the circuit nodes"

    row_arcs = [a for a in path.arcs if a.kind == FORWARD_ROW]
    assert len(row_arcs) == s, "one row arc per essential plain node"
    assert gcd(s, p) == 1
    expected = {
        (blocks[i].exit, blocks[(i + p) % s].entry) for i in range(s)
    }
    assert {(a.tail, a.head) for a in row_arcs} == expected
    ess_mask = 0
    for j in ess:
        ess_mask |= 1 << (j - 1)
    for a in row_arcs:
        assert (a.jump_mask & ess_mask).bit_count() == p
    return BlockStructure(tuple(blocks), p, tuple(ess))


def bad_arcs(
    matrix: CircularMatrix, path: ClosedPath, blocks: BlockStructure | None = None
) -> tuple[int, ...]:
    """Rows jumping fewer than winding-many essential plain nodes.

    Every row jumps p-1, p, or p+1 of them; the p-1 ones (the bad rows) are
    exactly the rows whose arc starts inside a circle block and ends on a
    circle or off the circuit. Both facts are asserted.
    """
    if blocks is None:
        blocks = block_decomposition(matrix, path)
    p = blocks.winding
    ess = set(blocks.essential)
    classes = classify_nodes(path, matrix.n)
    circle_nodes: set[int] = set()
    for blk in blocks.blocks:
        if blk.kind == "circle":
            circle_nodes.update(blk.members)
    nodes = path.nodes
    n = matrix.n
    bad = []
    for i in range(1, matrix.m + 1):
        start, length = matrix.rows[i - 1]
        tail = norm_col(start - 1, n)
        head = norm_col(start + length - 1, n)
        cnt = len(matrix.support(i) & ess)
        assert p - 1 <= cnt <= p + 1, f"row {i} jumps {cnt} essential nodes"
        expect_bad = tail in circle_nodes and (
            head in classes.circles or head not in nodes
        )
        assert (cnt == p - 1) == expect_bad, f"bad-row criterion failed on row {i}"
        if cnt == p - 1:
            bad.append(i)
    return tuple(bad)


@dataclass(frozen=True)
class MinorWitness:
    """A certified circulant minor: delete removed_columns, get (order, window)."""

    removed_columns: tuple[int, ...]
    order: int
    window: int
    rows: tuple[int, ...]   # parent rows involved (circuit rows), may be empty
    exact: bool             # True when the contraction is the minor on the nose


def extract_minor(matrix: CircularMatrix, path: ClosedPath) -> MinorWitness:
    """Read the circulant minor certified by a circuit (winding >= 2).

    The circuit's rows restricted to its essential plain nodes always form a
    circulant of order s and window p (asserted); the witness is exact when
    no bad row exists, and then the full contraction is that circulant too.
    """
    blocks = block_decomposition(matrix, path)
    p = blocks.winding
    if p < 2:
        raise BadParameters(f"winding {p} < 2 certifies no proper circulant minor")
    ess = blocks.essential
    ess_set = set(ess)
    s = len(ess)
    rows = tuple(sorted(path.row_indices(forward=True)))
    sub = SupportMatrix(
        columns=tuple(ess),
        rows=tuple(matrix.support(i) & ess_set for i in rows),
        row_origins=tuple((i,) for i in rows),
    )
    match = circulant_isomorphic(sub)
    assert match is not None and (match.order, match.window) == (s, p)
    bad = bad_arcs(matrix, path, blocks)
    exact = not bad
    removed = tuple(j for j in range(1, matrix.n + 1) if j not in ess_set)
    if exact:
        full = circulant_isomorphic(contract(matrix, removed))
        assert full is not None and (full.order, full.window) == (s, p)
    return MinorWitness(removed, s, p, rows, exact)


def minor_inequalities(matrix: CircularMatrix, removed, mode: str = "plain") -> LinearInequality:
    """Inequality attached to a circulant minor of a circulant matrix.

    removed may be a MinorWitness or an iterable of columns. Doubled
    coefficients go to the removed columns whose predecessor at distance
    window+1 was removed too. mode "plain": 2/1 coefficients, right-hand
    side ceil(order/window), facet condition order mod window == 1. mode
    "rfi": r+1 / r with r = order - window*floor(order/window) and
    right-hand side r*ceil(order/window).
    """
    circ = matrix.as_circulant()
    if circ is None:
        raise NotCirculantMinor("the parent matrix is not a circulant")
    if isinstance(removed, MinorWitness):
        removed = removed.removed_columns
    removed_set = set()
    for j in removed:
        if not 1 <= j <= matrix.n:
            raise BadParameters(f"column {j} outside 1..{matrix.n}")
        removed_set.add(j)
    match = circulant_isomorphic(contract(matrix, removed_set)) \
        if removed_set else circulant_isomorphic(matrix)
    if match is None:
        raise NotCirculantMinor(f"deleting {sorted(removed_set)} leaves no circulant")
    nprime, kprime = match.order, match.window
    assert nprime == matrix.n - len(removed_set)
    k = circ.window
    doubled = {
        j for j in removed_set if norm_col(j - (k + 1), matrix.n) in removed_set
    }
    lower = cover_number(nprime, kprime)
    r = nprime - kprime * (nprime // kprime)
    witness = {
        "removed": sorted(removed_set),
        "order": nprime,
        "window": kprime,
        "doubled": sorted(doubled),
        "remainder": r,
    }
    if mode == "plain":
        coeffs = [2 if j in doubled else 1 for j in range(1, matrix.n + 1)]
        witness["facet_condition"] = (r == 1)
        return make_inequality(coeffs, lower, "minor", witness, reduce=False)
    if mode == "rfi":
        coeffs = [r + 1 if j in doubled else r for j in range(1, matrix.n + 1)]
        witness["redundant"] = (r == 0)
        return make_inequality(coeffs, r * lower, "minor-rfi", witness, reduce=False)
    raise BadParameters(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# row family inequalities


@dataclass(frozen=True)
class RowFamilyResult:
    inequality: LinearInequality
    valid: bool | None    # True / False per condition check, None if unchecked


def default_family_winding(matrix: CircularMatrix, rows) -> int:
    """The always-valid parameter: max column multiplicity of the family, minus 1."""
    rows = sorted(set(rows))
    colsum = [0] * (matrix.n + 1)
    for i in rows:
        for j in matrix.support(i):
            colsum[j] += 1
    return max(colsum[1:]) - 1


def row_family_inequality(
    matrix: CircularMatrix, rows, p: int | None = None, covers=None
) -> RowFamilyResult:
    """Row family inequality of a family F and parameter p.

    Columns met by at most p rows of F get coefficient r, columns met by
    exactly p+1 get r+1, heavier columns get 0, with r = s - p*floor(s/p)
    and right-hand side r*ceil(s/p), s = |F|.

    p defaults to the always-valid choice (max column multiplicity - 1).
    Validity: checked against `covers` when given (the sufficient counting
    condition, reported as the result's `valid`); trusted (True) at the
    default p; otherwise None. BadParameters when p is out of range or s is
    a multiple of a non-default p; at the default p with p | s the r = 0
    degenerate inequality is returned flagged redundant.
    """
    family = sorted(set(rows))
    for i in family:
        if not 1 <= i <= matrix.m:
            raise BadParameters(f"row {i} outside 1..{matrix.m}")
    s = len(family)
    if s < 2:
        raise BadParameters("a row family needs at least two rows")
    colsum = [0] * (matrix.n + 1)
    for i in family:
        for j in matrix.support(i):
            colsum[j] += 1
    pstar = max(colsum[1:]) - 1
    if p is None:
        p = pstar
    if not 1 <= p <= s - 1:
        raise BadParameters(f"parameter {p} outside [1, {s - 1}]")
    if s % p == 0 and p != pstar:
        raise BadParameters(f"{p} divides the family size {s}")
    r = s - p * (s // p)
    inner = [j for j in range(1, matrix.n + 1) if colsum[j] <= p]
    outer = [j for j in range(1, matrix.n + 1) if colsum[j] == p + 1]
    coeffs = [0] * matrix.n
    for j in inner:
        coeffs[j - 1] = r
    for j in outer:
        coeffs[j - 1] = r + 1
    witness = {
        "rows": family,
        "winding": p,
        "remainder": r,
        "inner": inner,
        "outer": outer,
        "redundant": r == 0,
    }
    ineq = make_inequality(coeffs, r * cover_number(s, p), "rfi", witness, reduce=False)
    if covers is not None:
        inner_set = set(inner)
        outer_set = set(outer)
        valid = True
        for cover in covers:
            chosen = {j for j in range(1, matrix.n + 1) if cover[j - 1] > 0}
            if p * len(chosen & inner_set) + (p + 1) * len(chosen & outer_set) < s:
                valid = False
                break
    elif p == pstar:
        valid = True
    else:
        valid = None
    return RowFamilyResult(ineq, valid)


# ---------------------------------------------------------------------------
# circulant minors by direct search


@dataclass(frozen=True)
class MinorEnumeration:
    witnesses: tuple[MinorWitness, ...]
    complete: bool


def _uniform_circuit_cover(nodes, n, k):
    """Disjoint simple circuits in the step digraph covering `nodes` exactly.

    Arcs go from i to i+k or i+k+1 (mod n). Searches for a bijection of
    `nodes` onto itself along such arcs whose cycles all share one profile
    (#short steps, #long steps); returns (#cycles, per-cycle winding) or None.
    """
    node_set = set(nodes)
    order = sorted(nodes)
    options = {}
    for i in order:
        opts = [t for t in (norm_col(i + k, n), norm_col(i + k + 1, n)) if t in node_set]
        if not opts:
            return None
        options[i] = opts
    assign: dict[int, int] = {}
    used: set[int] = set()

    def profile_if_uniform():
        seen: set[int] = set()
        prof = None
        cycles = 0
        for i in order:
            if i in seen:
                continue
            cycles += 1
            short = long_ = 0
            cur = i
            while cur not in seen:
                seen.add(cur)
                nxt = assign[cur]
                if nxt == norm_col(cur + k, n):
                    short += 1
                else:
                    long_ += 1
                cur = nxt
            if prof is None:
                prof = (short, long_)
            elif prof != (short, long_):
                return None
        total = prof[0] * k + prof[1] * (k + 1)
        assert total % n == 0
        return cycles, total // n

    def search(idx):
        if idx == len(order):
            return profile_if_uniform()
        i = order[idx]
        for t in options[i]:
            if t in used:
                continue
            assign[i] = t
            used.add(t)
            got = search(idx + 1)
            used.discard(t)
            del assign[i]
            if got is not None:
                return got
        return None

    return search(0)


def enumerate_circulant_minors(
    circ: Circulant, *, max_count: int | None = None
) -> MinorEnumeration:
    """All column sets whose deletion leaves a circulant minor (window >= 2).

    Candidate sets are recognized by the circuit-cover criterion on the step
    digraph (the classical characterization of circulant minors), then
    cross-validated by actually contracting; sets that pass the criterion
    but fall below the window-2 bound are skipped. Deterministic order:
    by size, then lexicographic.
    """
    n, k = circ.order, circ.window
    parent = circulant_matrix(n, k)
    witnesses = []
    for size in range(1, n - 2):
        for nodes in combinations(range(1, n + 1), size):
            got = _uniform_circuit_cover(nodes, n, k)
            if got is None:
                continue
            d, q = got
            window = k - d * q
            if window < 2:
                continue
            match = circulant_isomorphic(contract(parent, nodes))
            assert match is not None and (match.order, match.window) == (n - size, window)
            witnesses.append(
                MinorWitness(tuple(nodes), n - size, window, (), True)
            )
            if max_count is not None and len(witnesses) >= max_count:
                return MinorEnumeration(tuple(witnesses), False)
    return MinorEnumeration(tuple(witnesses), True)


# ---------------------------------------------------------------------------
# facet candidates


@dataclass(frozen=True)
class CandidateEnumeration:
    inequalities: tuple[LinearInequality, ...]
    complete: bool
    circuits_seen: int


def _dedup(ineqs) -> tuple[LinearInequality, ...]:
    out = {}
    for q in ineqs:
        out.setdefault(q.key(), q)
    return tuple(out.values())


def enumerate_facet_candidates(
    matrix: CircularMatrix, alpha: int = 1, *, max_circuits: int | None = None
) -> CandidateEnumeration:
    """Candidate facet list for demands alpha per row.

    Non-negativity and row inequalities, the full-support inequality at the
    exact cover number, and circuit inequalities from the class matching the
    instance: on circulants, circuits without forward short arcs; on
    general matrices, bad-row-free circuits for alpha = 1 and all circuits
    of the reverse-row-free digraph for alpha >= 2. Cross-free circuits
    only reproduce (scaled, weaker) full-support inequalities, so they are
    dropped in favor of the exact one.
    """
    if not isinstance(alpha, int) or alpha < 1:
        raise BadParameters(f"demand level must be a positive int, got {alpha!r}")
    if matrix.dominating_rows():
        raise BadParameters("facet candidates need a matrix without dominating rows")
    circ = matrix.as_circulant()
    digraph = build_digraph(matrix, restricted=True)
    forbid = frozenset({FORWARD_SHORT}) if circ else frozenset()
    enum = enumerate_circuits(
        digraph, min_winding=2, forbid_kinds=forbid, max_count=max_circuits
    )
    cands: list[LinearInequality] = []
    cands.extend(nonnegativity(matrix.n))
    cands.extend(row_inequalities(matrix, (alpha,) * matrix.m))
    if circ and alpha == 1:
        tau = cover_number(circ.order, circ.window)
    else:
        from .optimize import optimize
        tau_val = optimize(matrix, (alpha,) * matrix.m, (1,) * matrix.n).value
        assert tau_val.denominator == 1
        tau = int(tau_val)
    cands.append(make_inequality([1] * matrix.n, tau, "rank"))
    for path in enum.circuits:
        classes = classify_nodes(path, matrix.n)
        if not classes.crosses:
            continue
        s = len(path.row_indices(forward=True))
        if (alpha * s) % path.winding == 0:
            continue
        if alpha == 1 and circ is None and bad_arcs(matrix, path):
            continue
        cands.append(homogeneous_circuit_inequality(matrix, path, alpha))
    return CandidateEnumeration(_dedup(cands), enum.complete, len(enum.circuits))


def enumerate_candidates_general(
    matrix: CircularMatrix, demands, *, max_circuits: int | None = None
) -> CandidateEnumeration:
    """Candidates for arbitrary demands: circuits of the full digraph.

    Keeps circuits passing the facet-necessary filter (winding p >= 2,
    p not dividing the net demand t, p <= t-1) plus the polyhedron rows,
    non-negativity, and the exact full-support inequality.
    """
    digraph = build_digraph(matrix, restricted=False)
    enum = enumerate_circuits(digraph, min_winding=2, max_count=max_circuits)
    cands: list[LinearInequality] = []
    cands.extend(nonnegativity(matrix.n))
    cands.extend(row_inequalities(matrix, demands))
    from .optimize import optimize
    tau_val = optimize(matrix, demands, (1,) * matrix.n).value
    assert tau_val.denominator == 1
    cands.append(make_inequality([1] * matrix.n, int(tau_val), "rank"))
    for path in enum.circuits:
        ineq = circuit_inequality(matrix, demands, path)
        w = ineq.witness
        if w["redundant"] or not 2 <= w["winding"] <= w["net_demand"] - 1:
            continue
        cands.append(ineq)
    return CandidateEnumeration(_dedup(cands), enum.complete, len(enum.circuits))
