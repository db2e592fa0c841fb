"""Circular 0/1 matrices and their column-deletion minors.

Conventions used everywhere in the package:

  * columns (= ground set elements, = nodes later on) are 1-based, 1..n,
    and arithmetic on them is circular: node 0 means node n;
  * a row is the incidence vector of a circular interval and is stored as a
    pair (start, length) with 1 <= start <= n and 2 <= length <= n-1, so the
    support is {start, start+1, ..., start+length-1} taken modulo n;
  * rows are 1-based in every public index (row i of an m-row matrix,
    i in 1..m).

The square matrix whose row i covers the window {i, ..., i+k-1} is called a
circulant here and identified by (order, window) = (n, k).

Column deletion plus the removal of dominated structure gives minors: after
deleting a column set the surviving structure is the set of minimal distinct
row supports (each support remembered once, together with every original row
that carried it). Keeping only minimal supports is what makes the minor a
clutter again; deleting "all rows that dominate another one" literally would
erase both copies of a duplicated support.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadParameters,
    BoundViolation,
    DuplicateRow,
    EmptyColumnSet,
    NotInterval,
)


def norm_col(j: int, n: int) -> int:
    """Map any integer onto the circular column range 1..n."""
    return (j - 1) % n + 1


@dataclass(frozen=True)
class Circulant:
    """Identifier (order, window) of the circulant with rows {i..i+window-1}."""

    order: int
    window: int

    def __post_init__(self):
        if self.order < 3:
            raise BoundViolation(f"circulant order must be >= 3, got {self.order}")
        if not 2 <= self.window <= self.order - 1:
            raise BoundViolation(
                f"circulant window must lie in [2, order-1], got {self.window}"
            )


def cover_number(order: int, window: int) -> int:
    """Minimum cover size of the circulant (order, window): ceil(order/window)."""
    return -(-order // window)


@dataclass(frozen=True)
class CircularMatrix:
    """An m x n circular 0/1 matrix, rows stored as (start, length) pairs."""

    n: int
    rows: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.rows)

    def support(self, i: int) -> frozenset[int]:
        """Column support of row i (1-based)."""
        start, length = self.rows[i - 1]
        return frozenset(norm_col(start + t, self.n) for t in range(length))

    def support_mask(self, i: int) -> int:
        """Support of row i as a bitmask (bit j-1 set for column j)."""
        start, length = self.rows[i - 1]
        mask = 0
        for t in range(length):
            mask |= 1 << (norm_col(start + t, self.n) - 1)
        return mask

    def row_vector(self, i: int) -> tuple[int, ...]:
        sup = self.support(i)
        return tuple(int(j in sup) for j in range(1, self.n + 1))

    def as_circulant(self) -> Circulant | None:
        """Return the (order, window) identity if the rows are exactly a circulant."""
        if self.m != self.n:
            return None
        lengths = {k for _, k in self.rows}
        if len(lengths) != 1:
            return None
        window = lengths.pop()
        if sorted(start for start, _ in self.rows) != list(range(1, self.n + 1)):
            return None
        if not 2 <= window <= self.n - 1:
            return None
        return Circulant(self.n, window)

    def dominating_rows(self) -> tuple[int, ...]:
        """Rows whose support strictly contains another row's support."""
        sups = [self.support(i) for i in range(1, self.m + 1)]
        out = []
        for i, si in enumerate(sups):
            if any(sj < si for j, sj in enumerate(sups) if j != i):
                out.append(i + 1)
        return tuple(out)


def circular_matrix(n: int, rows: Sequence[tuple[int, int]]) -> CircularMatrix:
    """Validated constructor.

    Raises BoundViolation for n < 3, a start outside 1..n, or a length
    outside [2, n-1]; DuplicateRow when two rows coincide; BadParameters for
    an empty row list.
    """
    if n < 3:
        raise BoundViolation(f"need n >= 3 columns, got {n}")
    if not rows:
        raise BadParameters("a circular matrix needs at least one row")
    seen = set()
    normed = []
    for start, length in rows:
        if not 1 <= start <= n:
            raise BoundViolation(f"row start {start} outside 1..{n}")
        if not 2 <= length <= n - 1:
            raise BoundViolation(f"row length {length} outside [2, {n - 1}]")
        key = (start, length)
        if key in seen:
            raise DuplicateRow(f"row {key} appears twice")
        seen.add(key)
        normed.append(key)
    return CircularMatrix(n, tuple(normed))


def circulant_matrix(order: int, window: int) -> CircularMatrix:
    Circulant(order, window)  # bounds check
    return circular_matrix(order, [(i, window) for i in range(1, order + 1)])


@dataclass(frozen=True)
class SupportMatrix:
    """A minor: surviving columns plus minimal distinct row supports.

    row_origins[r] lists the 1-based rows of the parent matrix whose
    restricted support equals rows[r].
    """

    columns: tuple[int, ...]
    rows: tuple[frozenset[int], ...]
    row_origins: tuple[tuple[int, ...], ...]


def contract(matrix: CircularMatrix, removed: Iterable[int]) -> SupportMatrix:
    """Delete the columns in `removed`, keep minimal distinct supports.

    removed may be empty (then only dominated/duplicated supports go away).
    Raises EmptyColumnSet if every column would be deleted, BoundViolation
    for a column outside 1..n.
    """
    gone = set()
    for j in removed:
        if not 1 <= j <= matrix.n:
            raise BoundViolation(f"column {j} outside 1..{matrix.n}")
        gone.add(j)
    if len(gone) == matrix.n:
        raise EmptyColumnSet("cannot delete every column")
    kept = tuple(j for j in range(1, matrix.n + 1) if j not in gone)

    by_support: dict[frozenset[int], list[int]] = {}
    for i in range(1, matrix.m + 1):
        sup = frozenset(matrix.support(i) - gone)
        by_support.setdefault(sup, []).append(i)

    supports = list(by_support)
    minimal = [
        s for s in supports
        if not any(t < s for t in supports)
    ]
    minimal.sort(key=lambda s: (len(s), sorted(s)))
    return SupportMatrix(
        columns=kept,
        rows=tuple(minimal),
        row_origins=tuple(tuple(by_support[s]) for s in minimal),
    )


@dataclass(frozen=True)
class CirculantMatch:
    """Witness that a support matrix is a circulant up to permutations.

    column_order is a cyclic arrangement of the columns; window i (0-based,
    wrapping) of length `window` equals the support of row row_order[i].
    Both permutations use the caller's labels (original column names,
    1-based row positions of the support matrix).
    """

    order: int
    window: int
    column_order: tuple[int, ...]
    row_order: tuple[int, ...]


def _as_supports(m) -> tuple[tuple[int, ...], tuple[frozenset[int], ...]]:
    if isinstance(m, SupportMatrix):
        return m.columns, m.rows
    if isinstance(m, CircularMatrix):
        cols = tuple(range(1, m.n + 1))
        return cols, tuple(m.support(i) for i in range(1, m.m + 1))
    raise BadParameters(f"expected a matrix, got {type(m).__name__}")


def circulant_isomorphic(m) -> CirculantMatch | None:
    """Decide whether row/column permutations turn m into a circulant.

    Works on a SupportMatrix (typically a contraction) or a CircularMatrix.
    Returns a CirculantMatch with the permutation witness, or None. The
    search anchors the smallest column first and tries extensions in
    ascending column order, so the witness is deterministic.
    """
    columns, supports = _as_supports(m)
    s = len(supports)
    if s != len(columns) or s < 3:
        return None
    sizes = {len(sup) for sup in supports}
    if len(sizes) != 1:
        return None
    window = sizes.pop()
    if not 2 <= window <= s - 1:
        return None
    support_set = set(supports)
    if len(support_set) != s:
        return None
    # each column must lie in exactly `window` rows
    for c in columns:
        if sum(c in sup for sup in supports) != window:
            return None

    cols_sorted = sorted(columns)
    order: list[int] = [cols_sorted[0]]
    used_cols = {cols_sorted[0]}
    used_windows: set[frozenset[int]] = set()

    def window_at(pos: int) -> frozenset[int]:
        return frozenset(order[(pos + t) % s] for t in range(window))

    def place(pos: int) -> bool:
        if pos == s:
            extra = []
            for t in range(s - window + 1, s):
                w = window_at(t)
                if w in used_windows or w not in support_set:
                    for e in extra:
                        used_windows.discard(e)
                    return False
                used_windows.add(w)
                extra.append(w)
            return True
        for c in cols_sorted:
            if c in used_cols:
                continue
            order.append(c)
            used_cols.add(c)
            w = None
            ok = True
            if pos >= window - 1:
                w = window_at(pos - window + 1)
                ok = w in support_set and w not in used_windows
                if ok:
                    used_windows.add(w)
            if ok and place(pos + 1):
                return True
            if w is not None and ok:
                used_windows.discard(w)
            order.pop()
            used_cols.discard(c)
        return False

    if not place(1):
        return None
    row_of = {sup: idx + 1 for idx, sup in enumerate(supports)}
    row_order = tuple(row_of[window_at(t)] for t in range(s))
    return CirculantMatch(s, window, tuple(order), row_order)


def interval_row(nodes: Iterable[int], n: int, must_contain: int | None = None) -> tuple[int, int]:
    """Validate a node set as a circular interval, return (start, length).

    Raises BoundViolation for nodes outside 1..n or a size outside [2, n-1],
    NotInterval when the set is not contiguous on the cycle or misses
    `must_contain`.
    """
    found = set()
    for j in nodes:
        if not 1 <= j <= n:
            raise BoundViolation(f"node {j} outside 1..{n}")
        found.add(j)
    if must_contain is not None and must_contain not in found:
        raise NotInterval(f"the set must contain {must_contain}")
    if not 2 <= len(found) <= n - 1:
        raise BoundViolation(f"set of size {len(found)}, need 2..{n - 1}")
    # a proper subset of the cycle is a circular interval iff exactly one
    # member has its successor outside the set
    ends = [j for j in found if norm_col(j + 1, n) not in found]
    if len(ends) != 1:
        raise NotInterval("not a circular interval")
    starts = [j for j in found if norm_col(j - 1, n) not in found]
    return starts[0], len(found)


def neighborhood_matrix(neighborhoods: Sequence[Iterable[int]]) -> CircularMatrix:
    """Build the closed-neighborhood matrix of a circular interval layout.

    neighborhoods[v-1] must be a circular interval of 1..n containing v,
    with 2 <= size <= n-1 (NotInterval / BoundViolation otherwise). Row v of
    the result is that interval, so covering it with multiplicities solves
    domination problems on the underlying graph.
    """
    n = len(neighborhoods)
    if n < 3:
        raise BoundViolation(f"need at least 3 nodes, got {n}")
    rows = [
        interval_row(neighborhoods[v - 1], n, must_contain=v)
        for v in range(1, n + 1)
    ]
    return circular_matrix(n, rows)


def web_neighborhoods(n: int, radius: int) -> list[list[int]]:
    """Closed neighborhoods of the web graph on n nodes (distance <= radius)."""
    if radius < 1 or 2 * radius + 1 > n - 1:
        raise BoundViolation(f"web radius {radius} does not fit on {n} nodes")
    return [
        [norm_col(v + d, n) for d in range(-radius, radius + 1)]
        for v in range(1, n + 1)
    ]


@dataclass(frozen=True)
class Instance:
    """A covering instance: circular matrix, integer demands, rational weights."""

    matrix: CircularMatrix
    demands: tuple[int, ...]
    weights: tuple

    def __post_init__(self):
        if len(self.demands) != self.matrix.m:
            raise BadParameters(
                f"{len(self.demands)} demands for {self.matrix.m} rows"
            )
        if len(self.weights) != self.matrix.n:
            raise BadParameters(
                f"{len(self.weights)} weights for {self.matrix.n} columns"
            )
        for b in self.demands:
            if not isinstance(b, int) or isinstance(b, bool) or b < 0:
                raise BadParameters(f"demands must be non-negative ints, got {b!r}")


def homogeneous_demands(matrix: CircularMatrix, alpha: int = 1) -> tuple[int, ...]:
    if not isinstance(alpha, int) or alpha < 1:
        raise BadParameters(f"demand level must be a positive int, got {alpha!r}")
    return (alpha,) * matrix.m
