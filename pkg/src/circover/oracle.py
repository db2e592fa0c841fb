"""Ground-truth oracle: brute force over the integer box.

Everything here is deliberately independent of the structural machinery so
it can adjudicate it. Minimal covers come from a full scan of the box
[0, max(b)]^n (minimality is checked by single decrements, which is the same
as global minimality because feasibility is monotone in x). The facet test
is an exact affine-rank computation, the full hull comes from a plain double
description run on the dual cone, and membership is a phase-1 LP.

The box scan is guarded by a budget in box points, default (3+1)^9: enough
for every instance with n <= 9 and demands up to 3, the intended desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .errors import BadParameters, BudgetExceeded, NegativeCoefficient
from .linalg import exact_rank, invert
from .lp import solve_lp
from .matrices import CircularMatrix

DEFAULT_BUDGET = 4 ** 9


def enumerate_minimal_covers(
    matrix: CircularMatrix, demands, budget: int | None = None
) -> tuple[tuple[int, ...], ...]:
    """All minimal integer covers, in lexicographic order."""
    if len(demands) != matrix.m:
        raise BadParameters("one demand per row required")
    if any(b < 0 for b in demands):
        raise BadParameters("demands must be non-negative")
    budget = DEFAULT_BUDGET if budget is None else budget
    n = matrix.n
    maxb = max(demands, default=0)
    if (maxb + 1) ** n > budget:
        raise BudgetExceeded(
            f"box of {(maxb + 1) ** n} points exceeds budget {budget}"
        )
    supports = [sorted(matrix.support(i)) for i in range(1, matrix.m + 1)]
    cols_rows: list[list[int]] = [[] for _ in range(n + 1)]
    for ridx, sup in enumerate(supports):
        for j in sup:
            cols_rows[j].append(ridx)
    out = []
    for x in product(range(maxb + 1), repeat=n):
        sums = [sum(x[j - 1] for j in sup) for sup in supports]
        if any(s < b for s, b in zip(sums, demands)):
            continue
        minimal = True
        for j in range(1, n + 1):
            if x[j - 1] == 0:
                continue
            if all(sums[r] - demands[r] >= 1 for r in cols_rows[j]):
                minimal = False
                break
        if minimal:
            out.append(x)
    return tuple(out)


def check_validity(inequality, covers) -> bool:
    """Does every cover satisfy the inequality? (coefficients must be >= 0)"""
    if any(c < 0 for c in inequality.coeffs):
        raise NegativeCoefficient(f"negative coefficient in {inequality.coeffs}")
    return all(
        sum(c * v for c, v in zip(inequality.coeffs, cover)) >= inequality.rhs
        for cover in covers
    )


def check_facet(inequality, covers, n: int) -> bool:
    """Exact facet test against the cover list.

    The polyhedron conv(covers) + R^n_+ is full-dimensional, so the
    inequality defines a facet iff it is valid, tight somewhere, and the
    tight covers together with the unit rays of its zero coefficients span
    an affine space of dimension n-1.
    """
    if not covers:
        return False
    if not check_validity(inequality, covers):
        return False
    tight = [
        cover for cover in covers
        if sum(c * v for c, v in zip(inequality.coeffs, cover)) == inequality.rhs
    ]
    if not tight:
        return False
    base = tight[0]
    vectors = [
        [a - b for a, b in zip(cover, base)] for cover in tight[1:]
    ]
    for j, c in enumerate(inequality.coeffs):
        if c == 0:
            vectors.append([int(t == j) for t in range(n)])
    return exact_rank(vectors) == n - 1


def membership(point, covers) -> bool:
    """Is the point in conv(covers) + R^n_+? Phase-1 LP, exact."""
    if not covers:
        return False
    n = len(point)
    k = len(covers)
    rows = []
    senses = []
    rhs = []
    rows.append([Fraction(1)] * k)
    senses.append("==")
    rhs.append(Fraction(1))
    for j in range(n):
        rows.append([Fraction(cover[j]) for cover in covers])
        senses.append("<=")
        rhs.append(Fraction(point[j]))
    res = solve_lp([Fraction(0)] * k, rows, senses, rhs)
    return res.status == "optimal"


def _primitive(vec) -> tuple[int, ...]:
    denom = 1
    for v in vec:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class HullDescription:
    facets: tuple            # LinearInequality tuple, sorted
    covers: tuple
    n: int


def hull_facets(matrix: CircularMatrix, demands, budget: int | None = None) -> HullDescription:
    """Complete facet list of the integer covering hull, by double description.

    Runs on the dual cone in R^{n+1}: a valid inequality a.x >= a0 with
    a >= 0 corresponds to a ray (-a0, a) of the cone cut out by the unit
    constraints and one constraint (1, cover) per minimal cover. Extreme
    rays of that cone are exactly the facets of the hull plus the trivial
    ray (1, 0) (the inequality 0 >= -1), which is dropped.
    """
    from .inequalities import make_inequality  # local import, no cycle

    covers = enumerate_minimal_covers(matrix, demands, budget)
    n = matrix.n
    cons: list[tuple[int, ...]] = []
    for j in range(n):
        cons.append(tuple(int(t == j + 1) for t in range(n + 1)))
    for cover in covers:
        cons.append((1,) + tuple(cover))

    base = [list(map(Fraction, cons[t])) for t in range(n + 1)]
    binv = invert(base)
    assert binv is not None, "unit rows plus one cover row are independent"
    rays = []
    for j in range(n + 1):
        vec = _primitive([binv[i][j] for i in range(n + 1)])
        rays.append(vec)

    def dot(c, r):
        return sum(a * b for a, b in zip(c, r))

    def zmask(vec, upto):
        m = 0
        for t in range(upto):
            if dot(cons[t], vec) == 0:
                m |= 1 << t
        return m

    masks = [zmask(r, n + 1) for r in rays]

    for t in range(n + 1, len(cons)):
        h = cons[t]
        vals = [dot(h, r) for r in rays]
        if all(v >= 0 for v in vals):
            masks = [
                m | ((v == 0) << t) for m, v in zip(masks, vals)
            ]
            continue
        keep_rays = []
        keep_masks = []
        pos = []
        neg = []
        for r, v, m in zip(rays, vals, masks):
            if v > 0:
                pos.append((r, v, m))
                keep_rays.append(r)
                keep_masks.append(m)
            elif v == 0:
                keep_rays.append(r)
                keep_masks.append(m | (1 << t))
            else:
                neg.append((r, v, m))
        for rp, vp, mp in pos:
            for rn, vn, mn in neg:
                common = mp & mn
                adjacent = True
                for r2, m2 in zip(rays, masks):
                    if r2 is rp or r2 is rn:
                        continue
                    if common & m2 == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = [vp * b - vn * a for a, b in zip(rp, rn)]
                vec = _primitive([Fraction(v) for v in combo])
                keep_rays.append(vec)
                keep_masks.append(zmask(vec, t + 1))
        rays = keep_rays
        masks = keep_masks

    facets = []
    for vec in rays:
        a0, coeffs = vec[0], vec[1:]
        if all(c == 0 for c in coeffs):
            continue  # the trivial ray (1, 0, ..., 0)
        assert all(c >= 0 for c in coeffs)
        facets.append(make_inequality(coeffs, -a0, kind="hull"))
    facets.sort(key=lambda q: (q.coeffs, q.rhs))
    return HullDescription(tuple(facets), covers, n)
