"""Dense two-phase simplex over exact rationals.

Small, deterministic, and boring on purpose: Bland's rule everywhere (lowest
eligible column enters; ratio ties leave by lowest basic variable index), so
the solver cannot cycle and always returns the same vertex for the same
input. All variables are implicitly >= 0; senses are per-row strings
"<=", ">=", "==". Sizes in this package stay tiny (tens of rows/columns),
dense Fraction tableaus are more than fast enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadParameters

SENSES = ("<=", ">=", "==")


@dataclass
class LPResult:
    status: str                      # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None
    point: tuple[Fraction, ...] | None


def _pivot(tab, cost, basis, prow, pcol):
    pr = tab[prow]
    pv = pr[pcol]
    tab[prow] = [v / pv for v in pr]
    pr = tab[prow]
    for r, row in enumerate(tab):
        if r != prow and row[pcol] != 0:
            f = row[pcol]
            tab[r] = [a - f * b for a, b in zip(row, pr)]
    if cost[pcol] != 0:
        f = cost[pcol]
        for j, v in enumerate(pr):
            cost[j] -= f * v
    basis[prow] = pcol


def _reduced_costs(tab, basis, c):
    # c - c_B B^{-1} A, with the running objective value in the last slot
    ncols = len(tab[0]) - 1 if tab else len(c)
    cost = list(c) + [Fraction(0)]
    for row, b in zip(tab, basis):
        cb = c[b]
        if cb != 0:
            for j in range(ncols + 1):
                cost[j] -= cb * row[j]
    return cost


def _run_simplex(tab, cost, basis):
    ncols = len(tab[0]) - 1 if tab else len(cost) - 1
    while True:
        enter = None
        for j in range(ncols):
            if cost[j] < 0:
                enter = j
                break
        if enter is None:
            return "optimal"
        leave = None
        best = None
        for r, row in enumerate(tab):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[r] < basis[leave]
                ):
                    best = ratio
                    leave = r
        if leave is None:
            return "unbounded"
        _pivot(tab, cost, basis, leave, enter)


def solve_lp(objective, rows, senses, rhs, *, minimize=True) -> LPResult:
    """Optimize objective . x subject to rows[i] . x (sense_i) rhs_i, x >= 0."""
    nvars = len(objective)
    if not (len(rows) == len(senses) == len(rhs)):
        raise BadParameters("rows, senses, rhs must have equal length")
    for s in senses:
        if s not in SENSES:
            raise BadParameters(f"unknown sense {s!r}")
    obj = [Fraction(v) for v in objective]
    if not minimize:
        obj = [-v for v in obj]

    work = []
    for row, s, b in zip(rows, senses, rhs):
        if len(row) != nvars:
            raise BadParameters("constraint row of wrong length")
        coeffs = [Fraction(v) for v in row]
        b = Fraction(b)
        if b < 0:
            coeffs = [-v for v in coeffs]
            b = -b
            s = {"<=": ">=", ">=": "<=", "==": "=="}[s]
        work.append((coeffs, s, b))

    nslack = sum(1 for _, s, _ in work if s != "==")
    slack_base = nvars
    art_base = nvars + nslack
    nart = sum(1 for _, s, _ in work if s != "<=")
    total = art_base + nart

    tab = []
    basis = []
    si = 0
    ai = 0
    for coeffs, s, b in work:
        row = coeffs + [Fraction(0)] * (total - nvars) + [b]
        if s == "<=":
            row[slack_base + si] = Fraction(1)
            basis.append(slack_base + si)
            si += 1
        elif s == ">=":
            row[slack_base + si] = Fraction(-1)
            si += 1
            row[art_base + ai] = Fraction(1)
            basis.append(art_base + ai)
            ai += 1
        else:
            row[art_base + ai] = Fraction(1)
            basis.append(art_base + ai)
            ai += 1
        tab.append(row)

    if nart:
        c1 = [Fraction(0)] * art_base + [Fraction(1)] * nart
        cost = _reduced_costs(tab, basis, c1)
        status = _run_simplex(tab, cost, basis)
        assert status == "optimal", "phase 1 is always bounded"
        if -cost[-1] != 0:  # cost[-1] holds -(current value)
            return LPResult("infeasible", None, None)
        # pivot artificials out of the basis, dropping redundant rows
        keep = []
        for r in range(len(tab)):
            if basis[r] < art_base:
                keep.append(r)
                continue
            pcol = next(
                (j for j in range(art_base) if tab[r][j] != 0), None
            )
            if pcol is None:
                continue  # zero row, redundant constraint
            _pivot(tab, cost, basis, r, pcol)
            keep.append(r)
        tab = [tab[r][:art_base] + [tab[r][-1]] for r in keep]
        basis = [basis[r] for r in keep]
    else:
        tab = [row[:art_base] + [row[-1]] for row in tab]

    c2 = obj + [Fraction(0)] * nslack
    cost = _reduced_costs(tab, basis, c2)
    status = _run_simplex(tab, cost, basis)
    if status == "unbounded":
        return LPResult("unbounded", None, None)
    x = [Fraction(0)] * nvars
    for r, b in enumerate(basis):
        if b < nvars:
            x[b] = tab[r][-1]
    value = sum(o * v for o, v in zip(obj, x))
    if not minimize:
        value = -value
    return LPResult("optimal", value, tuple(x))


def lp_feasible(rows, senses, rhs, nvars) -> tuple[Fraction, ...] | None:
    """Phase-1 only convenience: a feasible point with x >= 0, or None."""
    res = solve_lp([Fraction(0)] * nvars, rows, senses, rhs)
    return res.point if res.status == "optimal" else None
