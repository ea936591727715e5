"""Two-phase primal simplex over exact rationals.

Solves  max c.x  s.t.  A x <= b,  x >= 0  with Fraction arithmetic and
Bland's anti-cycling rule.  Small and dense on purpose: the LPs here have a
handful of path variables, and verdicts feed theorem checks, so no floating
point or tolerance is acceptable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: Optional[list[Fraction]] = None
    value: Optional[Fraction] = None
    dual: Optional[list[Fraction]] = None


def _pivot(T, basis, prow, pcol):
    piv = T[prow][pcol]
    T[prow] = [v / piv for v in T[prow]]
    for r, row in enumerate(T):
        if r != prow and row[pcol] != 0:
            factor = row[pcol]
            T[r] = [v - factor * p for v, p in zip(row, T[prow])]
    basis[prow] = pcol


def _optimize(T, basis, obj, allowed):
    """Run simplex steps on constraint rows T with objective row obj.

    obj holds reduced costs z_j - c_j (last entry: -current value for a max
    problem after pricing out).  Only columns in `allowed` may enter.
    """
    m = len(T)
    while True:
        enter = -1
        for j in sorted(allowed):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave = -1
        best = None
        for r in range(m):
            a = T[r][enter]
            if a > 0:
                ratio = T[r][-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[r] < basis[leave]
                ):
                    best = ratio
                    leave = r
        if leave < 0:
            return UNBOUNDED
        _pivot(T, basis, leave, enter)
        factor = obj[enter]
        obj[:] = [v - factor * p for v, p in zip(obj, T[leave])]


def _price_out(T, basis, cost, ncols):
    """Objective row [z_j - c_j ... | z] for the current basis.

    The rhs slot carries +z so the shared pivot update keeps it current.
    """
    obj = [-cost[j] for j in range(ncols)] + [Fraction(0)]
    for r, bcol in enumerate(basis):
        cb = cost[bcol]
        if cb != 0:
            for j in range(ncols + 1):
                obj[j] += cb * T[r][j]
    return obj


def solve(
    c: Sequence, A: Sequence[Sequence], b: Sequence
) -> LPResult:
    """Maximize c.x subject to A x <= b, x >= 0 (everything exact)."""
    m = len(A)
    n = len(c)
    c = [Fraction(v) for v in c]
    b = [Fraction(v) for v in b]
    rows = [[Fraction(v) for v in row] for row in A]
    for row in rows:
        assert len(row) == n

    nslack = m
    sign = [1] * m
    art_rows = [i for i in range(m) if b[i] < 0]
    nart = len(art_rows)
    ncols = n + nslack + nart

    T: list[list[Fraction]] = []
    basis: list[int] = []
    art_col = {}
    for k, i in enumerate(art_rows):
        art_col[i] = n + nslack + k
    for i in range(m):
        row = [Fraction(0)] * (ncols + 1)
        mult = Fraction(1)
        if b[i] < 0:
            mult = Fraction(-1)
            sign[i] = -1
        for j in range(n):
            row[j] = mult * rows[i][j]
        row[n + i] = mult
        row[-1] = mult * b[i]
        if i in art_col:
            row[art_col[i]] = Fraction(1)
            basis.append(art_col[i])
        else:
            basis.append(n + i)
        T.append(row)

    if nart:
        cost1 = [Fraction(0)] * ncols
        for i in art_rows:
            cost1[art_col[i]] = Fraction(-1)
        obj = _price_out(T, basis, cost1, ncols)
        status = _optimize(T, basis, obj, range(ncols))
        assert status == OPTIMAL, "phase 1 cannot be unbounded"
        if obj[-1] != 0:  # -value != 0  =>  some artificial stuck positive
            return LPResult(INFEASIBLE)
        # Drive leftover artificials out of the basis.
        arts = set(art_col.values())
        for r in range(m):
            if basis[r] in arts:
                pcol = next(
                    (j for j in range(n + nslack) if T[r][j] != 0), None
                )
                if pcol is None:
                    continue  # redundant row; harmless to keep
                _pivot(T, basis, r, pcol)

    cost2 = c + [Fraction(0)] * (nslack + nart)
    obj = _price_out(T, basis, cost2, ncols)
    status = _optimize(T, basis, obj, range(n + nslack))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for r, bcol in enumerate(basis):
        if bcol < n:
            x[bcol] = T[r][-1]
    dual = [sign[i] * obj[n + i] for i in range(m)]
    return LPResult(OPTIMAL, x=x, value=obj[-1], dual=dual)
