"""Dense two-phase simplex solver with Bland's anti-cycling rule.

Problems here are tiny (tens of variables, a few hundred rows), so the solver
keeps a full dense tableau and favours determinism and termination guarantees
over speed.  Every row gets an artificial variable, phase 1 drives their sum
to zero, phase 2 optimizes the real objective with artificial columns barred
from entering the basis.  Duals are read off the artificial columns, which
start out as the identity block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import NumericalFailure

_PIVOT_TOL = 1e-11
_OPT_TOL = 1e-9
_FEAS_TOL = 1e-9


class LPStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """maximize objective @ x subject to row @ x <= rhs for each constraint.

    ``bounds[i]`` is an (lo, hi) pair per variable; either end may be None and
    a missing ``bounds`` means every variable is free.  ``equalities`` holds
    extra rows with row @ x == rhs.
    """

    objective: np.ndarray
    constraints: tuple = ()
    bounds: tuple | None = None
    equalities: tuple = ()


@dataclass
class LPResult:
    status: LPStatus
    x: np.ndarray | None
    objective: float | None
    dual_ineq: np.ndarray | None = None
    dual_eq: np.ndarray | None = None
    iterations: int = 0


def lp_solve(lp: LinearProgram) -> LPResult:
    """Solve a small dense LP; deterministic for identical inputs."""
    c = np.asarray(lp.objective, dtype=float)
    nv = c.size
    if not np.all(np.isfinite(c)):
        raise NumericalFailure("non-finite objective")

    # Variable transform to y >= 0:
    #   free x        -> x = y+ - y-
    #   lo <= x       -> x = lo + y
    #   x <= hi       -> x = hi - y
    #   lo <= x <= hi -> x = lo + y plus an upper-bound row y <= hi - lo
    bounds = lp.bounds if lp.bounds is not None else [(None, None)] * nv
    if len(bounds) != nv:
        raise NumericalFailure("bounds length mismatch")
    col_of: list[tuple] = []  # per variable: ("pair", j_pos, j_neg) | ("shift", j, lo, sign)
    extra_rows: list[tuple[int, float]] = []  # (var index, ub on its y) rows
    ny = 0
    for i, (lo, hi) in enumerate(bounds):
        if lo is None and hi is None:
            col_of.append(("pair", ny, ny + 1))
            ny += 2
        elif lo is not None:
            col_of.append(("shift", ny, float(lo), 1.0))
            if hi is not None:
                extra_rows.append((i, float(hi) - float(lo)))
            ny += 1
        else:  # only upper bound
            col_of.append(("shift", ny, float(hi), -1.0))
            ny += 1

    def to_y_row(row: np.ndarray) -> tuple[np.ndarray, float]:
        """Rewrite row @ x as ry @ y + const."""
        row = np.asarray(row, dtype=float)
        ry = np.zeros(ny)
        const = 0.0
        for i, spec in enumerate(col_of):
            if spec[0] == "pair":
                ry[spec[1]] += row[i]
                ry[spec[2]] -= row[i]
            else:
                _, j, off, sign = spec
                ry[j] += sign * row[i]
                const += row[i] * off
        return ry, const

    ineq_rows: list[np.ndarray] = []
    ineq_rhs: list[float] = []
    for row, rhs in lp.constraints:
        ry, const = to_y_row(row)
        ineq_rows.append(ry)
        ineq_rhs.append(float(rhs) - const)
    for i, ub in extra_rows:
        ry = np.zeros(ny)
        spec = col_of[i]
        ry[spec[1]] = 1.0
        ineq_rows.append(ry)
        ineq_rhs.append(ub)
    eq_rows: list[np.ndarray] = []
    eq_rhs: list[float] = []
    for row, rhs in lp.equalities:
        ry, const = to_y_row(row)
        eq_rows.append(ry)
        eq_rhs.append(float(rhs) - const)

    mi, me = len(ineq_rows), len(eq_rows)
    m = mi + me
    if m == 0:
        raise NumericalFailure("LP needs at least one constraint")

    cy, cconst = to_y_row(c)

    # Tableau columns: [y (ny) | slacks (mi) | artificials (m) | rhs]
    ncols = ny + mi + m
    T = np.zeros((m, ncols + 1))
    sign = np.ones(m)
    for k in range(mi):
        T[k, :ny] = ineq_rows[k]
        T[k, ny + k] = 1.0
        T[k, -1] = ineq_rhs[k]
    for k in range(me):
        T[mi + k, :ny] = eq_rows[k]
        T[mi + k, -1] = eq_rhs[k]
    for k in range(m):
        if T[k, -1] < 0:
            T[k, :] *= -1.0
            sign[k] = -1.0
        T[k, ny + mi + k] = 1.0
    if not np.all(np.isfinite(T)):
        raise NumericalFailure("non-finite constraint data")

    basis = [ny + mi + k for k in range(m)]
    art_start = ny + mi
    max_iter = 10_000 * (ncols + m)
    iters = 0

    def pivot(zrow: np.ndarray, r: int, j: int) -> None:
        piv = T[r, j]
        T[r, :] /= piv
        col = T[:, j].copy()
        col[r] = 0.0
        T[:, :] -= np.outer(col, T[r, :])
        zrow -= zrow[j] * T[r, :]
        basis[r] = j

    def run_phase(obj: np.ndarray, allow_art: bool) -> np.ndarray:
        nonlocal iters
        # zrow = c_B B^-1 A - c over all columns (+ rhs giving c_B B^-1 b)
        zrow = -obj.copy()
        for r, bv in enumerate(basis):
            if obj[bv] != 0.0:
                zrow += obj[bv] * T[r, :]
        limit = ncols if allow_art else art_start
        while True:
            enter = -1
            for j in range(limit):  # Bland: first improving column
                if not allow_art and j >= art_start:
                    break
                if zrow[j] < -_OPT_TOL:
                    enter = j
                    break
            if enter < 0:
                return zrow
            col = T[:, enter]
            ratios = np.full(m, np.inf)
            pos = col > _PIVOT_TOL
            ratios[pos] = T[pos, -1] / col[pos]
            best = np.min(ratios)
            if not np.isfinite(best):
                raise _Unbounded()
            rows = np.nonzero(ratios <= best + 1e-12)[0]
            leave = min(rows, key=lambda r: basis[r])  # Bland tie-break
            pivot(zrow, int(leave), enter)
            iters += 1
            if iters > max_iter:
                raise NumericalFailure("simplex iteration cap exceeded")

    class _Unbounded(Exception):
        pass

    # Phase 1: maximize -sum(artificials)
    obj1 = np.zeros(ncols + 1)
    obj1[art_start : art_start + m] = -1.0
    try:
        run_phase(obj1, allow_art=True)
    except _Unbounded:  # cannot happen: phase-1 objective is bounded
        raise NumericalFailure("phase 1 unbounded")
    infeas = sum(T[r, -1] for r, bv in enumerate(basis) if bv >= art_start)
    if infeas > 1e-8:
        return LPResult(LPStatus.INFEASIBLE, None, None, iterations=iters)

    # Drive remaining zero-level artificials out of the basis where possible.
    for r in range(m):
        if basis[r] >= art_start:
            j = next((j for j in range(art_start) if abs(T[r, j]) > 1e-9), -1)
            if j >= 0:
                zdummy = np.zeros(ncols + 1)
                pivot(zdummy, r, j)

    # Phase 2: the real objective (artificials barred from entering).
    obj2 = np.zeros(ncols + 1)
    obj2[:ny] = cy
    try:
        zrow = run_phase(obj2, allow_art=False)
    except _Unbounded:
        return LPResult(LPStatus.UNBOUNDED, None, None, iterations=iters)

    y = np.zeros(ncols)
    for r, bv in enumerate(basis):
        y[bv] = T[r, -1]
    x = np.empty(nv)
    for i, spec in enumerate(col_of):
        if spec[0] == "pair":
            x[i] = y[spec[1]] - y[spec[2]]
        else:
            _, j, off, sgn = spec
            x[i] = off + sgn * y[j]

    # Duals from artificial columns (identity at start), unflipping row signs.
    w = zrow[art_start : art_start + m] * sign
    dual_ineq = w[:mi][: len(lp.constraints)].copy() if lp.constraints else np.zeros(0)
    dual_eq = w[mi:].copy()
    obj_val = float(c @ x)
    return LPResult(LPStatus.OPTIMAL, x, obj_val, dual_ineq, dual_eq, iters)


def convex_combination(points: np.ndarray, target: np.ndarray, tol: float = 1e-9):
    """Express ``target`` as a convex combination of ``points``.

    Returns (indices, weights) with at most dim+1 entries (a basic solution of
    the feasibility LP), or None when target is not in the convex hull within
    ``tol``.
    """
    pts = np.asarray(points, dtype=float)
    t = np.asarray(target, dtype=float)
    k, n = pts.shape
    eqs = [(pts[:, d].copy(), float(t[d])) for d in range(n)]
    eqs.append((np.ones(k), 1.0))
    lp = LinearProgram(
        objective=np.zeros(k),
        constraints=(),
        bounds=tuple((0.0, None) for _ in range(k)),
        equalities=tuple(eqs),
    )
    res = lp_solve(lp)
    if res.status is not LPStatus.OPTIMAL:
        return None
    lam = np.clip(res.x, 0.0, None)
    if abs(lam.sum() - 1.0) > tol or np.linalg.norm(lam @ pts - t) > tol:
        return None
    idx = np.nonzero(lam > 1e-12)[0]
    return idx, lam[idx]
