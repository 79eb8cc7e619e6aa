"""Certified 1D global minimization of Lipschitz functions (sawtooth envelope).

Classic branch-and-bound: an interval [a, b] with endpoint values fa, fb has
the lower envelope minimum (fa + fb)/2 - L (b - a)/2 at the crossing point of
the two slopes.  Intervals live in a min-heap keyed by that bound; the gap
between the incumbent and the smallest bound certifies optimality.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable


@dataclass(frozen=True)
class CertifiedMinimum:
    """Result with a guaranteed enclosure: true min in [value - gap, value]."""

    argmin: object
    value: float
    gap: float
    evaluations: int
    converged: bool


def lipschitz_minimize_1d(
    f: Callable[[float], float],
    a: float,
    b: float,
    lipschitz: float,
    tol: float,
    max_evals: int | None = None,
    fa: float | None = None,
    fb: float | None = None,
) -> CertifiedMinimum:
    """Minimize an L-Lipschitz f on [a, b] to within tol, with certified gap.

    When the evaluation budget binds, the best-so-far point is returned with
    its honest (> tol) gap instead of raising.
    """
    if not (lipschitz > 0 and tol > 0 and b >= a):
        raise ValueError("need lipschitz > 0, tol > 0, b >= a")
    if max_evals is None:
        max_evals = int(math.ceil(lipschitz * (b - a) / tol)) + 64

    evals = 0

    def ev(x: float) -> float:
        nonlocal evals
        evals += 1
        return float(f(x))

    fa = ev(a) if fa is None else float(fa)
    if b == a:
        return CertifiedMinimum(a, fa, 0.0, evals, True)
    fb = ev(b) if fb is None else float(fb)
    best_x, best_f = (a, fa) if fa <= fb else (b, fb)

    def bound(x0, f0, x1, f1):
        return 0.5 * (f0 + f1) - 0.5 * lipschitz * (x1 - x0)

    heap = [(bound(a, fa, b, fb), a, fa, b, fb)]
    while heap:
        lb, x0, f0, x1, f1 = heap[0]
        gap = best_f - lb
        if gap <= tol:
            return CertifiedMinimum(best_x, best_f, max(gap, 0.0), evals, True)
        if evals >= max_evals:
            return CertifiedMinimum(best_x, best_f, max(gap, 0.0), evals, False)
        heapq.heappop(heap)
        xm = 0.5 * (x0 + x1) + (f0 - f1) / (2.0 * lipschitz)
        xm = min(max(xm, x0 + 1e-15), x1 - 1e-15)
        fm = ev(xm)
        if fm < best_f:
            best_x, best_f = xm, fm
        heapq.heappush(heap, (bound(x0, f0, xm, fm), x0, f0, xm, fm))
        heapq.heappush(heap, (bound(xm, fm, x1, f1), xm, fm, x1, f1))
    return CertifiedMinimum(best_x, best_f, 0.0, evals, True)
