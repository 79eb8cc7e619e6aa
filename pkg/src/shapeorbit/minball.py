"""Smallest enclosing ball (Welzl, move-to-front) with an optimality certificate.

The recursion runs over the boundary set only (depth <= dim + 1); the point
scan at each level is iterative.  A deterministic seeded shuffle makes the
visiting order, and hence the reported support set, reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bodies import Body
from .errors import NumericalFailure
from .rng import SplitMix64
from .simplex import convex_combination

_IN_TOL = 1e-12


@dataclass(frozen=True)
class Circumball:
    center: np.ndarray
    radius: float
    support_points: np.ndarray  # (k, dim), k <= dim+1, on the bounding sphere


def _ball_through(boundary: list[np.ndarray]):
    """Smallest ball with all boundary points on its sphere, or None if degenerate."""
    k = len(boundary)
    if k == 0:
        return None
    q0 = boundary[0]
    if k == 1:
        return q0.copy(), 0.0
    D = np.array([q - q0 for q in boundary[1:]])
    G = D @ D.T
    rhs = 0.5 * np.einsum("ij,ij->i", D, D)
    try:
        x = np.linalg.solve(G, rhs)
    except np.linalg.LinAlgError:
        x = np.linalg.lstsq(G, rhs, rcond=None)[0]
    if not np.all(np.isfinite(x)):
        return None
    center = q0 + x @ D
    dists = np.linalg.norm(np.asarray(boundary) - center, axis=1)
    radius = float(np.max(dists))
    if radius - float(np.min(dists)) > 1e-9 * max(1.0, radius):
        return None  # boundary set is degenerate, no common sphere
    return center, radius


def smallest_enclosing_ball(points: np.ndarray, seed: int = 0):
    """Return (center, radius) of the minimum enclosing ball of a point set."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or len(pts) == 0:
        raise NumericalFailure("need a non-empty (m, n) point array")
    n = pts.shape[1]
    order = list(range(len(pts)))
    SplitMix64(seed).shuffle(order)
    work = [pts[i] for i in order]

    def mb(limit: int, boundary: list[np.ndarray]):
        ball = _ball_through(boundary)
        if len(boundary) == n + 1:
            return ball
        for i in range(limit):
            p = work[i]
            if ball is None or np.linalg.norm(p - ball[0]) > ball[1] * (1 + 1e-13) + _IN_TOL:
                ball = mb(i, boundary + [p])
                # move-to-front keeps hard points early on future scans
                work.insert(0, work.pop(i))
        return ball

    ball = mb(len(work), [])
    if ball is None:
        raise NumericalFailure("enclosing ball construction failed")
    return ball[0], float(ball[1])


def _certificate(pts: np.ndarray, center: np.ndarray, radius: float) -> np.ndarray:
    """Pick <= dim+1 boundary points whose hull contains the center."""
    if radius <= _IN_TOL:
        return pts[:1].copy()
    dist = np.linalg.norm(pts - center, axis=1)
    on = np.abs(dist - radius) <= 1e-9 * max(1.0, radius)
    boundary = pts[on]
    combo = convex_combination(boundary, center, tol=1e-8)
    if combo is None:
        raise NumericalFailure("enclosing-ball certificate not found")
    idx, _ = combo
    return boundary[idx]


def circumball(body: Body, seed: int = 0) -> Circumball:
    """Minimum enclosing ball of a body (core ball inflated by its radius)."""
    center, core_r = smallest_enclosing_ball(body.points, seed=seed)
    radius = core_r + body.radius
    if body.radius == 0.0:
        sup = _certificate(body.points, center, core_r)
    elif core_r <= _IN_TOL:
        # pure ball: any antipodal touching pair certifies the center
        e = np.zeros(body.dim)
        e[0] = 1.0
        sup = np.array([center + radius * e, center - radius * e])
    else:
        core_sup = _certificate(body.points, center, core_r)
        sup = center + (core_sup - center) * (radius / core_r)
    return Circumball(center, float(radius), np.asarray(sup))
