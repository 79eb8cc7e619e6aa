"""Deterministic covering search over SO(3) with a provable covering radius.

Unit quaternions double-cover SO(3).  Up to sign, every unit quaternion has a
coordinate of absolute value >= 1/2, so projecting the four cube facets
{q_i = 1, |q_j| <= 1 for j != i} of R^4 onto S^3 covers all rotations.  A
uniform grid with cell half-width h on a facet leaves any facet point within
sqrt(3) h of a grid point; normalization onto S^3 does not increase chord
distances here (both points have norm >= 1), the geodesic is 2 asin(chord/2)
and rotation angles are twice quaternion geodesics.  Choosing

    k = ceil(sqrt(3) / (2 sin(delta / 4)))

cells per axis therefore guarantees covering radius <= delta in the rotation
angle metric d(R, R') = angle(R R'^T).
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .shubert import CertifiedMinimum


def quat_to_matrix(q: np.ndarray) -> np.ndarray:
    w, x, y, z = q
    return np.array(
        [
            [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
            [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
            [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
        ]
    )


def quats_to_matrices(Q: np.ndarray) -> np.ndarray:
    """Vectorized quaternion -> rotation matrix for an (N, 4) array."""
    w, x, y, z = Q[:, 0], Q[:, 1], Q[:, 2], Q[:, 3]
    R = np.empty((len(Q), 3, 3))
    R[:, 0, 0] = 1 - 2 * (y * y + z * z)
    R[:, 0, 1] = 2 * (x * y - w * z)
    R[:, 0, 2] = 2 * (x * z + w * y)
    R[:, 1, 0] = 2 * (x * y + w * z)
    R[:, 1, 1] = 1 - 2 * (x * x + z * z)
    R[:, 1, 2] = 2 * (y * z - w * x)
    R[:, 2, 0] = 2 * (x * z - w * y)
    R[:, 2, 1] = 2 * (y * z + w * x)
    R[:, 2, 2] = 1 - 2 * (x * x + y * y)
    return R


def rotation_angle(R: np.ndarray) -> float:
    """Rotation angle of R in [0, pi]."""
    t = (float(np.trace(R)) - 1.0) / 2.0
    return math.acos(min(1.0, max(-1.0, t)))


def axis_rotation(axis: int, angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    R = np.eye(3)
    i, j = [(1, 2), (0, 2), (0, 1)][axis]
    R[i, i] = c
    R[j, j] = c
    R[i, j] = -s if axis != 1 else s
    R[j, i] = s if axis != 1 else -s
    return R


def quaternion_cover(delta: float) -> tuple[np.ndarray, int]:
    """Unit quaternion grid with rotation-angle covering radius <= delta."""
    if not 0 < delta <= math.pi:
        raise ValueError("delta must be in (0, pi]")
    k = int(math.ceil(math.sqrt(3.0) / (2.0 * math.sin(delta / 4.0))))
    step = 2.0 / k
    grid1d = -1.0 + step * (np.arange(k) + 0.5)
    a, b, c = np.meshgrid(grid1d, grid1d, grid1d, indexing="ij")
    cell = np.stack([a.ravel(), b.ravel(), c.ravel()], axis=1)
    quats = []
    for axis in range(4):
        q = np.ones((len(cell), 4))
        cols = [j for j in range(4) if j != axis]
        q[:, cols] = cell
        quats.append(q)
    Q = np.vstack(quats)
    Q /= np.linalg.norm(Q, axis=1, keepdims=True)
    return Q, k


def so3_cover_minimize(
    f: Callable[[np.ndarray], float],
    delta: float,
    tol_local: float = 1e-3,
    max_evals: int | None = None,
    f_batch: Callable[[np.ndarray], np.ndarray] | None = None,
) -> CertifiedMinimum:
    """Minimize a 1-Lipschitz (w.r.t. rotation angle) function over SO(3).

    Evaluates f on a covering with radius <= delta, then polishes the best
    rotation by axis-angle coordinate descent with shrinking steps.  The
    certificate: true min >= grid_min - delta, so gap = value - grid_min +
    delta.  If the evaluation budget cuts the grid scan short, the gap from
    honest partial information is reported and ``converged`` is False.

    ``f_batch``, when given, must return f over an (N, 3, 3) rotation stack
    and is used to speed up the grid scan.
    """
    quats, _ = quaternion_cover(delta)
    evals = 0
    best_val = math.inf
    best_R = np.eye(3)
    budget = max_evals if max_evals is not None else len(quats) + 4096
    scanned = 0
    if f_batch is not None and budget >= len(quats):
        Rs = quats_to_matrices(quats)
        vals = np.asarray(f_batch(Rs), dtype=float)
        evals = scanned = len(quats)
        i = int(np.argmin(vals))
        best_val, best_R = float(vals[i]), Rs[i]
    else:
        for q in quats:
            if evals >= budget:
                break
            R = quat_to_matrix(q)
            v = float(f(R))
            evals += 1
            scanned += 1
            if v < best_val:
                best_val, best_R = v, R

    grid_min = best_val
    complete = scanned == len(quats)

    # local polish: shrink axis-angle steps from delta/2 down to tol_local
    step = delta / 2.0
    val, R = best_val, best_R
    while step > tol_local and evals < budget:
        improved = False
        for axis in range(3):
            for sgn in (1.0, -1.0):
                cand = axis_rotation(axis, sgn * step) @ R
                v = float(f(cand))
                evals += 1
                if v < val - 1e-15:
                    val, R = v, cand
                    improved = True
        if not improved:
            step *= 0.5

    if complete:
        gap = max(val - (grid_min - delta), 0.0)
        return CertifiedMinimum(R, val, gap, evals, True)
    return CertifiedMinimum(R, val, math.inf, evals, False)
