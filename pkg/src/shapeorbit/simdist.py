"""Multiplicative containment distances over dilation and similarity groups.

d_G(K, L) is the smallest alpha >= 1 admitting K inside a G-image of L inside
alpha*K + z.  With the rotation fixed, the best positive-dilation fit is one
small LP; minimizing that LP value over the rotation angle (uniform grid plus
golden-section refinement around the best cell, seeded with the shape
pseudometric's optimal angle) gives a sound upper bound for the similarity
group.  Witnesses are always re-verified with support functions, independent
of the LP solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bodies import Body, apply_similarity, rot2, Similarity, support
from .bounds import functional_profile, sim_sandwich
from .errors import BadParameter, NumericalFailure
from .metric import pseudometric
from .radii import polygon_edge_normals
from .simplex import LinearProgram, LPStatus, lp_solve

TWO_PI = 2.0 * math.pi
_WITNESS_TOL = 1e-8
_GOLD = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SimDistanceResult:
    value: float
    mode: str  # "certified" | "heuristic"
    gap: float
    witness: dict  # {"lam", "sigma", "u", "alpha", "z"}
    sandwich: tuple[float, float] | None = None
    angle: float | None = None
    reflected: bool = False
    lp_count: int = 0


def _require_polygon(body: Body, name: str) -> None:
    if body.dim != 2 or body.kind != "polytope" or len(body.points) < 3:
        raise BadParameter(f"{name} must be a full-dimensional 2D polytope")


def containment_lp(K: Body, L_img: Body):
    """Best positive dilation fit of L_img between K and alpha*K + z.

    Minimizes alpha over (lam, u, alpha, z) subject to
    K inside lam*L_img + u inside alpha*K + z, with lam >= 1e-9.
    Constraints are aggregated with support functions: for each facet
    (a, b) of L_img require h_K(a) <= lam*b + a.u, and for each facet (c, d)
    of K require lam*h_L(c) + c.(u - z) <= alpha*d.
    Returns (alpha, lam, u, z).
    """
    _require_polygon(K, "K")
    _require_polygon(L_img, "L_img")
    AL, bL = polygon_edge_normals(L_img)
    AK, bK = polygon_edge_normals(K)
    # variables: [lam, u0, u1, alpha, z0, z1]
    rows = []
    for a, b in zip(AL, bL):
        hK = support(K, a)[0]
        rows.append((np.array([-b, -a[0], -a[1], 0.0, 0.0, 0.0]), -hK))
    for c, d in zip(AK, bK):
        hL = support(L_img, c)[0]
        rows.append((np.array([hL, c[0], c[1], -d, -c[0], -c[1]]), 0.0))
    obj = np.array([0.0, 0.0, 0.0, -1.0, 0.0, 0.0])  # maximize -alpha
    bounds = ((1e-9, None), (None, None), (None, None), (None, None), (None, None), (None, None))
    res = lp_solve(LinearProgram(objective=obj, constraints=tuple(rows), bounds=bounds))
    if res.status is not LPStatus.OPTIMAL:
        raise NumericalFailure(f"containment LP status {res.status}")
    lam, u0, u1, alpha, z0, z1 = res.x
    return float(alpha), float(lam), np.array([u0, u1]), np.array([z0, z1])


def check_witness(K: Body, L: Body, witness: dict, tol: float = _WITNESS_TOL) -> bool:
    """Verify K in lam*sigma(L)+u in alpha*K+z with support functions only."""
    lam = witness["lam"]
    sigma = np.asarray(witness["sigma"])
    u = np.asarray(witness["u"])
    alpha = witness["alpha"]
    z = np.asarray(witness["z"])
    mid = apply_similarity(Similarity(lam, sigma, u), L)
    Amid, bmid = polygon_edge_normals(mid)
    for a, b in zip(Amid, bmid):
        if support(K, a)[0] > b + tol:
            return False
    AK, bK = polygon_edge_normals(K)
    for c, d in zip(AK, bK):
        if support(mid, c)[0] - np.dot(c, z) > alpha * d + tol:
            return False
    return True


def _rotated(L: Body, theta: float, reflected: bool) -> Body:
    sigma = rot2(theta) @ (np.diag([1.0, -1.0]) if reflected else np.eye(2))
    return apply_similarity(Similarity(1.0, sigma, np.zeros(2)), L)


def d_dil(K: Body, L: Body) -> SimDistanceResult:
    """Exact positive-dilation distance (identity rotation, single LP)."""
    alpha, lam, u, z = containment_lp(K, L)
    witness = {"lam": lam, "sigma": np.eye(2), "u": u, "alpha": alpha, "z": z}
    if not check_witness(K, L, witness):
        raise NumericalFailure("dilation witness failed verification")
    return SimDistanceResult(alpha, "certified", 0.0, witness, None, 0.0, False, 1)


def d_sim(
    K: Body,
    L: Body,
    angle_tol: float = TWO_PI / 720.0,
    metric_tol: float = 1e-4,
    extra_angles: tuple = (),
) -> SimDistanceResult:
    """Similarity-group distance as a verified upper bound.

    Scans both orthogonal components on a uniform angle grid of step
    ``angle_tol``, seeds the grid with the pseudometric's optimal rotation,
    then refines the best cell by golden-section search.  The returned value
    is a sound upper bound (the witness is re-verified); the attached sandwich
    interval from the certified pseudometric brackets the true distance.
    """
    _require_polygon(K, "K")
    _require_polygon(L, "L")
    if angle_tol <= 0:
        raise BadParameter("angle_tol must be positive")

    met = pseudometric(K, L, metric_tol)
    lp_count = 0
    best = [math.inf, 0.0, False]  # value, angle, reflected

    def alpha_at(theta: float, refl: bool) -> float:
        nonlocal lp_count
        lp_count += 1
        v = containment_lp(K, _rotated(L, theta, refl))[0]
        if v < best[0]:
            best[0], best[1], best[2] = v, theta, refl
        return v

    steps = max(8, int(math.ceil(TWO_PI / angle_tol)))
    grid = [TWO_PI * i / steps for i in range(steps)]
    for refl in (False, True):
        seeds = [a for a, r in extra_angles if r == refl]
        if met.angle is not None and met.reflected == refl:
            seeds.append(met.angle)
        for theta in list(grid) + seeds:
            alpha_at(theta, refl)

    # golden-section refinement inside the best cell
    refl = best[2]
    lo, hi = best[1] - TWO_PI / steps, best[1] + TWO_PI / steps
    x1 = hi - _GOLD * (hi - lo)
    x2 = lo + _GOLD * (hi - lo)
    f1, f2 = alpha_at(x1, refl), alpha_at(x2, refl)
    for _ in range(60):
        if hi - lo < 1e-12:
            break
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLD * (hi - lo)
            f1 = alpha_at(x1, refl)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLD * (hi - lo)
            f2 = alpha_at(x2, refl)

    value, theta0, refl = best
    alpha, lam, u, z = containment_lp(K, _rotated(L, theta0, refl))
    lp_count += 1
    value = min(value, alpha)
    sigma = rot2(theta0) @ (np.diag([1.0, -1.0]) if refl else np.eye(2))
    witness = {"lam": lam, "sigma": sigma, "u": u, "alpha": alpha, "z": z}
    if not check_witness(K, L, witness):
        raise NumericalFailure("similarity witness failed verification")

    pk = functional_profile(K)
    pl = functional_profile(L)
    sandwich = sim_sandwich((met.lower, met.value), pk, pl)
    return SimDistanceResult(value, "heuristic", TWO_PI / steps, witness, sandwich, theta0, refl, lp_count)


def rho_g(value) -> float:
    """Log form of a containment distance: additive pseudometric."""
    v = value.value if isinstance(value, SimDistanceResult) else float(value)
    if v < 1.0 - 1e-9:
        raise BadParameter("containment distances are >= 1")
    return math.log(max(v, 1.0))
