"""Radii functionals and circumball normalization.

Covers the classical size functionals of a convex body: circumradius R with
its center (the Chebyshev point), inradius r with a touching certificate,
diameter D and (2D) minimal width w, plus the retraction that rescales and
recenters a body so its smallest enclosing ball becomes the unit ball.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import minball
from .bodies import Body, Similarity, polytope, support
from .errors import (
    MissingHRep,
    NotNormalized,
    NumericalFailure,
    UnsupportedDimension,
)
from .simplex import LinearProgram, LPStatus, lp_solve

GEOM_TOL = 1e-9


def circumball(body: Body, seed: int = 0) -> minball.Circumball:
    return minball.circumball(body, seed=seed)


def circumradius(body: Body) -> float:
    return circumball(body).radius


def chebyshev_point(body: Body) -> np.ndarray:
    return circumball(body).center


@dataclass(frozen=True)
class NormalizedBody:
    """A body certified to have the unit ball as its circumball."""

    body: Body

    def __post_init__(self):
        cb = circumball(self.body)
        if abs(cb.radius - 1.0) > GEOM_TOL or np.linalg.norm(cb.center) > GEOM_TOL:
            raise NotNormalized(
                f"circumball is center={cb.center}, radius={cb.radius}, expected unit ball"
            )


def normalize(body: Body) -> tuple[NormalizedBody, Similarity]:
    """Recenter at the Chebyshev point and rescale by 1/R.

    Returns the normalized body together with the similarity g such that
    g(body) equals it.  The carried approximation error rescales by 1/R.
    """
    cb = circumball(body)
    scale = 1.0 / cb.radius
    g = Similarity(scale, np.eye(body.dim), -scale * cb.center)
    pts = (body.points - cb.center) * scale
    hrep = None
    if body.hrep is not None:
        A, b = body.hrep
        hrep = (A.copy(), (b - A @ cb.center) * scale)
    if body.kind == "polytope":
        out = polytope(pts, hrep=hrep, approx_error=body.approx_error * scale)
    else:
        out = Body(body.kind, body.dim, pts, body.radius * scale, None,
                   body.approx_error * scale)
    return NormalizedBody(out), g


def diameter(body: Body) -> float:
    """Largest distance between two points of the body (O(V^2) vertex scan)."""
    pts = body.points
    if len(pts) == 1:
        return 2.0 * body.radius
    diff = pts[:, None, :] - pts[None, :, :]
    d = float(np.sqrt(np.max(np.einsum("ijk,ijk->ij", diff, diff))))
    return d + 2.0 * body.radius


def polygon_edge_normals(body: Body) -> tuple[np.ndarray, np.ndarray]:
    """Outward unit edge normals and offsets of a 2D core polygon (CCW)."""
    pts = body.points
    edges = np.roll(pts, -1, axis=0) - pts
    normals = np.stack([edges[:, 1], -edges[:, 0]], axis=1)
    lens = np.linalg.norm(normals, axis=1)
    if np.any(lens < 1e-15):
        raise NumericalFailure("degenerate polygon edge")
    normals /= lens[:, None]
    offsets = np.einsum("ij,ij->i", normals, pts)
    return normals, offsets


@dataclass(frozen=True)
class Incircle:
    center: np.ndarray
    radius: float
    touching_normals: np.ndarray  # (k, dim) unit normals of touching halfspaces


def _halfspaces(body: Body):
    if body.dim == 2:
        normals, offsets = polygon_edge_normals(body)
    else:
        if body.hrep is None:
            raise MissingHRep("3D inradius needs facet halfspaces (hrep)")
        normals, offsets = body.hrep
    return normals, offsets


def inradius(body: Body) -> Incircle:
    """Largest inscribed ball via the LP max t s.t. a_j . c + t <= b_j.

    The touching certificate comes from the optimal LP duals: nonzero
    multipliers y_j satisfy sum y_j a_j = 0, sum y_j = 1, so the origin lies in
    the convex hull of the touching normals.
    """
    n = body.dim
    if body.kind == "ball":
        e = np.zeros(n)
        e[0] = 1.0
        return Incircle(body.points[0].copy(), body.radius, np.array([e, -e]))
    if len(body.points) == 2:
        seg = body.points
        center = 0.5 * (seg[0] + seg[1])
        if body.radius == 0.0:
            return Incircle(center, 0.0, np.zeros((0, n)))
        d = seg[1] - seg[0]
        d = d / np.linalg.norm(d)
        if n == 2:
            normal = np.array([d[1], -d[0]])
        else:
            helper = np.eye(3)[int(np.argmin(np.abs(d)))]
            normal = np.cross(d, helper)
            normal /= np.linalg.norm(normal)
        return Incircle(center, body.radius, np.array([normal, -normal]))

    normals, offsets = _halfspaces(body)
    obj = np.zeros(n + 1)
    obj[n] = 1.0
    rows = tuple(
        (np.concatenate([normals[j], [1.0]]), float(offsets[j]))
        for j in range(len(normals))
    )
    res = lp_solve(LinearProgram(objective=obj, constraints=rows))
    if res.status is not LPStatus.OPTIMAL:
        raise NumericalFailure(f"inradius LP ended with status {res.status}")
    center = res.x[:n]
    t = float(res.x[n])
    touching = normals[np.asarray(res.dual_ineq) > 1e-12]
    core_r = max(t, 0.0)
    return Incircle(center, core_r + body.radius, np.asarray(touching))


def width_2d(body: Body) -> float:
    """Minimal distance between parallel supporting lines (attained at an edge normal)."""
    if body.dim != 2:
        raise UnsupportedDimension("minimal width is implemented for n=2 only")
    if body.kind == "ball":
        return 2.0 * body.radius
    normals, _ = polygon_edge_normals(body)
    best = np.inf
    for a in normals:
        w = support(body, a)[0] + support(body, -a)[0]
        best = min(best, w)
    return float(best)
