"""Deterministic test-body generators.

Smooth bodies (spherical caps of the disk, the rounded triangle of constant
width) are produced as inscribed polygon approximations whose vertices lie on
the true boundary; each generated body records the Hausdorff gap to the ideal
body in ``approx_error`` so downstream certified results stay sound.
"""

from __future__ import annotations

import math

import numpy as np

from .bodies import Body, polytope
from .errors import BadParameter
from .radii import normalize
from .rng import SplitMix64


def _check_m(m: int) -> None:
    if m < 8:
        raise BadParameter("resolution m must be at least 8")


def make_regular_simplex(n: int = 2, circumradius: float = 1.0) -> Body:
    """Regular n-simplex inscribed in a sphere of the given circumradius, centered at 0."""
    if n not in (2, 3):
        raise BadParameter("n must be 2 or 3")
    if not circumradius > 0:
        raise BadParameter("circumradius must be positive")
    if n == 2:
        ang = np.pi / 2 + 2 * np.pi * np.arange(3) / 3
        pts = circumradius * np.stack([np.cos(ang), np.sin(ang)], axis=1)
    else:
        pts = np.array(
            [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float
        ) * (circumradius / math.sqrt(3.0))
    return polytope(pts)


def make_segment(length: float = 2.0) -> Body:
    """Horizontal segment of the given length centered at the origin."""
    if not length > 0:
        raise BadParameter("length must be positive")
    h = 0.5 * length
    return polytope([[-h, 0.0], [h, 0.0]])


def make_ball_polygon(m: int = 256) -> Body:
    """Regular m-gon inscribed in the unit circle; Hausdorff gap 1 - cos(pi/m)."""
    _check_m(m)
    ang = 2 * np.pi * np.arange(m) / m
    pts = np.stack([np.cos(ang), np.sin(ang)], axis=1)
    return polytope(pts, approx_error=1.0 - math.cos(math.pi / m))


def make_cap(u, arc_vertices: int = 256) -> Body:
    """Unit disk truncated by the halfplane {x : <u, x> <= |u|^2}.

    Returned as the inscribed polygon with the two chord endpoints plus arc
    samples spaced at most 2*pi/arc_vertices apart, so the Hausdorff gap is at
    most 1 - cos(pi/arc_vertices).
    """
    _check_m(arc_vertices)
    u = np.asarray(u, dtype=float)
    if u.shape != (2,):
        raise BadParameter("cap direction u must be a 2-vector")
    nu = float(np.linalg.norm(u))
    if not (0.0 < nu < 1.0):
        raise BadParameter("cap needs 0 < |u| < 1")
    phi = math.atan2(u[1], u[0])
    theta0 = math.acos(nu)  # chord endpoints at phi +/- theta0
    arc = 2 * math.pi - 2 * theta0
    spacing_cap = 2 * math.pi / arc_vertices
    count = max(arc_vertices, int(math.ceil(arc / spacing_cap)) + 1)
    ang = np.linspace(phi + theta0, phi + 2 * math.pi - theta0, count)
    pts = np.stack([np.cos(ang), np.sin(ang)], axis=1)
    spacing = arc / (count - 1)
    return polytope(pts, approx_error=1.0 - math.cos(spacing / 2))


def make_reuleaux_triangle(m: int = 256) -> Body:
    """Constant-width completion of the inscribed equilateral triangle.

    Three circular arcs of radius sqrt(3) centered at the triangle vertices,
    sampled so the inscribed polygon is within 1 - cos(pi/m) of the true body.
    The sampling is exactly 3-fold symmetric.
    """
    _check_m(m)
    tri = make_regular_simplex(2, 1.0).points  # apex up, CCW
    side = math.sqrt(3.0)
    target = 1.0 - math.cos(math.pi / m)
    dmax = 2 * math.acos(max(-1.0, 1.0 - target / side))
    span = math.pi / 3  # each arc subtends 60 degrees
    count = int(math.ceil(span / dmax)) + 1
    # arc opposite tri[0]: centered at tri[0], from tri[1] to tri[2]
    c = tri[0]
    a1 = math.atan2(tri[1][1] - c[1], tri[1][0] - c[0])
    a2 = a1 + span  # sweep ends at the third vertex
    ang = np.linspace(a1, a2, count)
    arc0 = c + side * np.stack([np.cos(ang), np.sin(ang)], axis=1)
    rot = 2 * np.pi / 3
    R = np.array([[math.cos(rot), -math.sin(rot)], [math.sin(rot), math.cos(rot)]])
    arcs = [arc0, arc0 @ R.T, arc0 @ R.T @ R.T]
    pts = np.vstack(arcs)
    spacing = span / (count - 1)
    return polytope(pts, approx_error=side * (1.0 - math.cos(spacing / 2)))


def make_random_body(seed: int, vertex_count: int = 12) -> Body:
    """Hull of seeded uniform points in the unit disk, normalized in place.

    Fully deterministic per seed; the result has circumball equal to the unit
    ball.  Resamples (deterministically) in the measure-zero event that the
    hull degenerates to a segment.
    """
    if vertex_count < 3:
        raise BadParameter("vertex_count must be at least 3")
    rng = SplitMix64(seed)
    while True:
        pts = rng.disk_points(vertex_count)
        body = polytope(pts)
        if len(body.points) >= 3:
            return normalize(body)[0].body


def make_random_points_3d(seed: int, count: int) -> np.ndarray:
    """Seeded uniform point cloud in the unit ball of R^3."""
    if count < 2:
        raise BadParameter("count must be at least 2")
    return SplitMix64(seed).ball_points(count)
