"""Hausdorff distance between convex bodies via support functions.

For convex K, L the Hausdorff distance equals sup over unit directions u of
|h_K(u) - h_L(u)|.  In 2D both support functions are piecewise sinusoids over
the merged normal fans, so the supremum is solved in closed form per arc:
each arc contributes A cos(t) + B sin(t) + C whose extrema are the arc
endpoints and the stationary points of the sinusoid.  Fixed breakpoints every
pi/4 keep arcs short enough that the stationary-point test is single valued.

In 3D (or as a cross-check in 2D) a covering set of directions gives a lower
bound, promoted to a two-sided bracket through the Lipschitz bound
|h_X(u) - h_X(v)| <= max_vertex_norm(X) * |u - v|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bodies import Body, support_values
from .errors import DimensionMismatch, UnsupportedDimension

TWO_PI = 2.0 * math.pi
_EIGHT = np.arange(8) * (math.pi / 4.0)


@dataclass(frozen=True)
class HausdorffResult:
    lower: float
    upper: float
    witness_direction: np.ndarray

    @property
    def value(self) -> float:
        return self.upper


@dataclass(frozen=True)
class SupportProfile:
    """Per-body precomputation for fast support evaluation on S^1.

    ``fan`` holds the sorted arc-start angles; the vertex supporting
    directions in [fan[j-1], fan[j]) is ``pts[j]`` (indices mod m).
    """

    pts: np.ndarray
    rad: float
    fan: np.ndarray

    @property
    def max_norm(self) -> float:
        return float(np.max(np.linalg.norm(self.pts, axis=1)))


def support_profile(body: Body) -> SupportProfile:
    if body.dim != 2:
        raise UnsupportedDimension("support profiles are 2D only")
    pts = body.points
    if len(pts) == 1:
        return SupportProfile(pts.copy(), body.radius, np.array([0.0]))
    edges = np.roll(pts, -1, axis=0) - pts
    phi = np.mod(np.arctan2(-edges[:, 0], edges[:, 1]), TWO_PI)  # outward normals
    k = int(np.argmin(phi))
    fan = np.roll(phi, -k)
    verts = np.roll(pts, -k, axis=0)
    return SupportProfile(verts, body.radius, fan)


def _profile_distance(pk: SupportProfile, pl: SupportProfile, theta: float):
    """sup over directions of |h_K(u) - h_{R_theta L}(u)| with its witness angle."""
    mk, ml = len(pk.fan), len(pl.fan)
    lang = np.mod(pl.fan + theta, TWO_PI)
    breaks = np.sort(np.concatenate([pk.fan, lang, _EIGHT]))
    nxt = np.empty_like(breaks)
    nxt[:-1] = breaks[1:]
    nxt[-1] = TWO_PI

    mids = 0.5 * (breaks + nxt)
    vk = pk.pts[np.searchsorted(pk.fan, mids, side="right") % mk]
    wl = pl.pts[np.searchsorted(pl.fan, np.mod(mids - theta, TWO_PI), side="right") % ml]
    c, s = math.cos(theta), math.sin(theta)
    A = vk[:, 0] - (c * wl[:, 0] - s * wl[:, 1])
    B = vk[:, 1] - (s * wl[:, 0] + c * wl[:, 1])
    C = pk.rad - pl.rad

    dl = np.abs(A * np.cos(breaks) + B * np.sin(breaks) + C)
    dr = np.abs(A * np.cos(nxt) + B * np.sin(nxt) + C)
    amp = np.hypot(A, B)
    astar = np.mod(np.arctan2(B, A), TWO_PI)
    alo = np.mod(astar + math.pi, TWO_PI)
    hi_in = (astar >= breaks) & (astar <= nxt)
    lo_in = (alo >= breaks) & (alo <= nxt)
    dhi = np.where(hi_in, np.abs(amp + C), -1.0)
    dlo = np.where(lo_in, np.abs(C - amp), -1.0)

    cands = np.stack([dl, dr, dhi, dlo])
    flat = int(np.argmax(cands))
    row, col = divmod(flat, cands.shape[1])
    value = float(cands[row, col])
    angle = (breaks[col], nxt[col], astar[col], alo[col])[row]
    return value, float(angle)


def hausdorff_2d_exact(K: Body, L: Body) -> HausdorffResult:
    """Exact (to floating point) Hausdorff distance between 2D convex bodies."""
    if K.dim != 2 or L.dim != 2:
        raise DimensionMismatch("hausdorff_2d_exact needs two 2D bodies")
    value, angle = _profile_distance(support_profile(K), support_profile(L), 0.0)
    witness = np.array([math.cos(angle), math.sin(angle)])
    return HausdorffResult(value, value, witness)


@lru_cache(maxsize=16)
def sphere_directions(level: int) -> tuple:
    """Octahedral subdivision mesh on S^2: (directions, covering radius in radians).

    The covering radius is the largest spherical circumradius over faces, valid
    because the subdivision triangles are acute.
    """
    verts = [
        np.array(v, dtype=float)
        for v in ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1))
    ]
    faces = [
        (0, 2, 4), (2, 1, 4), (1, 3, 4), (3, 0, 4),
        (2, 0, 5), (1, 2, 5), (3, 1, 5), (0, 3, 5),
    ]
    index: dict[tuple, int] = {tuple(np.round(v, 12)): i for i, v in enumerate(verts)}

    def midpoint(i, j):
        m = verts[i] + verts[j]
        m /= np.linalg.norm(m)
        key = tuple(np.round(m, 12))
        if key not in index:
            index[key] = len(verts)
            verts.append(m)
        return index[key]

    for _ in range(level):
        new_faces = []
        for a, b, c in faces:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            new_faces += [(a, ab, ca), (ab, b, bc), (ca, bc, c), (ab, bc, ca)]
        faces = new_faces

    V = np.array(verts)
    radius = 0.0
    for a, b, c in faces:
        n = np.cross(V[b] - V[a], V[c] - V[a])
        n /= np.linalg.norm(n)
        if np.dot(n, V[a]) < 0:
            n = -n
        radius = max(radius, math.acos(min(1.0, float(np.dot(n, V[a])))))
    V.setflags(write=False)
    return V, radius


def direction_set(dim: int, m: int) -> tuple[np.ndarray, float]:
    """At least m reasonably uniform unit directions plus their covering radius."""
    if dim == 2:
        ang = TWO_PI * np.arange(m) / m
        return np.stack([np.cos(ang), np.sin(ang)], axis=1), math.pi / m
    level = 0
    while 4 * 4**level + 2 < m and level < 6:
        level += 1
    return sphere_directions(level)


def hausdorff_nd_bounds(K: Body, L: Body, m: int = 512) -> HausdorffResult:
    """Two-sided Hausdorff bracket from sampled support differences."""
    if K.dim != L.dim:
        raise DimensionMismatch("bodies live in different dimensions")
    dirs, delta = direction_set(K.dim, m)
    diff = np.abs(support_values(K, dirs) - support_values(L, dirs))
    i = int(np.argmax(diff))
    lower = float(diff[i])
    slack = (K.max_core_norm() + L.max_core_norm()) * delta
    return HausdorffResult(lower, lower + slack, dirs[i])
