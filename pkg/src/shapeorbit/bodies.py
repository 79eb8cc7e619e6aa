"""Convex body representations and primitive operations.

A body is a compact convex set in R^2 or R^3, stored as core points plus an
optional rounding radius:

* ``polytope`` - convex hull of its vertices (radius 0),
* ``ball``     - single core point (the center) plus a radius,
* ``rounded``  - Minkowski sum of a core polytope and a ball.

Every operation treats the body as conv(points) + radius * B, which keeps
support functions, enclosing balls and Hausdorff distances exact.  Bodies are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadParameter,
    DegenerateInput,
    DimensionMismatch,
    ParseError,
)
from .simplex import convex_combination

DEDUP_TOL = 1e-12
GEOM_TOL = 1e-9


def _dedup(points: np.ndarray) -> np.ndarray:
    """Drop points that coincide within DEDUP_TOL (first representative wins)."""
    pts = np.asarray(points, dtype=float)
    keep: list[int] = []
    for i in range(len(pts)):
        if all(np.max(np.abs(pts[i] - pts[j])) > DEDUP_TOL for j in keep):
            keep.append(i)
    return pts[keep]


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points: np.ndarray) -> np.ndarray:
    """Minimal CCW vertex list of the convex hull (monotone chain).

    Collinear input yields the two extreme points; interior and collinear
    intermediate points are removed.  Raises DegenerateInput when every point
    coincides.
    """
    pts = _dedup(points)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise BadParameter("convex_hull_2d expects an (n, 2) array")
    if len(pts) < 2:
        raise DegenerateInput("all points coincide")
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]
    lower: list[np.ndarray] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= DEDUP_TOL:
            lower.pop()
        lower.append(p)
    upper: list[np.ndarray] = []
    for p in pts[::-1]:
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= DEDUP_TOL:
            upper.pop()
        upper.append(p)
    hull = np.array(lower[:-1] + upper[:-1])
    if len(hull) < 2:  # fully collinear: keep the two sorted extremes
        hull = np.array([pts[0], pts[-1]])
    return hull


def _extreme_points_3d(points: np.ndarray) -> np.ndarray:
    """Filter a 3D point set down to its extreme points (small LP per point)."""
    pts = _dedup(points)
    if len(pts) < 2:
        raise DegenerateInput("all points coincide")
    if len(pts) == 2:
        return pts
    keep = []
    for i in range(len(pts)):
        others = np.delete(pts, i, axis=0)
        if convex_combination(others, pts[i], tol=1e-9) is None:
            keep.append(i)
    return pts[keep]


@dataclass(frozen=True)
class Body:
    """Immutable convex body; build via :func:`polytope`, :func:`ball`, :func:`rounded`."""

    kind: str  # "polytope" | "ball" | "rounded"
    dim: int
    points: np.ndarray  # (m, dim) core points
    radius: float = 0.0
    hrep: tuple | None = None  # (A, b): unit-normal facet rows, n=3 polytopes only
    approx_error: float = 0.0  # Hausdorff gap to the ideal body this one approximates

    def __post_init__(self):
        self.points.setflags(write=False)

    @property
    def vertex_count(self) -> int:
        return len(self.points)

    @property
    def is_segment(self) -> bool:
        return self.kind == "polytope" and len(self.points) == 2

    @property
    def is_full_dim(self) -> bool:
        if self.radius > 0:
            return True
        return self.dim == 2 and len(self.points) >= 3

    def max_core_norm(self) -> float:
        return float(np.max(np.linalg.norm(self.points, axis=1)))


def polytope(points, hrep=None, approx_error: float = 0.0) -> Body:
    """Polytope body from a point set; vertices are hull-reduced."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] not in (2, 3):
        raise BadParameter("points must be (m, 2) or (m, 3)")
    if not np.all(np.isfinite(pts)):
        raise BadParameter("non-finite coordinates")
    dim = pts.shape[1]
    if dim == 2:
        verts = convex_hull_2d(pts)
        hr = None
    else:
        verts = _extreme_points_3d(pts)
        hr = _validate_hrep(hrep, verts) if hrep is not None else None
    return Body("polytope", dim, verts, 0.0, hr, float(approx_error))


def ball(center, radius: float) -> Body:
    c = np.asarray(center, dtype=float).reshape(1, -1)
    if c.shape[1] not in (2, 3) or not np.all(np.isfinite(c)):
        raise BadParameter("bad ball center")
    if not (radius > 0 and math.isfinite(radius)):
        raise BadParameter("ball radius must be positive")
    return Body("ball", c.shape[1], c, float(radius))


def rounded(core_points, radius: float, approx_error: float = 0.0) -> Body:
    """Minkowski sum of conv(core_points) and a ball of the given radius."""
    if not (radius > 0 and math.isfinite(radius)):
        raise BadParameter("rounding radius must be positive")
    core = polytope(core_points)
    return Body("rounded", core.dim, core.points, float(radius), None, float(approx_error))


def _validate_hrep(hrep, verts: np.ndarray):
    A = np.asarray(hrep[0], dtype=float)
    b = np.asarray(hrep[1], dtype=float)
    if A.ndim != 2 or A.shape[1] != verts.shape[1] or len(A) != len(b):
        raise BadParameter("malformed hrep")
    norms = np.linalg.norm(A, axis=1)
    if np.any(norms < 1e-12):
        raise BadParameter("zero hrep normal")
    A = A / norms[:, None]
    b = b / norms
    if np.any(verts @ A.T - b[None, :] > GEOM_TOL):
        raise BadParameter("hrep does not contain the vertices")
    A.setflags(write=False)
    b.setflags(write=False)
    return (A, b)


def support(body: Body, direction) -> tuple[float, np.ndarray]:
    """Support value max_{x in body} <direction, x> and a point attaining it."""
    u = np.asarray(direction, dtype=float)
    dots = body.points @ u
    i = int(np.argmax(dots))
    value = float(dots[i] + body.radius)
    witness = body.points[i] + body.radius * u
    return value, witness


def support_values(body: Body, directions: np.ndarray) -> np.ndarray:
    """Vectorized support values for an (m, dim) array of unit directions."""
    return np.max(directions @ body.points.T, axis=1) + body.radius


@dataclass(frozen=True)
class Similarity:
    """x -> translation + scale * (orthogonal @ x), scale > 0, orthogonal in O(n)."""

    scale: float
    orthogonal: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        sigma = np.asarray(self.orthogonal, dtype=float)
        if not (self.scale > 0 and math.isfinite(self.scale)):
            raise BadParameter("similarity scale must be positive")
        if np.max(np.abs(sigma.T @ sigma - np.eye(sigma.shape[0]))) > 1e-12:
            raise BadParameter("orthogonal part is not orthogonal")
        sigma.setflags(write=False)
        np.asarray(self.translation).setflags(write=False)

    @property
    def dim(self) -> int:
        return self.orthogonal.shape[0]

    def apply(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return self.scale * (x @ self.orthogonal.T) + self.translation

    def compose(self, other: "Similarity") -> "Similarity":
        """self after other: (self.compose(other))(x) == self(other(x))."""
        return Similarity(
            self.scale * other.scale,
            self.orthogonal @ other.orthogonal,
            self.scale * (other.translation @ self.orthogonal.T) + self.translation,
        )

    def inverse(self) -> "Similarity":
        inv = self.orthogonal.T
        return Similarity(1.0 / self.scale, inv, -(self.translation @ inv.T) / self.scale)

    @staticmethod
    def identity(dim: int) -> "Similarity":
        return Similarity(1.0, np.eye(dim), np.zeros(dim))

    @staticmethod
    def rotation(theta: float, scale: float = 1.0, translation=None) -> "Similarity":
        c, s = math.cos(theta), math.sin(theta)
        t = np.zeros(2) if translation is None else np.asarray(translation, float)
        return Similarity(scale, np.array([[c, -s], [s, c]]), t)

    @staticmethod
    def reflection_2d() -> "Similarity":
        return Similarity(1.0, np.diag([1.0, -1.0]), np.zeros(2))


def rot2(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def apply_similarity(g: Similarity, body: Body) -> Body:
    """Image of a body under a similarity; polytopes are re-oriented CCW."""
    if g.dim != body.dim:
        raise DimensionMismatch("similarity and body dimensions differ")
    pts = g.apply(body.points)
    if body.kind == "ball":
        return ball(pts[0], g.scale * body.radius)
    hrep = None
    if body.hrep is not None:
        A, b = body.hrep
        An = A @ g.orthogonal.T
        bn = g.scale * b + An @ g.translation
        hrep = (An, bn)
    if body.kind == "polytope":
        return polytope(pts, hrep=hrep, approx_error=g.scale * body.approx_error)
    return rounded(pts, g.scale * body.radius, approx_error=g.scale * body.approx_error)


def bodies_close(a: Body, b: Body, tol: float = GEOM_TOL) -> bool:
    """Vertexwise equality as point sets: same kind, radius and matched points."""
    if a.kind != b.kind or a.dim != b.dim or len(a.points) != len(b.points):
        return False
    if abs(a.radius - b.radius) > tol:
        return False
    used = [False] * len(b.points)
    for p in a.points:
        d = np.linalg.norm(b.points - p, axis=1)
        d[used] = np.inf
        j = int(np.argmin(d))
        if d[j] > tol:
            return False
        used[j] = True
    return True


# ---------------------------------------------------------------------------
# JSON interchange


def body_to_dict(body: Body) -> dict:
    doc: dict = {"dim": body.dim, "kind": body.kind}
    if body.kind == "ball":
        doc["center"] = body.points[0].tolist()
        doc["radius"] = body.radius
    else:
        doc["vertices"] = body.points.tolist()
        if body.kind == "rounded":
            doc["radius"] = body.radius
    if body.hrep is not None:
        A, b = body.hrep
        doc["hrep"] = [{"a": row.tolist(), "b": float(off)} for row, off in zip(A, b)]
    if body.approx_error > 0:
        doc["approx_error"] = body.approx_error
    return doc


def body_from_dict(doc: dict) -> Body:
    try:
        dim = int(doc["dim"])
        kind = doc["kind"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"missing/invalid body fields: {exc}") from exc
    if dim not in (2, 3):
        raise ParseError(f"unsupported dimension {dim}")
    if kind not in ("polytope", "ball", "rounded"):
        raise ParseError(f"unknown body kind {kind!r}")
    approx = float(doc.get("approx_error", 0.0))
    if not math.isfinite(approx) or approx < 0:
        raise ParseError("bad approx_error")
    try:
        if kind == "ball":
            center = np.asarray(doc["center"], dtype=float)
            radius = float(doc["radius"])
            if center.shape != (dim,):
                raise ParseError("ball center has the wrong dimension")
            body = ball(center, radius)
        else:
            verts = np.asarray(doc["vertices"], dtype=float)
            if verts.ndim != 2 or verts.shape[1] != dim:
                raise ParseError("vertex array has the wrong shape")
            hrep = None
            if "hrep" in doc:
                rows = doc["hrep"]
                A = np.asarray([r["a"] for r in rows], dtype=float)
                b = np.asarray([r["b"] for r in rows], dtype=float)
                hrep = (A, b)
            if kind == "polytope":
                body = polytope(verts, hrep=hrep, approx_error=approx)
            else:
                body = rounded(verts, float(doc["radius"]), approx_error=approx)
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, BadParameter, DegenerateInput) as exc:
        raise ParseError(f"invalid body document: {exc}") from exc
    if not np.all(np.isfinite(body.points)) or not math.isfinite(body.radius):
        raise ParseError("non-finite body data")
    return body


def _reject_constant(token: str):
    raise ParseError(f"non-finite literal {token!r} in body file")


def load_body(path) -> Body:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh, parse_constant=_reject_constant)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("body file must hold a JSON object")
    return body_from_dict(doc)


def dump_body(body: Body, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(body_to_dict(body), fh, indent=1)
        fh.write("\n")
