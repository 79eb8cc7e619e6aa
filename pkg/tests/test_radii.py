import math

import numpy as np
import pytest

from shapeorbit import (
    MissingHRep,
    Similarity,
    UnsupportedDimension,
    apply_similarity,
    ball,
    bodies_close,
    diameter,
    inradius,
    make_cap,
    make_regular_simplex,
    normalize,
    polytope,
    rounded,
    width_2d,
)
from shapeorbit.rng import SplitMix64, stream_seed
from shapeorbit.simplex import convex_combination

from oracles import calipers_diameter, width_grid


def rand_polygon(seed, n=12):
    return polytope(SplitMix64(seed).disk_points(n))


# --- normalization ----------------------------------------------------------


def test_normalize_unit_ball_is_fixed():
    nb, g = normalize(ball([0, 0], 1.0))
    assert nb.body.radius == pytest.approx(1.0)
    assert g.scale == pytest.approx(1.0)
    assert g.translation == pytest.approx([0.0, 0.0])


def test_normalize_is_idempotent():
    body = rand_polygon(71)
    nb, _ = normalize(body)
    again, g = normalize(nb.body)
    assert bodies_close(nb.body, again.body, 1e-9)
    assert g.scale == pytest.approx(1.0, abs=1e-9)


def test_normalize_kills_scaling_and_translation():
    body = rand_polygon(72)
    base = normalize(body)[0].body
    for seed in range(8):
        rng = SplitMix64(stream_seed(73, seed))
        lam = math.exp(rng.uniform(math.log(0.1), math.log(10)))
        u = np.array([rng.uniform(-5, 5), rng.uniform(-5, 5)])
        moved = apply_similarity(Similarity(lam, np.eye(2), u), body)
        assert bodies_close(normalize(moved)[0].body, base, 1e-9)


def test_normalize_conjugates_rotations():
    body = rand_polygon(74)
    base = normalize(body)[0].body
    for seed in range(8):
        rng = SplitMix64(stream_seed(75, seed))
        theta = rng.uniform(0, 2 * math.pi)
        lam = math.exp(rng.uniform(math.log(0.1), math.log(10)))
        u = np.array([rng.uniform(-5, 5), rng.uniform(-5, 5)])
        sigma = Similarity.rotation(theta).orthogonal
        if seed % 2:
            sigma = sigma @ np.diag([1.0, -1.0])
        g = Similarity(lam, sigma, u)
        got = normalize(apply_similarity(g, body))[0].body
        want = apply_similarity(Similarity(1.0, sigma, np.zeros(2)), base)
        assert bodies_close(got, want, 1e-9)


def test_normalize_returns_witness_similarity():
    body = rand_polygon(76)
    nb, g = normalize(body)
    assert bodies_close(apply_similarity(g, body), nb.body, 1e-9)


# --- diameter ---------------------------------------------------------------


def test_diameter_ball_and_triangle():
    assert diameter(ball([0, 0], 1.0)) == pytest.approx(2.0)
    tri = make_regular_simplex(2, 1.0)
    assert diameter(tri) == pytest.approx(math.sqrt(3), abs=1e-12)


@pytest.mark.parametrize("seed", range(10))
def test_diameter_matches_calipers(seed):
    body = rand_polygon(stream_seed(77, seed), 20)
    assert diameter(body) == pytest.approx(calipers_diameter(body.points), abs=1e-12)


def test_diameter_rounded_adds_twice_radius():
    seg = rounded([[0, 0], [3, 0]], 0.5)
    assert diameter(seg) == pytest.approx(4.0)


# --- inradius ---------------------------------------------------------------


def test_inradius_ball():
    inc = inradius(ball([0.2, 0.1], 1.0))
    assert inc.radius == pytest.approx(1.0)
    assert len(inc.touching_normals) == 2


def test_inradius_equilateral_triangle():
    inc = inradius(make_regular_simplex(2, 1.0))
    assert inc.radius == pytest.approx(0.5, abs=1e-9)
    assert np.linalg.norm(inc.center) < 1e-9


def test_inradius_cap_half_plus_norm():
    cap = make_cap(np.array([0.5, 0.0]), 64)
    inc = inradius(cap)
    assert inc.radius == pytest.approx(0.75, abs=1e-3)


def test_inradius_segment_zero_empty_certificate():
    inc = inradius(polytope([[0, 0], [2, 0]]))
    assert inc.radius == 0.0
    assert len(inc.touching_normals) == 0


def test_inradius_touching_certificate():
    for seed in range(10):
        body = rand_polygon(stream_seed(78, seed), 10)
        inc = inradius(body)
        assert inc.radius > 0
        normals, offsets = [], []
        pts = body.points
        edges = np.roll(pts, -1, axis=0) - pts
        ns = np.stack([edges[:, 1], -edges[:, 0]], axis=1)
        ns /= np.linalg.norm(ns, axis=1, keepdims=True)
        # inscribed ball satisfies every halfspace
        offs = np.einsum("ij,ij->i", ns, pts)
        assert np.all(ns @ inc.center + inc.radius <= offs + 1e-9)
        # optimality certificate: origin in hull of touching normals
        assert len(inc.touching_normals) <= 3
        assert convex_combination(inc.touching_normals, np.zeros(2), tol=1e-8) is not None


def test_inradius_3d_requires_hrep():
    tetra = polytope(np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]], float))
    with pytest.raises(MissingHRep):
        inradius(tetra)


def test_inradius_3d_with_hrep():
    # unit cube corners with facet halfspaces
    corners = np.array(
        [[x, y, z] for x in (0, 1) for y in (0, 1) for z in (0, 1)], dtype=float
    )
    A = np.vstack([np.eye(3), -np.eye(3)])
    b = np.array([1.0, 1, 1, 0, 0, 0])
    cube = polytope(corners, hrep=(A, b))
    inc = inradius(cube)
    assert inc.radius == pytest.approx(0.5, abs=1e-9)
    assert inc.center == pytest.approx([0.5, 0.5, 0.5], abs=1e-9)


# --- width ------------------------------------------------------------------


def test_width_ball_and_segment():
    assert width_2d(ball([0, 0], 1.0)) == pytest.approx(2.0)
    assert width_2d(polytope([[0, 0], [2, 0]])) == pytest.approx(0.0, abs=1e-12)


def test_width_equilateral_triangle_grid_oracle():
    tri = make_regular_simplex(2, 1.0)
    w = width_2d(tri)
    assert w == pytest.approx(1.5, abs=1e-12)
    assert w == pytest.approx(width_grid(tri), abs=1e-6)


@pytest.mark.parametrize("seed", range(6))
def test_width_random_polygons_grid_oracle(seed):
    body = rand_polygon(stream_seed(79, seed), 9)
    w = width_2d(body)
    grid = width_grid(body)
    # grid samples cannot dip below the true minimum; a V-shaped minimum
    # makes the grid overshoot first order in the step
    assert w <= grid + 1e-12
    assert grid - w <= 4 * math.pi / 200_000


def test_width_3d_unsupported():
    tetra = polytope(np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]], float))
    with pytest.raises(UnsupportedDimension):
        width_2d(tetra)


def test_functional_chain_on_normalized_bodies():
    for seed in range(10):
        body = normalize(rand_polygon(stream_seed(80, seed), 10))[0].body
        r = inradius(body).radius
        D = diameter(body)
        w = width_2d(body)
        assert 0 < r <= 1 + 1e-9
        assert 1 - 1e-9 <= D <= 2 + 1e-9
        assert w <= D + 1e-9
