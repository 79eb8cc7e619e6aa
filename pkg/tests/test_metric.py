import math

import numpy as np
import pytest

from shapeorbit import (
    DimensionMismatch,
    Similarity,
    apply_similarity,
    ball,
    make_ball_polygon,
    make_cap,
    make_random_body,
    make_regular_simplex,
    make_reuleaux_triangle,
    make_segment,
    normalize,
    orbit_distance_normalized,
    polytope,
    pseudometric,
)
from shapeorbit.hausdorff import hausdorff_2d_exact
from shapeorbit.metric import rotational_symmetry_order
from shapeorbit.rng import SplitMix64, stream_seed

from oracles import reflect_body_raw, rotate_body_raw


def random_similarity(seed, reflect=None):
    rng = SplitMix64(seed)
    theta = rng.uniform(0, 2 * math.pi)
    lam = math.exp(rng.uniform(math.log(0.1), math.log(10)))
    u = np.array([rng.uniform(-5, 5), rng.uniform(-5, 5)])
    sigma = Similarity.rotation(theta).orthogonal
    refl = rng.next_float() < 0.5 if reflect is None else reflect
    if refl:
        sigma = sigma @ np.diag([1.0, -1.0])
    return Similarity(lam, sigma, u)


def test_zero_on_similarity_orbits():
    for seed in range(6):
        K = make_random_body(stream_seed(50, seed), 9)
        g = random_similarity(stream_seed(51, seed))
        res = pseudometric(K, apply_similarity(g, K), 1e-4)
        assert res.value <= 1e-4 + 1e-9
        assert res.gap <= 1e-4 + 1e-9


def test_segment_vs_ball_is_one():
    res = pseudometric(make_segment(), make_ball_polygon(256), 1e-4)
    assert res.value == pytest.approx(1.0, abs=1e-3)
    # the exact value for the polygon stand-in sits just below 1
    assert res.value <= 1.0 + res.gap


@pytest.mark.parametrize("nu", [0.25, 0.5, 0.75])
def test_cap_vs_ball_formula(nu):
    cap = make_cap(np.array([nu, 0.0]), 256)
    res = pseudometric(cap, make_ball_polygon(256), 1e-4)
    assert res.value == pytest.approx(1.0 - nu, abs=2e-3)


def test_simplex_vs_completion_equality_case():
    res = pseudometric(make_regular_simplex(2, 1.0), make_reuleaux_triangle(256), 1e-4)
    assert res.value == pytest.approx(math.sqrt(3) - 1.5, abs=3e-3)


def test_value_bounded_by_one_and_below_one_for_full_dim():
    for seed in range(5):
        K = make_random_body(stream_seed(52, 2 * seed), 8)
        L = make_random_body(stream_seed(52, 2 * seed + 1), 8)
        res = pseudometric(K, L, 1e-3)
        assert res.value <= 1.0 + res.gap
        assert res.value < 1.0  # both bodies are full-dimensional


def test_optimal_g_is_a_witness():
    K = make_random_body(530, 9)
    L = make_random_body(531, 9)
    res = pseudometric(K, L, 1e-4)
    nk = normalize(K)[0].body
    nl = normalize(L)[0].body
    moved = rotate_body_raw(reflect_body_raw(nl) if res.reflected else nl, res.angle)
    assert hausdorff_2d_exact(nk, moved).value == pytest.approx(res.value, abs=1e-9)
    assert abs(abs(np.linalg.det(res.optimal_g)) - 1.0) < 1e-9


def test_similarity_invariance_certified():
    tol = 1e-3
    for seed in range(10):
        K = make_random_body(stream_seed(54, 2 * seed), 9)
        L = make_random_body(stream_seed(54, 2 * seed + 1), 9)
        g = random_similarity(stream_seed(55, 2 * seed))
        h = random_similarity(stream_seed(55, 2 * seed + 1))
        a = pseudometric(K, L, tol)
        b = pseudometric(apply_similarity(g, K), apply_similarity(h, L), tol)
        assert abs(a.value - b.value) <= 2 * tol + 1e-9


def test_pseudometric_axioms_on_triples():
    tol = 1e-3
    for seed in range(5):
        K = make_random_body(stream_seed(56, 3 * seed), 8)
        M = make_random_body(stream_seed(56, 3 * seed + 1), 8)
        L = make_random_body(stream_seed(56, 3 * seed + 2), 8)
        dkl = pseudometric(K, L, tol)
        dlk = pseudometric(L, K, tol)
        assert abs(dkl.value - dlk.value) <= 2 * tol
        assert dkl.value >= 0
        dkm = pseudometric(K, M, tol)
        dml = pseudometric(M, L, tol)
        assert dkl.value <= dkm.value + dml.value + 3 * tol


def test_certified_interval_brackets_grid_scan():
    tol = 1e-3
    for seed in range(3):
        K = make_random_body(stream_seed(57, 2 * seed), 7)
        L = make_random_body(stream_seed(57, 2 * seed + 1), 7)
        res = pseudometric(K, L, tol)
        nk = normalize(K)[0].body
        nl = normalize(L)[0].body
        nlr = reflect_body_raw(nl)
        n = 4000
        grid = min(
            min(
                hausdorff_2d_exact(nk, rotate_body_raw(nl, t)).value,
                hausdorff_2d_exact(nk, rotate_body_raw(nlr, t)).value,
            )
            for t in np.linspace(0, 2 * math.pi, n, endpoint=False)
        )
        assert res.value - res.gap <= grid + 1e-12
        assert grid <= res.value + math.pi / n + 1e-12


def test_orbit_distance_normalized_matches_pseudometric():
    K = make_random_body(580, 9)
    L = make_random_body(581, 9)
    nk, _ = normalize(K)
    nl, _ = normalize(L)
    a = orbit_distance_normalized(nk, nl, 1e-4)
    b = pseudometric(K, L, 1e-4)
    assert abs(a.value - b.value) <= 2e-4
    # orbit members collapse to zero
    sigma = Similarity.rotation(1.234)
    moved = normalize(apply_similarity(sigma, nk.body))[0]
    assert orbit_distance_normalized(nk, moved, 1e-4).value <= 1e-4


def test_orbit_distance_requires_normalized_type():
    K = make_random_body(582, 9)
    with pytest.raises(TypeError):
        orbit_distance_normalized(K, K, 1e-4)


def test_dimension_mismatch():
    K = make_random_body(583, 8)
    tet = polytope(np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]], float))
    with pytest.raises(DimensionMismatch):
        pseudometric(K, tet, 1e-3)


def test_symmetry_order_detection():
    assert rotational_symmetry_order(make_ball_polygon(64)) == 64
    assert rotational_symmetry_order(make_segment()) == 2
    assert rotational_symmetry_order(make_regular_simplex(2, 1.0)) == 3
    assert rotational_symmetry_order(make_reuleaux_triangle(64)) == 3
    assert rotational_symmetry_order(make_random_body(99, 11)) == 1
    assert rotational_symmetry_order(ball([0, 0], 1.0)) == 0


def test_ball_vs_ball_fast_path():
    res = pseudometric(ball([3.0, 1.0], 2.5), ball([0, 0], 1.0), 1e-6)
    assert res.value == 0.0
    assert res.gap <= 1e-9


def test_gap_includes_carried_approximation_error():
    cap = make_cap(np.array([0.5, 0.0]), 64)
    res = pseudometric(cap, make_ball_polygon(64), 1e-4)
    carried = cap.approx_error + make_ball_polygon(64).approx_error
    assert res.gap >= carried
    assert res.gap <= 1e-4 + carried + 1e-9


def test_3d_orbit_members_small_value():
    pts = SplitMix64(9).ball_points(12)
    K = polytope(pts)
    ang = 0.9
    R0 = np.array(
        [
            [math.cos(ang), 0.0, math.sin(ang)],
            [0.0, 1.0, 0.0],
            [-math.sin(ang), 0.0, math.cos(ang)],
        ]
    )
    L = polytope(K.points @ R0.T)
    res = pseudometric(K, L, tol=0.25)
    # value <= covering radius + direction slack; bracketing stays honest
    assert res.value <= 0.25 + 0.2 + 1e-9
    assert res.value - res.gap <= 0.0 + 1e-9
