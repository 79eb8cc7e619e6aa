import numpy as np
import pytest

from shapeorbit.rng import SplitMix64, stream_seed
from shapeorbit.simplex import LinearProgram, LPStatus, convex_combination, lp_solve

from oracles import lp_vertex_enumeration


def solve(c, rows, bounds=None, eqs=()):
    return lp_solve(LinearProgram(np.asarray(c, float), tuple(rows), bounds, tuple(eqs)))


def test_single_variable():
    res = solve([1.0], [(np.array([1.0]), 3.0)])
    assert res.status is LPStatus.OPTIMAL
    assert res.x[0] == pytest.approx(3.0)
    assert res.objective == pytest.approx(3.0)


def test_box_corner():
    rows = [
        (np.array([1.0, 0.0]), 1.0),
        (np.array([0.0, 1.0]), 1.0),
        (np.array([-1.0, 0.0]), 0.0),
        (np.array([0.0, -1.0]), 0.0),
    ]
    res = solve([1.0, 1.0], rows)
    assert res.status is LPStatus.OPTIMAL
    assert res.objective == pytest.approx(2.0)
    assert res.x == pytest.approx([1.0, 1.0])


def test_infeasible_and_unbounded():
    res = solve([1.0], [(np.array([1.0]), 1.0), (np.array([-1.0]), -2.0)])
    assert res.status is LPStatus.INFEASIBLE
    res = solve([1.0], [(np.array([-1.0]), 0.0)])
    assert res.status is LPStatus.UNBOUNDED


def test_equality_constraints():
    # max x + y st x + y == 1, x,y >= 0
    res = solve(
        [1.0, 1.0],
        [],
        bounds=((0.0, None), (0.0, None)),
        eqs=[(np.array([1.0, 1.0]), 1.0)],
    )
    assert res.status is LPStatus.OPTIMAL
    assert res.objective == pytest.approx(1.0)


def _random_lp(seed):
    rng = SplitMix64(seed)
    nv, mc = 5, 8
    A = np.array([[rng.uniform(-1, 1) for _ in range(nv)] for _ in range(mc)])
    x0 = np.array([rng.uniform(0.2, 2.5) for _ in range(nv)])
    b = A @ x0 + np.array([rng.uniform(0.05, 1.0) for _ in range(mc)])
    c = np.array([rng.uniform(-1, 1) for _ in range(nv)])
    lo = np.zeros(nv)
    hi = np.full(nv, 4.0)
    return c, A, b, lo, hi


@pytest.mark.parametrize("seed", range(8))
def test_random_lps_match_vertex_enumeration(seed):
    c, A, b, lo, hi = _random_lp(stream_seed(99, seed))
    rows = [(A[i], float(b[i])) for i in range(len(b))]
    res = solve(c, rows, bounds=tuple((lo[i], hi[i]) for i in range(len(c))))
    assert res.status is LPStatus.OPTIMAL
    oracle = lp_vertex_enumeration(c, A, b, lo, hi)
    assert oracle is not None
    assert res.objective == pytest.approx(oracle[0], abs=1e-8)
    # primal feasibility
    assert np.all(A @ res.x - b <= 1e-9)
    assert np.all(res.x >= lo - 1e-9) and np.all(res.x <= hi + 1e-9)


@pytest.mark.parametrize("seed", range(6))
def test_duality_gap_and_kkt(seed):
    rng = SplitMix64(stream_seed(123, seed))
    nv, mc = 4, 7
    A = np.array([[rng.uniform(-1, 1) for _ in range(nv)] for _ in range(mc)])
    x0 = np.abs(np.array([rng.uniform(0.1, 1.0) for _ in range(nv)]))
    b = A @ x0 + 0.3
    c = np.array([rng.uniform(-1, 1) for _ in range(nv)])
    rows = [(A[i], float(b[i])) for i in range(mc)]
    # x >= 0 via bounds, upper bounds keep it bounded
    res = solve(c, rows, bounds=tuple((0.0, 5.0) for _ in range(nv)))
    assert res.status is LPStatus.OPTIMAL
    y = res.dual_ineq
    assert np.all(y >= -1e-9)
    # complementarity: y_j * slack_j ~ 0
    slack = b - A @ res.x
    assert np.max(np.abs(y * slack)) < 1e-8


def test_determinism_bitwise():
    c, A, b, lo, hi = _random_lp(4242)
    rows = [(A[i], float(b[i])) for i in range(len(b))]
    r1 = solve(c, rows, bounds=tuple((lo[i], hi[i]) for i in range(len(c))))
    r2 = solve(c, rows, bounds=tuple((lo[i], hi[i]) for i in range(len(c))))
    assert r1.objective == r2.objective  # bitwise identical
    assert np.array_equal(r1.x, r2.x)


def test_convex_combination_caratheodory():
    rng = SplitMix64(5)
    pts = rng.disk_points(40)
    target = 0.25 * (pts[0] + pts[1] + pts[2] + pts[3])
    combo = convex_combination(pts, target)
    assert combo is not None
    idx, lam = combo
    assert len(idx) <= 3  # dim + 1 in the plane
    assert lam.sum() == pytest.approx(1.0, abs=1e-9)
    assert lam @ pts[idx] == pytest.approx(target, abs=1e-9)
    outside = np.array([5.0, 5.0])
    assert convex_combination(pts, outside) is None
