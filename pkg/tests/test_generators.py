import math

import numpy as np
import pytest

from shapeorbit import (
    BadParameter,
    bodies_close,
    diameter,
    hausdorff_2d_exact,
    inradius,
    make_ball_polygon,
    make_cap,
    make_random_body,
    make_random_points_3d,
    make_regular_simplex,
    make_reuleaux_triangle,
    make_segment,
)
from shapeorbit.radii import circumball
from shapeorbit import ball


def test_regular_simplex_2d_radii():
    tri = make_regular_simplex(2, 1.0)
    assert diameter(tri) == pytest.approx(math.sqrt(3), abs=1e-12)
    assert inradius(tri).radius == pytest.approx(0.5, abs=1e-9)
    cb = circumball(tri)
    assert cb.radius == pytest.approx(1.0, abs=1e-12)
    assert np.linalg.norm(cb.center) < 1e-12


def test_regular_simplex_3d():
    tet = make_regular_simplex(3, 2.0)
    cb = circumball(tet)
    assert cb.radius == pytest.approx(2.0, abs=1e-9)
    assert diameter(tet) == pytest.approx(math.sqrt(8 / 3) * 2.0, abs=1e-9)


@pytest.mark.parametrize("nu", [0.25, 0.5, 0.75])
def test_cap_inradius_formula(nu):
    cap = make_cap(np.array([nu, 0.0]), 256)
    assert inradius(cap).radius == pytest.approx((1 + nu) / 2, abs=1e-3)
    cb = circumball(cap)
    assert cb.radius == pytest.approx(1.0, abs=1e-9)
    assert np.linalg.norm(cb.center) < 1e-9


def test_cap_rotated_direction():
    cap = make_cap(np.array([0.3, 0.4]), 64)  # |u| = 0.5
    assert inradius(cap).radius == pytest.approx(0.75, abs=1e-3)


def test_cap_error_bound_documented():
    for m in (8, 64, 256):
        cap = make_cap(np.array([0.5, 0.0]), m)
        assert cap.approx_error <= 1 - math.cos(math.pi / m) + 1e-15


def test_ball_polygon_hausdorff_error():
    for m in (8, 32, 256):
        poly = make_ball_polygon(m)
        d = hausdorff_2d_exact(poly, ball([0, 0], 1.0)).value
        assert d == pytest.approx(1 - math.cos(math.pi / m), abs=1e-12)
        assert poly.approx_error == pytest.approx(d, abs=1e-15)


def test_reuleaux_basic_functionals():
    ct = make_reuleaux_triangle(256)
    assert diameter(ct) == pytest.approx(math.sqrt(3), abs=1e-12)
    cb = circumball(ct)
    assert cb.radius == pytest.approx(1.0, abs=1e-9)
    assert np.linalg.norm(cb.center) < 1e-9
    # constant width sqrt(3) up to the sampling error
    from shapeorbit import width_2d

    assert width_2d(ct) == pytest.approx(math.sqrt(3), abs=2 * ct.approx_error + 1e-9)
    # contains the generating triangle
    tri = make_regular_simplex(2, 1.0)
    for v in tri.points:
        assert np.min(np.linalg.norm(ct.points - v, axis=1)) < 1e-12


def test_reuleaux_error_bound():
    for m in (16, 128):
        ct = make_reuleaux_triangle(m)
        assert ct.approx_error <= 1 - math.cos(math.pi / m) + 1e-15


def test_segment_and_parameter_checks():
    seg = make_segment()
    assert seg.is_segment
    assert diameter(seg) == pytest.approx(2.0)
    with pytest.raises(BadParameter):
        make_ball_polygon(7)
    with pytest.raises(BadParameter):
        make_cap(np.array([1.5, 0.0]), 64)
    with pytest.raises(BadParameter):
        make_cap(np.array([0.0, 0.0]), 64)
    with pytest.raises(BadParameter):
        make_regular_simplex(4, 1.0)


def test_random_body_deterministic_and_normalized():
    a = make_random_body(123, 12)
    b = make_random_body(123, 12)
    assert bodies_close(a, b, 0.0) or np.array_equal(a.points, b.points)
    cb = circumball(a)
    assert cb.radius == pytest.approx(1.0, abs=1e-9)
    assert np.linalg.norm(cb.center) < 1e-9
    c = make_random_body(124, 12)
    assert not bodies_close(a, c, 1e-9)


def test_random_points_3d_deterministic_in_ball():
    p = make_random_points_3d(5, 40)
    q = make_random_points_3d(5, 40)
    assert np.array_equal(p, q)
    assert np.all(np.linalg.norm(p, axis=1) < 1.0)
