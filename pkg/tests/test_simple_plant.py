import pytest
from hypothesis import given, strategies as st

from intercept.core import PlanarPoint
from intercept.plants import (
    SIMPLE_MOTIONS,
    STRAIGHT,
    WAIT,
    get_plant,
    simple_best_estimator,
    simple_contains,
    simple_distance,
    simple_path,
)

times = st.floats(min_value=0, max_value=20, allow_nan=False)
coords = st.floats(min_value=-20, max_value=20, allow_nan=False)
points = st.builds(PlanarPoint, coords, coords)


class TestDistance:
    def test_outside(self):
        assert simple_distance(2.0, PlanarPoint(3, 4)) == 3.0

    def test_inside(self):
        assert simple_distance(6.0, PlanarPoint(3, 4)) == 0.0

    def test_origin_at_start(self):
        assert simple_distance(0.0, PlanarPoint(0, 0)) == 0.0

    def test_negative_time_rejected(self):
        with pytest.raises(ValueError):
            simple_distance(-0.1, PlanarPoint(1, 0))


class TestContains:
    def test_boundary(self):
        assert simple_contains(1.0, PlanarPoint(0, 1))

    def test_outside(self):
        assert not simple_contains(0.5, PlanarPoint(0, 1))

    def test_inside(self):
        assert simple_contains(1.2, PlanarPoint(1, 0))


class TestBestEstimator:
    def test_step_from_zero(self):
        assert simple_best_estimator(0.0, PlanarPoint(0, 1), 0.25, 0.1) == pytest.approx(0.72)

    def test_already_captured(self):
        assert simple_best_estimator(5.0, PlanarPoint(0, 1), 0.25, 0.1) == 5.0

    def test_stationary_zero_radius(self):
        assert simple_best_estimator(0.0, PlanarPoint(0, 1), 0.0, 0.0) == 1.0

    @given(times, points, st.floats(0, 3), st.floats(0, 1))
    def test_never_steps_backward(self, t, y, v, ell):
        assert simple_best_estimator(t, y, v, ell) >= t

    @given(times, points, st.floats(0, 3), st.floats(0, 1))
    def test_strictly_forward_when_uncaptured(self, t, y, v, ell):
        if simple_distance(t, y) > ell:
            assert simple_best_estimator(t, y, v, ell) > t


class TestLipschitz:
    @given(points, times, times)
    def test_in_time(self, y, t1, t2):
        d = abs(simple_distance(t1, y) - simple_distance(t2, y))
        assert d <= abs(t1 - t2) + 1e-12

    @given(times, points, points)
    def test_in_space(self, t, y1, y2):
        d = abs(simple_distance(t, y1) - simple_distance(t, y2))
        assert d <= y1.distance_to(y2) + 1e-12


class TestPath:
    def test_exact_capture(self):
        path = simple_path(0.9, PlanarPoint(0, 1), 0.1)
        assert [s.kind for s in path.segments] == [STRAIGHT]
        assert path.segments[0].duration == pytest.approx(0.9)
        assert path.endpoint.x == pytest.approx(0.0)
        assert path.endpoint.y == pytest.approx(0.9)

    def test_degenerate_at_origin(self):
        path = simple_path(0.0, PlanarPoint(0, 0), 0.0)
        assert path.total_duration == 0.0
        assert path.endpoint == PlanarPoint(0.0, 0.0)

    def test_captured_at_start_pads_with_wait(self):
        path = simple_path(2.0, PlanarPoint(1, 0), 1.0)
        assert [s.kind for s in path.segments] == [STRAIGHT, WAIT]
        assert path.segments[0].duration == 0.0
        assert path.segments[1].duration == 2.0
        assert path.endpoint == PlanarPoint(0.0, 0.0)

    def test_precondition(self):
        with pytest.raises(ValueError):
            simple_path(0.1, PlanarPoint(5, 0), 0.1)

    @given(times, points, st.floats(0, 1))
    def test_path_invariants(self, t_star, y, ell):
        if simple_distance(t_star, y) > ell:
            return
        path = simple_path(t_star, y, ell)
        assert path.total_duration == pytest.approx(t_star, abs=1e-9)
        assert simple_distance(path.total_duration, path.endpoint) <= 1e-9

    def test_sample_path_reaches_endpoint(self):
        path = simple_path(0.9, PlanarPoint(0, 1), 0.1)
        pts = SIMPLE_MOTIONS.sample_path(path)
        assert pts[0] == PlanarPoint(0.0, 0.0)
        assert pts[-1].distance_to(path.endpoint) < 1e-12


def test_registry():
    assert get_plant("simple") is SIMPLE_MOTIONS
    assert get_plant("dubins").name == "dubins"
    with pytest.raises(ValueError):
        get_plant("rocket")


def test_capabilities():
    assert SIMPLE_MOTIONS.has_closed_form_best_estimator
    assert SIMPLE_MOTIONS.has_boundary_sampler
    assert SIMPLE_MOTIONS.has_path_reconstruction


def test_boundary_points_lie_on_circle():
    pts = SIMPLE_MOTIONS.boundary_points(2.5, 64)
    assert len(pts) == 64
    for p in pts:
        assert p.norm() == pytest.approx(2.5, abs=1e-12)
    with pytest.raises(ValueError):
        SIMPLE_MOTIONS.boundary_points(0.0, 8)
