import numpy as np
import pytest

from reachkit.core.exceptions import BoundaryClippingError, ControlBoxError, DivergenceError
from reachkit.discretization import (
    ControlSequence,
    DiscreteReachSet,
    GridSpec,
    control_lattice,
    euler_reach_reference,
    integrate,
    simulate,
    snap_to_grid,
)
from reachkit.geometry import PointSet, hausdorff


def test_zero_control_keeps_fixed_point(bilinear):
    trajectory = simulate(bilinear, ControlSequence.constant(bilinear, 25, [0.0]))
    np.testing.assert_allclose(trajectory.states, np.tile([-1.0, 0.0], (26, 1)))


def test_full_control_reaches_rotation_endpoint(bilinear):
    trajectory = simulate(bilinear, ControlSequence.constant(bilinear, 1000, [1.0]))
    assert np.linalg.norm(trajectory.endpoint - np.array([1.0, 0.0])) < 0.02


def test_simulate_rejects_control_outside_box(bilinear):
    values = np.full((10, 1), 0.5)
    values[4, 0] = 1.5
    with pytest.raises(ControlBoxError) as excinfo:
        simulate(bilinear, ControlSequence(values, 0.1))
    assert excinfo.value.step == 4


def test_simulate_rejects_wrong_horizon(bilinear):
    with pytest.raises(ValueError, match="do not cover the horizon"):
        simulate(bilinear, ControlSequence(np.zeros((10, 1)), 0.2))


def test_divergence_reports_step(nonlinear):
    values = np.zeros((5, 2))
    with pytest.raises(DivergenceError) as excinfo:
        integrate(nonlinear.__class__(name="blowup", x0=(1e80, 0.0), u_lower=(-1, -1), u_upper=(1, 1), t0=0, T=1), values, 0.2)
    assert excinfo.value.step == 0


def test_control_lattice(bilinear, nonlinear):
    np.testing.assert_allclose(control_lattice(bilinear, 3)[:, 0], [0.0, 0.5, 1.0])
    assert control_lattice(nonlinear, 3).shape == (9, 2)
    np.testing.assert_allclose(control_lattice(bilinear, 1), [[0.5]])


def test_snap_to_grid_rounds_to_nearest():
    np.testing.assert_array_equal(snap_to_grid(np.array([[0.26, -0.74]]), 0.5), [[1, -1]])


def test_snap_to_grid_keeps_both_points_on_tie():
    np.testing.assert_array_equal(snap_to_grid(np.array([[0.25, 0.0]]), 0.5), [[0, 0], [1, 0]])


def test_grid_spec_points():
    grid = GridSpec(1.0, (-2.0, -2.0), (2.0, 2.0))
    assert grid.shape == (5, 5)
    assert len(grid) == 25
    assert grid.points().shape == (25, 2)
    assert grid.contains(np.array([2.0, -2.0]))
    assert not grid.contains(np.array([2.1, 0.0]))


def test_grid_spec_validation():
    with pytest.raises(ValueError, match="spacing must be positive"):
        GridSpec(0.0, (0.0,), (1.0,))
    with pytest.raises(ValueError, match="empty"):
        GridSpec(1.0, (1.0,), (0.0,))


def test_reach_set_insert_is_idempotent():
    grid = GridSpec(0.5, (-1.0, -1.0), (1.0, 1.0))
    reach = DiscreteReachSet(grid, np.array([[0, 0], [1, 1]]), 0.1)
    again = reach.insert(np.array([[0, 0]]))
    assert len(again) == 2
    assert (1, 1) in again
    assert len(reach.insert(np.array([[-1, 0]]))) == 3


def test_reach_set_round_trip():
    grid = GridSpec(0.5, (-1.0, -1.0), (1.0, 1.0))
    reach = DiscreteReachSet(grid, np.array([[0, 0], [1, -2]]), 0.1)
    restored = DiscreteReachSet.from_dict(reach.to_dict())
    np.testing.assert_array_equal(restored.indices, reach.indices)
    assert restored.h == reach.h


def test_reference_zero_horizon_rejected(bilinear):
    with pytest.raises(ValueError, match="does not divide the horizon"):
        euler_reach_reference(bilinear, GridSpec(0.1, (-2, -2), (2, 2)), 0.3, 2)


def test_reference_contains_start_and_rotation_endpoint(bilinear):
    grid = GridSpec(0.05, (-2.0, -2.0), (2.0, 2.0))
    reach = euler_reach_reference(bilinear, grid, 0.1, 3)
    assert reach.nearest_index([-1.0, 0.0]) in reach
    endpoint = simulate(bilinear, ControlSequence.constant(bilinear, 10, [1.0])).endpoint
    distances = np.linalg.norm(reach.points - endpoint, axis=1)
    assert distances.min() <= 10 * 0.05


def test_reference_clipping_error(bilinear):
    with pytest.raises(BoundaryClippingError) as excinfo:
        euler_reach_reference(bilinear, GridSpec(0.1, (-1.2, -0.5), (1.2, 0.5)), 0.1, 3)
    assert len(excinfo.value.point) == 2


@pytest.mark.slow
def test_reference_converges_with_step_and_spacing(bilinear):
    # Spacing shrinks with h^2 so that the rounding drift of order rho/h also shrinks.
    box = ((-2.0, -2.0), (2.0, 2.0))
    fine = euler_reach_reference(bilinear, GridSpec(0.0025, *box), 1 / 40, 8)
    coarse = euler_reach_reference(bilinear, GridSpec(0.04, *box), 1 / 10, 8)
    middle = euler_reach_reference(bilinear, GridSpec(0.01, *box), 1 / 20, 8)
    # First-order scheme: successive differences halve with h.
    ratio = hausdorff(PointSet(coarse.points), PointSet(middle.points)) / hausdorff(
        PointSet(middle.points), PointSet(fine.points)
    )
    assert 1.4 <= ratio <= 2.8
