import numpy as np
import pytest

from reachkit.dfog import build_distance_field
from reachkit.discretization import GridSpec, euler_reach_reference
from reachkit.labelling import TrainingSet, label
from tests.conftest import make_field


def test_all_reached_points_are_interior():
    field = make_field([((0.0, 0.0), (0.0, 0.0)), ((1.0, 0.0), (1.0, 0.0))])
    training = label(field, 1e-6)
    assert training.m == 2
    np.testing.assert_array_equal(training.interior, [0, 1])
    assert training.exterior.size == 0
    assert training.boundary.size == 0


def test_unreached_point_gives_exterior_and_boundary():
    field = make_field([((0.0, 0.0), (1.0, 1.0))])
    training = label(field, 1e-6)
    assert training.m == 2
    np.testing.assert_array_equal(training.exterior, [0])
    np.testing.assert_array_equal(training.boundary, [1])
    np.testing.assert_array_equal(training.points[1], [1.0, 1.0])
    np.testing.assert_array_equal(training.labels, [-1.0, 1.0])
    np.testing.assert_array_equal(training.origin, [0, 0])


def test_shared_endpoints_are_deduplicated():
    field = make_field([((2.0, 0.0), (1.0, 0.0)), ((2.0, 1.0), (1.0, 0.0))])
    training = label(field)
    assert training.m == 3
    assert training.boundary.size == 1


def test_suppressed_point_keeps_only_its_endpoint():
    field = make_field([((0.0, 0.0), (0.0, 0.0)), ((2.0, 0.0), (-0.5, 0.0))], suppressed={1})
    training = label(field)
    assert training.exterior.size == 0
    np.testing.assert_array_equal(training.points[training.boundary[0]], [-0.5, 0.0])


def test_suppressed_exterior_can_be_kept():
    field = make_field([((0.0, 0.0), (0.0, 0.0)), ((2.0, 0.0), (-0.5, 0.0))], suppressed={1})
    training = label(field, keep_suppressed_exterior=True)
    assert training.exterior.size == 1
    assert training.origin[training.exterior[0]] == 1


def test_near_duplicates_drop_against_kept_points_only():
    field = make_field([((0.0, 0.0), (0.0, 0.0)), ((0.6, 0.0), (0.6, 0.0)), ((1.2, 0.0), (1.2, 0.0))])
    training = label(field, dedup_tol=0.7)
    np.testing.assert_array_equal(training.points, [[0.0, 0.0], [1.2, 0.0]])
    np.testing.assert_array_equal(training.origin, [0, 2])


def test_dedup_can_be_disabled():
    field = make_field([((2.0, 0.0), (1.0, 0.0)), ((2.0, 1.0), (1.0, 0.0))])
    training = label(field, dedup_tol=0.0)
    assert training.m == 4
    assert training.boundary.size == 2


def test_epsilon_must_be_positive():
    with pytest.raises(ValueError, match="positive"):
        label(make_field([((0.0, 0.0), (0.0, 0.0))]), 0.0)


def test_partition_is_validated():
    with pytest.raises(ValueError, match="partition"):
        TrainingSet(np.zeros((3, 2)), interior=[0], exterior=[0], boundary=[2], epsilon=1e-6)


def test_training_set_round_trip():
    training = label(make_field([((0.0, 0.0), (1.0, 1.0)), ((1.0, 1.0), (1.0, 1.0))]))
    restored = TrainingSet.from_dict(training.to_dict())
    np.testing.assert_array_equal(restored.points, training.points)
    np.testing.assert_array_equal(restored.kinds(), training.kinds())


@pytest.mark.slow
def test_boundary_points_lie_near_reference(bilinear):
    reference = euler_reach_reference(bilinear, GridSpec(0.02, (-2.0, -2.0), (2.0, 2.0)), 1 / 30, 8)
    field = build_distance_field(bilinear, GridSpec(0.5, (-2.0, -2.0), (2.0, 2.0)), 30, restarts=5, seed=0)
    training = label(field)
    for i in training.boundary:
        distance = np.min(np.linalg.norm(reference.points - training.points[i], axis=1))
        assert distance <= 2 * 0.02 + 1e-9


def test_every_exterior_point_has_a_boundary_point(bilinear):
    field = build_distance_field(bilinear, GridSpec(1.0, (-2.0, -2.0), (2.0, 2.0)), 10, restarts=2, seed=0)
    training = label(field, dedup_tol=0.0)
    assert training.exterior.size > 0
    assert training.exterior.size == training.boundary.size
    for e, b in zip(training.exterior, training.boundary):
        assert training.origin[e] == training.origin[b]
