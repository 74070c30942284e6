import numpy as np
import pytest

from reachkit.core.exceptions import DomainError
from reachkit.discretization import GridSpec
from reachkit.geometry import (
    PointSet,
    dfog_pointset,
    dist_point_set,
    hausdorff,
    neighbourhood_contains,
    projection,
    semi_distance,
    sublevel_pointset,
)
from reachkit.kernel import KernelSpec
from reachkit.svm import SvmModel
from tests.conftest import make_field, random_training


def test_distance_to_member_is_zero():
    A = PointSet(np.array([[0.0, 0.0], [1.0, 2.0]]))
    assert dist_point_set(np.array([1.0, 2.0]), A) == 0.0


def test_distance_three_four_five():
    assert dist_point_set(np.zeros(2), PointSet(np.array([[3.0, 4.0]]))) == pytest.approx(5.0)


def test_distance_takes_minimum():
    assert dist_point_set(np.zeros(2), PointSet(np.array([[1.0, 0.0], [0.0, 2.0]]))) == pytest.approx(1.0)


def test_empty_set_is_rejected():
    empty = PointSet(np.empty((0, 2)))
    with pytest.raises(DomainError):
        dist_point_set(np.zeros(2), empty)
    with pytest.raises(DomainError):
        hausdorff(empty, PointSet(np.zeros((1, 2))))


def test_hausdorff_of_identical_sets():
    A = PointSet(np.random.default_rng(0).normal(size=(20, 2)))
    assert hausdorff(A, A) == 0.0


def test_hausdorff_one_sided_dominates():
    A = PointSet(np.array([[0.0]]))
    B = PointSet(np.array([[0.0], [10.0]]))
    assert semi_distance(A, B) == 0.0
    assert semi_distance(B, A) == pytest.approx(10.0)
    assert hausdorff(A, B) == pytest.approx(10.0)


def test_hausdorff_symmetry_permutation_and_triangle():
    rng = np.random.default_rng(1)
    for _ in range(10):
        A, B, C = (PointSet(rng.normal(size=(int(rng.integers(1, 15)), 2))) for _ in range(3))
        assert hausdorff(A, B) == pytest.approx(hausdorff(B, A))
        shuffled = PointSet(rng.permutation(A.points))
        assert hausdorff(shuffled, B) == pytest.approx(hausdorff(A, B))
        assert hausdorff(A, C) <= hausdorff(A, B) + hausdorff(B, C) + 1e-12


def test_projection_returns_all_nearest_points():
    A = PointSet(np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 3.0]]))
    nearest = projection(np.zeros(2), A)
    assert len(nearest) == 2


def test_neighbourhood_contains():
    A = PointSet(np.array([[0.0, 0.0]]))
    assert neighbourhood_contains(A, 0.6, np.array([0.3, 0.4]))
    assert not neighbourhood_contains(A, 0.4, np.array([0.3, 0.4]))


def test_point_set_frame_round_trip():
    A = PointSet(np.array([[0.0, 1.0], [2.0, 3.0]]))
    frame = A.to_frame()
    assert list(frame.columns) == ["x1", "x2"]
    np.testing.assert_array_equal(PointSet.from_frame(frame).points, A.points)


def _constant_model(b):
    model = SvmModel(random_training(0), KernelSpec(), 1.0, 1.0)
    model.b = b
    return model


def test_positive_model_covers_grid():
    grid = GridSpec(0.5, (-1.0, -1.0), (1.0, 1.0))
    points = sublevel_pointset(_constant_model(0.5), grid)
    assert len(points) == len(grid)
    assert not points.degenerate


def test_negative_model_is_flagged():
    points = sublevel_pointset(_constant_model(-0.5), GridSpec(0.5, (-1.0, -1.0), (1.0, 1.0)))
    assert points.empty
    assert points.degenerate


def test_dfog_pointset_of_reached_field_is_whole_grid():
    field = make_field([((0.0, 0.0), (0.0, 0.0)), ((1.0, 0.0), (1.0, 0.0))])
    grid = GridSpec(0.5, (-3.0, -3.0), (3.0, 3.0))
    assert len(dfog_pointset(field, grid)) == len(grid)


def test_dfog_pointset_under_huge_ball_is_empty():
    field = make_field([((0.0, 0.0), (100.0, 0.0))])
    points = dfog_pointset(field, GridSpec(0.5, (-3.0, -3.0), (3.0, 3.0)))
    assert points.empty
    assert points.degenerate
