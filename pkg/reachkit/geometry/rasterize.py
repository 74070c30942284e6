"""Rasterization of reachable-set representations onto evaluation lattices."""

import logging

import numpy as np

from reachkit.dfog.base import DistanceField
from reachkit.dfog.managers import dfog_contains
from reachkit.discretization.base import GridSpec
from reachkit.geometry.base import PointSet
from reachkit.svm.base import SvmModel

logger = logging.getLogger(__name__)

CHUNK = 4096


def _chunked(grid: GridSpec, predicate) -> np.ndarray:
    points = grid.points()
    mask = np.zeros(points.shape[0], dtype=bool)
    for start in range(0, points.shape[0], CHUNK):
        mask[start:start + CHUNK] = predicate(points[start:start + CHUNK])
    return points[mask]


def sublevel_pointset(model: SvmModel, grid: GridSpec) -> PointSet:
    """Grid points with decision value >= 0; flagged degenerate when there are none."""
    points = _chunked(grid, lambda chunk: model.decision(chunk) >= 0.0)
    if points.shape[0] == 0:
        logger.warning("Decision function is negative on the whole evaluation grid")
        return PointSet(np.empty((0, grid.dim)), degenerate=True)
    return PointSet(points)


def dfog_pointset(field: DistanceField, grid: GridSpec) -> PointSet:
    """Grid points in the distance-field representation."""
    points = _chunked(grid, lambda chunk: dfog_contains(field, chunk))
    if points.shape[0] == 0:
        logger.warning("Distance-field representation is empty on the evaluation grid")
        return PointSet(np.empty((0, grid.dim)), degenerate=True)
    return PointSet(points)
