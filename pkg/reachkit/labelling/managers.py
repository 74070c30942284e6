"""Conversion of a distance field into a labelled training set."""

import logging
from typing import List, Tuple

import numpy as np
from scipy.spatial import KDTree

from reachkit.dfog.base import DistanceField
from reachkit.labelling.base import TrainingSet

logger = logging.getLogger(__name__)

DEFAULT_EPSILON = 1e-6
DEDUP_TOL = 1e-12


def _deduplicate(points: np.ndarray, tol: float) -> np.ndarray:
    """Return a keep-mask dropping every point within ``tol`` of an earlier kept point.

    Args:
    ----
        points: (m, d) candidate points in insertion order.
        tol: Merge radius; non-positive disables deduplication.
    """
    keep = np.ones(points.shape[0], dtype=bool)
    if tol <= 0 or points.shape[0] < 2:
        return keep
    earlier: List[List[int]] = [[] for _ in range(points.shape[0])]
    for i, j in KDTree(points).query_pairs(tol):
        lo, hi = (i, j) if i < j else (j, i)
        earlier[hi].append(lo)
    for i, neighbours in enumerate(earlier):
        if any(keep[j] for j in neighbours):
            keep[i] = False
    return keep


def label(
    field: DistanceField,
    epsilon: float = DEFAULT_EPSILON,
    keep_suppressed_exterior: bool = False,
    dedup_tol: float = DEDUP_TOL,
) -> TrainingSet:
    """Label grid points as interior (theta <= epsilon) or exterior plus boundary endpoint.

    Grid points suppressed by ball checking contribute only their endpoint as a boundary
    point, unless ``keep_suppressed_exterior`` is set (the exterior point is then kept for
    later decremental removal). Points within ``dedup_tol`` of an earlier point are dropped.
    """
    if not epsilon > 0:
        raise ValueError(f"Labelling threshold must be positive, got {epsilon}")
    rows: List[Tuple[np.ndarray, str, int]] = []
    for ordinal, result in enumerate(field.results):
        if result.theta <= epsilon:
            rows.append((result.z, "I", ordinal))
            continue
        if ordinal not in field.suppressed or keep_suppressed_exterior:
            rows.append((result.z, "E", ordinal))
        rows.append((result.x_star, "B", ordinal))
    points = np.array([row[0] for row in rows], dtype=float).reshape(len(rows), field.grid.dim)
    keep = _deduplicate(points, dedup_tol)
    kinds = np.array([row[1] for row in rows], dtype="<U1")[keep]
    origin = [row[2] for row, kept in zip(rows, keep) if kept]
    training = TrainingSet(
        points=points[keep],
        interior=np.flatnonzero(kinds == "I"),
        exterior=np.flatnonzero(kinds == "E"),
        boundary=np.flatnonzero(kinds == "B"),
        epsilon=epsilon,
        origin=origin,
    )
    dropped = int(np.count_nonzero(~keep))
    if dropped:
        logger.info(f"Labelling dropped {dropped} duplicate points")
    logger.info(
        f"Training set: {len(training.interior)} interior, {len(training.exterior)} exterior, "
        f"{len(training.boundary)} boundary points"
    )
    return training
