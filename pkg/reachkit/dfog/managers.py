"""Distance field assembly, ball checking and membership queries."""

import logging
from typing import Optional

import numpy as np
from joblib import Parallel, delayed
from scipy.spatial.distance import cdist

from reachkit.dfog.base import DistanceField
from reachkit.dfog.solvers import SolverOptions, solve_mayer
from reachkit.discretization.base import GridSpec
from reachkit.systems.base import ControlSystem

logger = logging.getLogger(__name__)

TOL_BALL = 1e-9


def build_distance_field(
    system: ControlSystem,
    grid: GridSpec,
    N: int,
    restarts: int = 5,
    seed: int = 0,
    n_jobs: int = 1,
    options: Optional[SolverOptions] = None,
) -> DistanceField:
    """Solve one Mayer problem per grid point, in grid order.

    Each point draws its starts from the stream (seed, ordinal), so the field does not
    depend on the number of workers.
    """
    points = grid.points()
    if points.shape[0] == 0:
        raise ValueError(f"Grid {grid.to_dict()} contains no points")
    if grid.dim != system.dim_x:
        raise ValueError(f"Grid dimension {grid.dim} does not match state dimension {system.dim_x}")
    results = Parallel(n_jobs=n_jobs)(
        delayed(solve_mayer)(system, z, N, restarts, seed, k, options) for k, z in enumerate(points)
    )
    field = DistanceField(grid, results)
    failed = sum(not r.converged for r in results)
    logger.info(f"Distance field for '{system.name}' built on {len(results)} grid points ({failed} not converged)")
    return field


def ball_check(field: DistanceField, tol_ball: float = TOL_BALL) -> DistanceField:
    """Suppress every ball int B(z', sqrt(2 theta(z'))) that contains another endpoint x*(z).

    Previously suppressed balls stay suppressed.
    """
    centres = field.points
    endpoints = field.endpoints
    radii = field.radii
    distances = cdist(centres, endpoints)
    np.fill_diagonal(distances, np.inf)
    hit = np.any(distances < (radii - tol_ball)[:, None], axis=1) & (radii > 0)
    suppressed = field.suppressed | frozenset(int(k) for k in np.flatnonzero(hit))
    added = len(suppressed) - len(field.suppressed)
    if added:
        logger.info(f"Ball check suppressed {added} of {len(field)} balls")
    return field.with_suppressed(suppressed)


def dfog_contains(field: DistanceField, x: np.ndarray, tol_ball: float = TOL_BALL) -> np.ndarray:
    """Membership in Omega minus the union of active open balls, for an array of points."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    inside = field.grid.contains(x)
    active = field.active_mask() & (field.thetas > 0)
    if not np.any(active):
        return inside
    distances = cdist(x, field.points[active])
    outside_balls = np.all(distances >= field.radii[active] - tol_ball, axis=1)
    return inside & outside_balls


def dfog_membership(field: DistanceField, x: np.ndarray) -> bool:
    """Whether x lies in the distance-field representation of the reachable set."""
    return bool(dfog_contains(field, np.asarray(x, dtype=float).reshape(1, -1))[0])
