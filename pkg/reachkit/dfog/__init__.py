"""Distance fields on grids for reachkit."""

from reachkit.dfog.base import DistanceField, MayerResult
from reachkit.dfog.managers import ball_check, build_distance_field, dfog_contains, dfog_membership
from reachkit.dfog.solvers import ProjectedGradientSolver, SolverOptions, mayer_objective_gradient, solve_mayer

__all__ = [
    "DistanceField",
    "MayerResult",
    "ProjectedGradientSolver",
    "SolverOptions",
    "ball_check",
    "build_distance_field",
    "dfog_contains",
    "dfog_membership",
    "mayer_objective_gradient",
    "solve_mayer",
]
