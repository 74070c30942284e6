"""Time and space discretization package for reachkit."""

from reachkit.discretization.base import ControlSequence, DiscreteReachSet, GridSpec, Trajectory
from reachkit.discretization.euler import control_lattice, euler_reach_reference, integrate, simulate, snap_to_grid

__all__ = [
    "ControlSequence",
    "DiscreteReachSet",
    "GridSpec",
    "Trajectory",
    "control_lattice",
    "euler_reach_reference",
    "integrate",
    "simulate",
    "snap_to_grid",
]
