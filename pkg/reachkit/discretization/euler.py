"""Explicit Euler trajectories and the fully discrete set-valued Euler scheme."""

import itertools
import logging

import numpy as np

from reachkit.core.exceptions import BoundaryClippingError, DivergenceError, DomainError
from reachkit.discretization.base import ControlSequence, DiscreteReachSet, GridSpec, Trajectory, steps_for
from reachkit.systems.base import ControlSystem

logger = logging.getLogger(__name__)

# Ties on the half-spacing sphere count as inside the closed ball.
_SNAP_TOL = 1e-9


def simulate(system: ControlSystem, controls: ControlSequence) -> Trajectory:
    """Run x_{n+1} = x_n + h g(t_n, x_n, u_n) from the system's initial state.

    Raises
    ------
        ControlBoxError: If a control leaves the box.
        DivergenceError: If a state becomes NaN or infinite.
    """
    controls.check(system)
    return integrate(system, controls.values, controls.h)


def integrate(system: ControlSystem, values: np.ndarray, h: float) -> Trajectory:
    """Euler recursion for a raw (N, dim_u) control array, without box checks."""
    n_steps = values.shape[0]
    states = np.empty((n_steps + 1, system.dim_x))
    states[0] = system.x0
    for n in range(n_steps):
        t_n = system.t0 + n * h
        states[n + 1] = states[n] + h * system.dynamics(t_n, states[n], values[n])
        if not np.all(np.isfinite(states[n + 1])):
            raise DivergenceError(n)
    return Trajectory(states, h)


def control_lattice(system: ControlSystem, samples: int) -> np.ndarray:
    """Uniform lattice of the control box with `samples` points per axis, corners included."""
    if samples < 1:
        raise ValueError(f"Control samples must be a positive integer, got {samples}")
    if samples == 1:
        return system.control_midpoint().reshape(1, -1)
    axes = [np.linspace(lo, hi, samples) for lo, hi in zip(system.u_lower, system.u_upper)]
    return np.array(list(itertools.product(*axes)), dtype=float)


def snap_to_grid(points: np.ndarray, rho: float) -> np.ndarray:
    """Multi-indices of B_inf(p, rho/2) ∩ rho Z^d for every row p, without duplicates."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    scaled = points / rho
    lo = np.ceil(scaled - 0.5 - _SNAP_TOL).astype(np.int64)
    hi = np.floor(scaled + 0.5 + _SNAP_TOL).astype(np.int64)
    dim = points.shape[1]
    blocks = []
    # Each axis holds one lattice point, or two on a tie.
    for offset in itertools.product((0, 1), repeat=dim):
        candidate = lo + np.asarray(offset, dtype=np.int64)
        blocks.append(candidate[np.all(candidate <= hi, axis=1)])
    return np.unique(np.concatenate(blocks), axis=0)


def euler_reach_reference(
    system: ControlSystem, grid: GridSpec, h: float, control_samples: int
) -> DiscreteReachSet:
    """Fully discrete Euler reachable set R_{h,rho}(T, t0, x0) on the grid.

    Starts from B_inf(x0, rho/2) ∩ rho Z^d and unions the rho/2-inflated Euler images of
    every current point under a uniform lattice of control samples.

    Raises
    ------
        ValueError: If h does not divide the horizon.
        BoundaryClippingError: If any image leaves the grid box.
    """
    if grid.dim != system.dim_x:
        raise DomainError(f"Grid dimension {grid.dim} does not match state dimension {system.dim_x}")
    n_steps = steps_for(system, h)
    controls = control_lattice(system, control_samples)
    current = _snap_checked(system.x0.reshape(1, -1), grid)
    for n in range(n_steps):
        t_n = system.t0 + n * h
        states = current * grid.rho
        # Every (state, control) pair, states varying slowest.
        x = np.repeat(states, controls.shape[0], axis=0)
        u = np.tile(controls, (states.shape[0], 1))
        images = x + h * system.dynamics(t_n, x, u)
        current = _snap_checked(images, grid)
        logger.debug(f"Euler reference step {n + 1}/{n_steps}: {current.shape[0]} grid points")
    reach = DiscreteReachSet(grid, current, h)
    logger.info(f"Euler reference for '{system.name}' with h={h}, rho={grid.rho}: {len(reach)} points")
    return reach


def _snap_checked(images: np.ndarray, grid: GridSpec) -> np.ndarray:
    indices = snap_to_grid(images, grid.rho)
    inside = grid.contains_indices(indices)
    if not np.all(inside):
        raise BoundaryClippingError(indices[~inside][0] * grid.rho)
    return indices
