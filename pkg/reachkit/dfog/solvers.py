"""Projected-gradient solver for the Euler-transcribed Mayer problem."""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from reachkit.dfog.base import MayerResult
from reachkit.discretization.base import ControlSequence, Trajectory
from reachkit.discretization.euler import integrate, simulate
from reachkit.systems.base import ControlSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverOptions:
    """Stopping and line-search parameters of the projected-gradient method."""

    tol_grad: float = 1e-8
    max_iter: int = 500
    armijo: float = 1e-4
    initial_step: float = 1.0
    min_step: float = 1e-14
    # A start reaching this value has found a point of the reachable set.
    theta_reached: float = 1e-12


def _objective(trajectory: Trajectory, z: np.ndarray) -> float:
    residual = trajectory.endpoint - z
    return 0.5 * float(residual @ residual)


def _adjoint_gradient(system: ControlSystem, trajectory: Trajectory, values: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Backward sweep p_n = p_{n+1} + h (dg/dx)^T p_{n+1}, dJ/du_n = h (dg/du)^T p_{n+1}."""
    h = trajectory.h
    states = trajectory.states
    gradient = np.empty_like(values)
    p = states[-1] - z
    for n in range(values.shape[0] - 1, -1, -1):
        t_n = system.t0 + n * h
        gradient[n] = h * system.jacobian_u(t_n, states[n], values[n]).T @ p
        p = p + h * system.jacobian_x(t_n, states[n], values[n]).T @ p
    return gradient


def mayer_objective_gradient(system: ControlSystem, controls: ControlSequence, z: np.ndarray) -> np.ndarray:
    """Gradient of 1/2 |x_N - z|^2 with respect to all controls, shape (N, dim_u)."""
    z = np.asarray(z, dtype=float)
    trajectory = simulate(system, controls)
    return _adjoint_gradient(system, trajectory, controls.values, z)


class ProjectedGradientSolver:
    """Projected gradient descent with Armijo backtracking on the control box."""

    def __init__(self, system: ControlSystem, N: int, options: Optional[SolverOptions] = None) -> None:
        """Initialize ProjectedGradientSolver.

        Args:
        ----
            system (ControlSystem): The control system.
            N (int): Number of Euler steps.
            options (Optional[SolverOptions]): Stopping and line-search parameters.
        """
        if N < 1:
            raise ValueError(f"Step count must be at least 1, got {N}")
        self.system = system
        self.N = N
        self.h = system.horizon / N
        self.options = options or SolverOptions()
        self.logger = logging.getLogger(__name__)

    def initial_controls(self, rng: np.random.Generator, start: int) -> np.ndarray:
        """Box midpoint for the first start, uniform random samples afterwards."""
        system = self.system
        if start == 0:
            return np.tile(system.control_midpoint(), (self.N, 1))
        return rng.uniform(system.u_lower, system.u_upper, size=(self.N, system.dim_u))

    def minimize(self, z: np.ndarray, values: np.ndarray) -> Tuple[np.ndarray, Trajectory, bool, int]:
        """Run one start; returns (controls, trajectory, converged, iterations)."""
        system, opts = self.system, self.options
        values = system.project_control(values)
        trajectory = integrate(system, values, self.h)
        cost = _objective(trajectory, z)
        gradient = _adjoint_gradient(system, trajectory, values, z)
        step = opts.initial_step
        converged = False
        iteration = 0
        for iteration in range(1, opts.max_iter + 1):
            projected = values - system.project_control(values - gradient)
            if np.linalg.norm(projected) < opts.tol_grad or cost <= opts.theta_reached:
                converged = True
                break
            while True:
                candidate = system.project_control(values - step * gradient)
                candidate_trajectory = integrate(system, candidate, self.h)
                candidate_cost = _objective(candidate_trajectory, z)
                if candidate_cost <= cost + opts.armijo * float(np.sum(gradient * (candidate - values))):
                    break
                step *= 0.5
                if step < opts.min_step:
                    self.logger.debug(f"Line search stalled at z={z.tolist()} after {iteration} iterations")
                    return values, trajectory, False, iteration
            values, trajectory, cost = candidate, candidate_trajectory, candidate_cost
            gradient = _adjoint_gradient(system, trajectory, values, z)
            step *= 2.0
        return values, trajectory, converged, iteration


def solve_mayer(
    system: ControlSystem,
    z: np.ndarray,
    N: int,
    restarts: int = 5,
    seed: int = 0,
    stream: Optional[int] = None,
    options: Optional[SolverOptions] = None,
) -> MayerResult:
    """Multistart projected-gradient solve of min 1/2 |x_N - z|^2.

    Starts are drawn from ``default_rng(seed)`` (or ``default_rng([seed, stream])``), so a
    run with more restarts repeats the starts of a run with fewer. Remaining starts are
    skipped once a start reaches the target. The best local minimum is returned; a
    non-converged result is flagged, never raised.
    """
    if restarts < 1:
        raise ValueError(f"At least one restart is required, got {restarts}")
    z = np.asarray(z, dtype=float).reshape(-1)
    if z.shape[0] != system.dim_x:
        raise ValueError(f"Target has dimension {z.shape[0]}, expected {system.dim_x}")
    solver = ProjectedGradientSolver(system, N, options)
    rng = np.random.default_rng(seed if stream is None else [seed, stream])
    best = None
    used = 0
    total_iterations = 0
    for start in range(restarts):
        initial = solver.initial_controls(rng, start)
        values, trajectory, converged, iterations = solver.minimize(z, initial)
        used += 1
        total_iterations += iterations
        cost = _objective(trajectory, z)
        if best is None or cost < best[0]:
            best = (cost, values, trajectory, converged)
        if best[3] and best[0] <= solver.options.theta_reached:
            break
    cost, values, trajectory, converged = best
    if not converged:
        logger.warning(f"Mayer solve for z={z.tolist()} did not converge in {used} starts (theta={cost:.3e})")
    return MayerResult(
        z=z,
        x_star=trajectory.endpoint.copy(),
        controls=ControlSequence(values, solver.h),
        converged=converged,
        restarts_used=used,
        iterations=total_iterations,
    )
