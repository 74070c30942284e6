import itertools

import numpy as np
import pytest

from reachkit.config.base_config import ExperimentConfig, ReferenceConfig
from reachkit.dfog.base import DistanceField, MayerResult
from reachkit.discretization.base import GridSpec
from reachkit.kernel.base import KernelSpec
from reachkit.labelling.base import TrainingSet
from reachkit.systems.builtins import builtin_bilinear, builtin_nonlinear


@pytest.fixture()
def bilinear():
    return builtin_bilinear()


@pytest.fixture()
def nonlinear():
    return builtin_nonlinear()


def make_result(z, x_star, converged=True):
    return MayerResult(z=z, x_star=x_star, controls=None, converged=converged, restarts_used=1)


def make_field(rows, rho=1.0, lower=(-3.0, -3.0), upper=(3.0, 3.0), suppressed=()):
    """Distance field from (z, x_star) pairs."""
    results = [make_result(z, x) for z, x in rows]
    return DistanceField(GridSpec(rho, lower, upper), results, frozenset(suppressed))


def random_training(seed, n_interior=3, n_exterior=3, n_boundary=3):
    """Interior points in a disc, boundary points on a ring around it, exterior points further out."""
    rng = np.random.default_rng(seed)

    def ring(n, r_lo, r_hi):
        angles = rng.uniform(0.0, 2.0 * np.pi, n)
        radii = rng.uniform(r_lo, r_hi, n)
        return np.column_stack((radii * np.cos(angles), radii * np.sin(angles)))

    points = np.vstack((ring(n_interior, 0.0, 0.6), ring(n_exterior, 1.3, 1.8), ring(n_boundary, 0.85, 1.0)))
    interior = range(n_interior)
    exterior = range(n_interior, n_interior + n_exterior)
    boundary = range(n_interior + n_exterior, n_interior + n_exterior + n_boundary)
    return TrainingSet(points, interior, exterior, boundary, epsilon=1e-6)


def brute_force_dual(training, kernel, C1, C2):
    """Exact dual optimum by enumerating which points sit on which box bound.

    Returns (alpha, b) of the first pattern whose equality-constrained solve satisfies
    every KKT condition. Only meant for a handful of points.
    """
    from reachkit.kernel.kernels import kernel_matrix

    m = training.m
    y = training.labels
    kinds = training.kinds()
    K = kernel_matrix(kernel, training.points)
    Q = y[:, None] * y[None, :] * K
    p = np.where(kinds == "B", 0.0, 1.0)
    lower = np.where(kinds == "B", -C2, 0.0)
    upper = np.where(kinds == "E", C1, np.inf)
    choices = {"I": ("lower", "free"), "E": ("lower", "free", "upper"), "B": ("free", "lower")}
    tol = 1e-9
    for pattern in itertools.product(*(choices[k] for k in kinds)):
        free = [i for i in range(m) if pattern[i] == "free"]
        if not free:
            continue
        alpha = np.where(np.array(pattern) == "upper", upper, lower)
        alpha[free] = 0.0
        fixed = [i for i in range(m) if pattern[i] != "free"]
        n = len(free)
        system = np.zeros((n + 1, n + 1))
        system[:n, :n] = Q[np.ix_(free, free)]
        system[:n, n] = y[free]
        system[n, :n] = y[free]
        rhs = np.concatenate((p[free] - Q[np.ix_(free, fixed)] @ alpha[fixed], [-y[fixed] @ alpha[fixed]]))
        solution = np.linalg.solve(system, rhs)
        alpha[free] = solution[:n]
        b = solution[n]
        if np.any(alpha < lower - tol) or np.any(alpha > upper + tol):
            continue
        g = Q @ alpha + y * b - p
        at_lower = np.array([pattern[i] == "lower" for i in range(m)])
        at_upper = np.array([pattern[i] == "upper" for i in range(m)])
        if np.all(g[at_lower] >= -tol) and np.all(g[at_upper] <= tol):
            return alpha, b
    raise AssertionError("No KKT point found by enumeration")


@pytest.fixture()
def two_point_training():
    """1-D interior point at 0, exterior point at 1, plus an interior candidate at -0.3."""
    return TrainingSet(np.array([[0.0], [1.0], [-0.3]]), interior=[0, 2], exterior=[1], boundary=[], epsilon=1e-6)


@pytest.fixture()
def unit_gaussian():
    return KernelSpec(kind="gaussian", sigma=1.0)


@pytest.fixture()
def tiny_config(tmp_path):
    """A bilinear experiment small enough to run in a few seconds."""
    return ExperimentConfig(
        system="bilinear",
        N=6,
        rho=[1.0],
        kernel=KernelSpec(sigma=0.8),
        C1=2.0,
        C2=15.0,
        restarts=1,
        reference=ReferenceConfig(rho=0.1, lower=(-3.0, -3.0), upper=(3.0, 3.0), control_samples=3),
        rho_eval=0.1,
        outputs=str(tmp_path / "out"),
    )
