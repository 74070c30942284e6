"""Gaussian and polynomial kernels and kernel-matrix assembly."""

from typing import Optional

import numpy as np
from scipy.spatial.distance import cdist

from reachkit.core.exceptions import DomainError
from reachkit.kernel.base import KernelBase, KernelSpec


class GaussianKernel(KernelBase):
    def __init__(self, sigma: float) -> None:
        self.sigma = sigma

    def pairwise(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        return np.exp(-cdist(X, Y, "sqeuclidean") / self.sigma)

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> float:
        difference = x - y
        return float(np.exp(-float(difference @ difference) / self.sigma))


class PolynomialKernel(KernelBase):
    def __init__(self, tau: float, degree: int) -> None:
        self.tau = tau
        self.degree = int(degree)

    def pairwise(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        return (X @ Y.T + self.tau) ** self.degree

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> float:
        return float((float(np.sum(x * y)) + self.tau) ** self.degree)


def make_kernel(spec: KernelSpec) -> KernelBase:
    """Build the kernel object described by a spec."""
    if spec.kind == "gaussian":
        return GaussianKernel(spec.sigma)
    return PolynomialKernel(spec.tau, spec.degree)


def _as_points(points: np.ndarray) -> np.ndarray:
    points = np.asarray(points, dtype=float)
    return points.reshape(1, -1) if points.ndim == 1 else points


def kernel_eval(spec: KernelSpec, x: np.ndarray, y: np.ndarray) -> float:
    """K(x, y); symmetric in its arguments bit for bit."""
    x = np.asarray(x, dtype=float).reshape(-1)
    y = np.asarray(y, dtype=float).reshape(-1)
    if x.shape != y.shape:
        raise DomainError(f"Kernel arguments have dimensions {x.shape[0]} and {y.shape[0]}")
    return make_kernel(spec).evaluate(x, y)


def kernel_matrix(spec: KernelSpec, points: np.ndarray, others: Optional[np.ndarray] = None) -> np.ndarray:
    """Kernel matrix K_ij = K(x_i, x_j), or the cross matrix against `others`.

    The square matrix is symmetric exactly.
    """
    X = _as_points(points)
    kernel = make_kernel(spec)
    if others is not None:
        Y = _as_points(others)
        if X.shape[1] != Y.shape[1]:
            raise DomainError(f"Point dimensions differ: {X.shape[1]} and {Y.shape[1]}")
        return kernel.pairwise(X, Y)
    K = kernel.pairwise(X, X)
    upper = np.triu(K)
    return upper + np.triu(upper, 1).T
