"""Builtin example systems."""

from dataclasses import dataclass

import numpy as np

from reachkit.systems.base import ControlSystem


@dataclass(frozen=True, eq=False)
class BilinearSystem(ControlSystem):
    """x1' = pi x2, x2' = -pi u x1 with scalar u in [0, 1]."""

    def dynamics(self, t: float, x: np.ndarray, u: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        u = np.asarray(u, dtype=float)
        return np.stack((np.pi * x[..., 1], -np.pi * u[..., 0] * x[..., 0]), axis=-1)

    def jacobian_x(self, t: float, x: np.ndarray, u: np.ndarray) -> np.ndarray:
        return np.array([[0.0, np.pi], [-np.pi * u[0], 0.0]])

    def jacobian_u(self, t: float, x: np.ndarray, u: np.ndarray) -> np.ndarray:
        return np.array([[0.0], [-np.pi * x[0]]])


@dataclass(frozen=True, eq=False)
class NonlinearSystem(ControlSystem):
    """x1' = x1(1 - |x1|) - x1 x2 + u1, x2' = x1^4 - 1/2 + u2.

    The |x1| term is differentiated with the subgradient sign(x1), sign(0) = 0.
    """

    def dynamics(self, t: float, x: np.ndarray, u: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        u = np.asarray(u, dtype=float)
        x1 = x[..., 0]
        x2 = x[..., 1]
        return np.stack(
            (x1 * (1.0 - np.abs(x1)) - x1 * x2 + u[..., 0], x1**4 - 0.5 + u[..., 1]),
            axis=-1,
        )

    def jacobian_x(self, t: float, x: np.ndarray, u: np.ndarray) -> np.ndarray:
        x1, x2 = float(x[0]), float(x[1])
        d11 = 1.0 - abs(x1) - x1 * np.sign(x1) - x2
        return np.array([[d11, -x1], [4.0 * x1**3, 0.0]])

    def jacobian_u(self, t: float, x: np.ndarray, u: np.ndarray) -> np.ndarray:
        return np.eye(2)


def builtin_bilinear() -> BilinearSystem:
    """Bilinear system whose reachable set at T=1 is convex."""
    return BilinearSystem(name="bilinear", x0=(-1.0, 0.0), u_lower=(0.0,), u_upper=(1.0,), t0=0.0, T=1.0)


def builtin_nonlinear() -> NonlinearSystem:
    """Nonlinear system whose reachable set changes topology over time."""
    return NonlinearSystem(
        name="nonlinear",
        x0=(0.0, 0.0),
        u_lower=(-0.2, -0.2),
        u_upper=(0.2, 0.2),
        t0=0.0,
        T=3.5,
    )
