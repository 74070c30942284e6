"""Base module for control systems."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

import numpy as np

from reachkit.core.exceptions import ControlBoxError, DomainError


def _frozen_array(values) -> np.ndarray:
    array = np.array(values, dtype=float).reshape(-1)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class ControlSystem(ABC):
    """Abstract control system x' = g(t, x, u) with u in an axis-aligned box.

    Subclasses implement the right-hand side and both Jacobians. ``dynamics`` must
    broadcast over leading axes of ``x`` and ``u``; the Jacobians take single points.
    """

    name: str
    x0: np.ndarray
    u_lower: np.ndarray
    u_upper: np.ndarray
    t0: float
    T: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "x0", _frozen_array(self.x0))
        object.__setattr__(self, "u_lower", _frozen_array(self.u_lower))
        object.__setattr__(self, "u_upper", _frozen_array(self.u_upper))
        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "T", float(self.T))
        if not self.t0 < self.T:
            raise ValueError(f"Initial time {self.t0} must be smaller than final time {self.T}")
        if self.u_lower.shape != self.u_upper.shape:
            raise ValueError("Control bounds must have the same dimension")
        if np.any(self.u_lower > self.u_upper):
            raise ValueError(f"Empty control box: lower {self.u_lower} exceeds upper {self.u_upper}")

    @property
    def dim_x(self) -> int:
        return self.x0.shape[0]

    @property
    def dim_u(self) -> int:
        return self.u_lower.shape[0]

    @property
    def horizon(self) -> float:
        return self.T - self.t0

    @abstractmethod
    def dynamics(self, t: float, x: np.ndarray, u: np.ndarray) -> np.ndarray:
        """Evaluate g(t, x, u)."""
        pass

    @abstractmethod
    def jacobian_x(self, t: float, x: np.ndarray, u: np.ndarray) -> np.ndarray:
        """Return dg/dx with shape (dim_x, dim_x)."""
        pass

    @abstractmethod
    def jacobian_u(self, t: float, x: np.ndarray, u: np.ndarray) -> np.ndarray:
        """Return dg/du with shape (dim_x, dim_u)."""
        pass

    def check_control(self, u: np.ndarray, step: Optional[int] = None) -> None:
        """Raise ControlBoxError naming the first coordinate outside the box."""
        u = np.asarray(u, dtype=float).reshape(-1)
        if u.shape[0] != self.dim_u:
            raise DomainError(f"Control has dimension {u.shape[0]}, expected {self.dim_u}")
        for k in range(self.dim_u):
            if not self.u_lower[k] <= u[k] <= self.u_upper[k]:
                raise ControlBoxError(k, float(u[k]), float(self.u_lower[k]), float(self.u_upper[k]), step)

    def project_control(self, u: np.ndarray) -> np.ndarray:
        """Clamp controls componentwise onto the box."""
        return np.clip(u, self.u_lower, self.u_upper)

    def control_midpoint(self) -> np.ndarray:
        return 0.5 * (self.u_lower + self.u_upper)
