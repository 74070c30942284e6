"""Base types for time and space discretization."""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, Sequence, Tuple

import numpy as np

from reachkit.core.exceptions import ControlBoxError, DomainError
from reachkit.systems.base import ControlSystem

# Slack on rho-multiples so that box corners on the lattice are kept.
_LATTICE_TOL = 1e-9


def steps_for(system: ControlSystem, h: float) -> int:
    """Number of Euler steps of size h covering the system horizon."""
    if h <= 0:
        raise ValueError(f"Step size must be positive, got {h}")
    n_steps = int(round(system.horizon / h))
    if n_steps < 1 or abs(n_steps * h - system.horizon) > 1e-9 * max(1.0, system.horizon):
        raise ValueError(f"Step size {h} does not divide the horizon [{system.t0}, {system.T}]")
    return n_steps


@dataclass(frozen=True, eq=False)
class ControlSequence:
    """Piecewise constant controls u_0, ..., u_{N-1} on a uniform time grid."""

    values: np.ndarray
    h: float

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        if values.ndim == 1:
            values = values.reshape(-1, 1)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "h", float(self.h))
        if values.shape[0] < 1:
            raise ValueError("A control sequence needs at least one step")
        if self.h <= 0:
            raise ValueError(f"Step size must be positive, got {self.h}")

    @property
    def N(self) -> int:
        return self.values.shape[0]

    @classmethod
    def constant(cls, system: ControlSystem, N: int, u: Sequence[float]) -> "ControlSequence":
        """Constant control u on N steps over the system horizon."""
        if N < 1:
            raise ValueError(f"Step count must be at least 1, got {N}")
        values = np.tile(np.asarray(u, dtype=float).reshape(1, -1), (N, 1))
        return cls(values, system.horizon / N)

    def check(self, system: ControlSystem) -> None:
        """Validate step count, step size and box membership against a system."""
        if self.values.shape[1] != system.dim_u:
            raise DomainError(f"Controls have dimension {self.values.shape[1]}, expected {system.dim_u}")
        if abs(self.N * self.h - system.horizon) > 1e-9 * max(1.0, system.horizon):
            raise ValueError(f"{self.N} steps of size {self.h} do not cover the horizon {system.horizon}")
        outside = (self.values < system.u_lower) | (self.values > system.u_upper)
        if np.any(outside):
            step, coordinate = (int(v) for v in np.argwhere(outside)[0])
            raise ControlBoxError(
                coordinate,
                float(self.values[step, coordinate]),
                float(system.u_lower[coordinate]),
                float(system.u_upper[coordinate]),
                step,
            )

    def to_dict(self) -> Dict[str, Any]:
        return {"h": self.h, "values": self.values.tolist()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ControlSequence":
        return cls(np.asarray(data["values"], dtype=float), data["h"])


@dataclass(frozen=True, eq=False)
class Trajectory:
    """States x_0, ..., x_N of the explicit Euler recursion."""

    states: np.ndarray
    h: float

    @property
    def N(self) -> int:
        return self.states.shape[0] - 1

    @property
    def endpoint(self) -> np.ndarray:
        return self.states[-1]


@dataclass(frozen=True, eq=False)
class GridSpec:
    """The lattice Omega ∩ rho Z^d for an axis-aligned box Omega."""

    rho: float
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "rho", float(self.rho))
        object.__setattr__(self, "lower", np.array(self.lower, dtype=float).reshape(-1))
        object.__setattr__(self, "upper", np.array(self.upper, dtype=float).reshape(-1))
        if self.rho <= 0:
            raise ValueError(f"Grid spacing must be positive, got {self.rho}")
        if self.lower.shape != self.upper.shape:
            raise ValueError("Grid corners must have the same dimension")
        if np.any(self.lower >= self.upper):
            raise ValueError(f"Grid box is empty: lower {self.lower} is not below upper {self.upper}")

    @property
    def dim(self) -> int:
        return self.lower.shape[0]

    def index_bounds(self) -> Tuple[np.ndarray, np.ndarray]:
        """Smallest and largest integer multi-index inside the box."""
        lo = np.ceil(self.lower / self.rho - _LATTICE_TOL).astype(np.int64)
        hi = np.floor(self.upper / self.rho + _LATTICE_TOL).astype(np.int64)
        return lo, hi

    @property
    def shape(self) -> Tuple[int, ...]:
        lo, hi = self.index_bounds()
        return tuple(int(v) for v in np.maximum(hi - lo + 1, 0))

    def __len__(self) -> int:
        return int(np.prod(self.shape))

    def indices(self) -> np.ndarray:
        """All multi-indices of the lattice, in row-major (lexicographic) order."""
        lo, hi = self.index_bounds()
        axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(lo, hi)]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([m.reshape(-1) for m in mesh], axis=-1)

    def points(self) -> np.ndarray:
        return self.indices() * self.rho

    def contains(self, x: np.ndarray) -> np.ndarray:
        """Box membership of one point or an array of points (with lattice slack)."""
        x = np.asarray(x, dtype=float)
        slack = _LATTICE_TOL * self.rho
        return np.all((x >= self.lower - slack) & (x <= self.upper + slack), axis=-1)

    def contains_indices(self, indices: np.ndarray) -> np.ndarray:
        lo, hi = self.index_bounds()
        return np.all((indices >= lo) & (indices <= hi), axis=-1)

    @classmethod
    def around(cls, points: np.ndarray, rho: float, margin: float) -> "GridSpec":
        """Bounding box of points inflated by margin on every side."""
        points = np.asarray(points, dtype=float)
        if points.size == 0:
            raise DomainError("Cannot build a grid around an empty point set")
        return cls(rho, points.min(axis=0) - margin, points.max(axis=0) + margin)

    def to_dict(self) -> Dict[str, Any]:
        return {"rho": self.rho, "lower": self.lower.tolist(), "upper": self.upper.tolist()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GridSpec":
        return cls(data["rho"], data["lower"], data["upper"])


@dataclass(frozen=True, eq=False)
class DiscreteReachSet:
    """A finite set of lattice points, stored as unique integer multi-indices."""

    grid: GridSpec
    indices: np.ndarray
    h: float

    def __post_init__(self) -> None:
        indices = np.asarray(self.indices, dtype=np.int64).reshape(-1, self.grid.dim)
        indices = np.unique(indices, axis=0)
        if indices.size and not np.all(self.grid.contains_indices(indices)):
            raise DomainError("Reach set indices fall outside the grid region")
        indices.setflags(write=False)
        object.__setattr__(self, "indices", indices)

    @property
    def rho(self) -> float:
        return self.grid.rho

    @property
    def points(self) -> np.ndarray:
        return self.indices * self.grid.rho

    def __len__(self) -> int:
        return self.indices.shape[0]

    def __contains__(self, index: Iterable[int]) -> bool:
        index = np.asarray(tuple(index), dtype=np.int64)
        return bool(np.any(np.all(self.indices == index, axis=1)))

    def nearest_index(self, x: Sequence[float]) -> Tuple[int, ...]:
        """Multi-index of the lattice point nearest to x."""
        return tuple(int(v) for v in np.rint(np.asarray(x, dtype=float) / self.grid.rho))

    def insert(self, indices: np.ndarray) -> "DiscreteReachSet":
        """Union with further multi-indices; re-inserting members changes nothing."""
        merged = np.concatenate([self.indices, np.asarray(indices, dtype=np.int64).reshape(-1, self.grid.dim)])
        return DiscreteReachSet(self.grid, merged, self.h)

    def to_dict(self) -> Dict[str, Any]:
        data = self.grid.to_dict()
        data.update({"h": self.h, "indices": self.indices.tolist()})
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DiscreteReachSet":
        grid = GridSpec.from_dict(data)
        return cls(grid, np.asarray(data["indices"], dtype=np.int64), data["h"])
