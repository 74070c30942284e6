"""Base types for the distance-field method."""

from dataclasses import dataclass, field, replace
from typing import Any, Dict, FrozenSet, List, Optional

import numpy as np

from reachkit.discretization.base import ControlSequence, GridSpec


@dataclass(frozen=True, eq=False)
class MayerResult:
    """Best local solution of min 1/2 |x_N - z|^2 for one grid point z."""

    z: np.ndarray
    x_star: np.ndarray
    controls: Optional[ControlSequence]
    converged: bool
    restarts_used: int
    iterations: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", np.asarray(self.z, dtype=float).reshape(-1))
        object.__setattr__(self, "x_star", np.asarray(self.x_star, dtype=float).reshape(-1))

    @property
    def theta(self) -> float:
        """Optimal value, always recomputed from the endpoint."""
        residual = self.x_star - self.z
        return 0.5 * float(residual @ residual)

    @property
    def radius(self) -> float:
        return float(np.sqrt(2.0 * self.theta))

    def to_dict(self, save_controls: bool = False) -> Dict[str, Any]:
        data = {
            "z": self.z.tolist(),
            "theta": self.theta,
            "x_star": self.x_star.tolist(),
            "converged": self.converged,
            "restarts_used": self.restarts_used,
            "iterations": self.iterations,
        }
        if save_controls and self.controls is not None:
            data["controls"] = self.controls.to_dict()
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MayerResult":
        controls = ControlSequence.from_dict(data["controls"]) if "controls" in data else None
        return cls(
            z=data["z"],
            x_star=data["x_star"],
            controls=controls,
            converged=data["converged"],
            restarts_used=data["restarts_used"],
            iterations=data.get("iterations", 0),
        )


@dataclass(frozen=True, eq=False)
class DistanceField:
    """Mayer results for every grid point, in grid order, plus ball-check suppressions.

    ``suppressed`` holds ordinals into ``results``.
    """

    grid: GridSpec
    results: List[MayerResult]
    suppressed: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "results", list(self.results))
        object.__setattr__(self, "suppressed", frozenset(int(k) for k in self.suppressed))
        if any(k < 0 or k >= len(self.results) for k in self.suppressed):
            raise ValueError("Suppressed ordinals must refer to results")

    def __len__(self) -> int:
        return len(self.results)

    @property
    def points(self) -> np.ndarray:
        return np.array([r.z for r in self.results])

    @property
    def endpoints(self) -> np.ndarray:
        return np.array([r.x_star for r in self.results])

    @property
    def thetas(self) -> np.ndarray:
        return np.array([r.theta for r in self.results])

    @property
    def radii(self) -> np.ndarray:
        return np.sqrt(2.0 * self.thetas)

    def active_mask(self) -> np.ndarray:
        """True for balls that take part in membership queries."""
        mask = np.ones(len(self.results), dtype=bool)
        mask[list(self.suppressed)] = False
        return mask

    def with_suppressed(self, suppressed: FrozenSet[int]) -> "DistanceField":
        return replace(self, suppressed=frozenset(suppressed))

    def with_results(self, results: List[MayerResult]) -> "DistanceField":
        return replace(self, results=list(results))

    def to_dict(self, save_controls: bool = False) -> Dict[str, Any]:
        return {
            "grid": self.grid.to_dict(),
            "results": [r.to_dict(save_controls) for r in self.results],
            "suppressed": sorted(self.suppressed),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DistanceField":
        return cls(
            grid=GridSpec.from_dict(data["grid"]),
            results=[MayerResult.from_dict(r) for r in data["results"]],
            suppressed=frozenset(data.get("suppressed", [])),
        )
