"""Base module for labelled training sets."""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np


def _index_array(values) -> np.ndarray:
    array = np.array(sorted(int(v) for v in values), dtype=np.int64)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class TrainingSet:
    """Points x_1..x_m with a partition into interior, exterior and boundary indices.

    Indices are zero-based. ``origin[i]`` is the field ordinal that produced point i,
    or -1 for points not taken from a distance field.
    """

    points: np.ndarray
    interior: np.ndarray
    exterior: np.ndarray
    boundary: np.ndarray
    epsilon: float
    origin: Optional[np.ndarray] = field(default=None)

    def __post_init__(self) -> None:
        points = np.array(self.points, dtype=float)
        if points.ndim == 1:
            points = points.reshape(-1, 1)
        points.setflags(write=False)
        object.__setattr__(self, "points", points)
        for name in ("interior", "exterior", "boundary"):
            object.__setattr__(self, name, _index_array(getattr(self, name)))
        origin = np.full(self.m, -1, dtype=np.int64) if self.origin is None else np.asarray(self.origin, dtype=np.int64)
        object.__setattr__(self, "origin", origin)
        parts = np.concatenate([self.interior, self.exterior, self.boundary])
        if parts.shape[0] != self.m or not np.array_equal(np.sort(parts), np.arange(self.m)):
            raise ValueError("Interior, exterior and boundary indices must partition the training points")
        if self.origin.shape[0] != self.m:
            raise ValueError("Origin must name one field ordinal per point")

    @property
    def m(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    @property
    def labels(self) -> np.ndarray:
        """y_i = +1 on interior and boundary points, -1 on exterior points."""
        y = np.ones(self.m)
        y[self.exterior] = -1.0
        return y

    def kinds(self) -> np.ndarray:
        """Per-point tag 'I', 'E' or 'B'."""
        tags = np.empty(self.m, dtype="<U1")
        tags[self.interior] = "I"
        tags[self.exterior] = "E"
        tags[self.boundary] = "B"
        return tags

    def to_dict(self) -> Dict[str, Any]:
        return {
            "points": self.points.tolist(),
            "interior": self.interior.tolist(),
            "exterior": self.exterior.tolist(),
            "boundary": self.boundary.tolist(),
            "epsilon": self.epsilon,
            "origin": self.origin.tolist(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TrainingSet":
        return cls(
            points=np.asarray(data["points"], dtype=float),
            interior=data["interior"],
            exterior=data["exterior"],
            boundary=data["boundary"],
            epsilon=data["epsilon"],
            origin=data.get("origin"),
        )
