"""Base module for finite point sets."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import pandas as pd


@dataclass(frozen=True, eq=False)
class PointSet:
    """Finite set of d-dimensional points, one per row.

    ``degenerate`` marks a rasterization that came out empty.
    """

    points: np.ndarray
    degenerate: bool = False

    def __post_init__(self) -> None:
        points = np.array(self.points, dtype=float)
        if points.ndim == 1:
            points = points.reshape(-1, 1) if points.size else points.reshape(0, 0)
        points.setflags(write=False)
        object.__setattr__(self, "points", points)

    def __len__(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    @property
    def empty(self) -> bool:
        return len(self) == 0

    def columns(self) -> Sequence[str]:
        return [f"x{k + 1}" for k in range(self.dim)]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.points, columns=self.columns())

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> "PointSet":
        columns = [c for c in frame.columns if c.startswith("x")]
        return cls(frame[columns].to_numpy(dtype=float))
