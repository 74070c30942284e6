"""Base types for the adapted three-label support vector machine."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Set, Union

import numpy as np
import pandas as pd

from reachkit.discretization.base import GridSpec
from reachkit.kernel.base import KernelSpec
from reachkit.kernel.kernels import kernel_matrix
from reachkit.labelling.base import TrainingSet

# Relative slack for deciding that a dual coefficient sits on its bound.
STATUS_TOL = 1e-10


class VectorStatus(Enum):
    SUPPORT = "support"
    ERROR = "error"
    IGNORED = "ignored"


@dataclass(frozen=True, eq=False)
class MarginReport:
    """KKT margins g_i of the active points (NaN for inactive ones)."""

    g: np.ndarray
    max_violation: float


class SvmModel:
    """Dual state of the adapted SVM over a training set.

    Dual boxes: interior [0, inf), exterior [0, C1], boundary [-C2, inf). The dual cost
    is 1/2 a^T K a - sum of alpha over interior and exterior points, subject to
    sum(y * alpha) = 0, with signed coefficients a = y * alpha.

    Points enter and leave through the incremental procedure; ``active`` marks the points
    currently in the model. ``support``, ``error`` and ``ignored`` are the solver's books.
    """

    def __init__(self, training: TrainingSet, kernel: KernelSpec, C1: float, C2: float) -> None:
        """Initialize an empty SvmModel.

        Args:
        ----
            training (TrainingSet): Labelled points the model may draw from.
            kernel (KernelSpec): Mercer kernel.
            C1 (float): Penalty on exterior slack.
            C2 (float): Penalty on boundary slack.
        """
        if not (C1 > 0 and C2 > 0):
            raise ValueError(f"Regularisation coefficients must be positive, got C1={C1}, C2={C2}")
        self.training = training
        self.kernel = kernel
        self.C1 = float(C1)
        self.C2 = float(C2)
        m = training.m
        self.y = training.labels
        self.kinds = training.kinds()
        self.lower = np.zeros(m)
        self.upper = np.full(m, np.inf)
        self.upper[training.exterior] = self.C1
        self.lower[training.boundary] = -self.C2
        self.linear = np.ones(m)
        self.linear[training.boundary] = 0.0
        self.alpha = np.zeros(m)
        self.b = 0.0
        self.active = np.zeros(m, dtype=bool)
        self.g = np.full(m, np.nan)
        self.support: List[int] = []
        self.error: Set[int] = set()
        self.ignored: Set[int] = set()
        self.training_ref: Optional[str] = None
        self._gram: Optional[np.ndarray] = None
        self.logger = logging.getLogger(__name__)

    @property
    def gram(self) -> np.ndarray:
        if self._gram is None:
            self._gram = kernel_matrix(self.kernel, self.training.points)
        return self._gram

    def Q(self, rows: Sequence[int], cols: Sequence[int]) -> np.ndarray:
        """Block of Q_ij = y_i y_j K(x_i, x_j)."""
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        return self.y[rows, None] * self.y[None, cols] * self.gram[np.ix_(rows, cols)]

    @property
    def active_indices(self) -> np.ndarray:
        return np.flatnonzero(self.active)

    @property
    def coefficients(self) -> np.ndarray:
        """Signed coefficients a_i = y_i alpha_i (zero for inactive points)."""
        return np.where(self.active, self.y * self.alpha, 0.0)

    def decision(self, x: np.ndarray) -> Union[float, np.ndarray]:
        """f(x) + b with f = sum_i a_i K(x_i, .); a float for one point, an array otherwise."""
        x = np.asarray(x, dtype=float)
        single = x.ndim == 1
        X = x.reshape(1, -1) if single else x
        idx = self.active_indices
        if idx.size == 0:
            values = np.full(X.shape[0], self.b)
        else:
            K = kernel_matrix(self.kernel, X, self.training.points[idx])
            values = K @ self.coefficients[idx] + self.b
        return float(values[0]) if single else values

    def classify(self, x: np.ndarray) -> Union[bool, np.ndarray]:
        """Membership in the sublevel-set representation {f + b >= 0}."""
        values = self.decision(x)
        return bool(values >= 0.0) if isinstance(values, float) else values >= 0.0

    def margin_values(self, indices: Sequence[int]) -> np.ndarray:
        """g_i = y_i (f(x_i) + b) - p_i recomputed from scratch, p_i = 1 off the boundary."""
        indices = np.asarray(indices, dtype=np.int64)
        idx = self.active_indices
        f = self.gram[np.ix_(indices, idx)] @ self.coefficients[idx] if idx.size else np.zeros(indices.shape[0])
        return self.y[indices] * (f + self.b) - self.linear[indices]

    def refresh_margins(self) -> None:
        idx = self.active_indices
        self.g[:] = np.nan
        if idx.size:
            self.g[idx] = self.margin_values(idx)

    def at_lower(self, i: int) -> bool:
        return bool(self.alpha[i] <= self.lower[i] + STATUS_TOL * max(1.0, abs(self.lower[i])))

    def at_upper(self, i: int) -> bool:
        return bool(np.isfinite(self.upper[i]) and self.alpha[i] >= self.upper[i] - STATUS_TOL * max(1.0, self.upper[i]))

    def margins(self) -> MarginReport:
        """KKT margins and the largest violation of the regime each alpha_i sits in."""
        g = np.full(self.training.m, np.nan)
        worst = 0.0
        for i in self.active_indices:
            g[i] = self.margin_values([i])[0]
            if self.at_lower(i):
                violation = max(0.0, -g[i])
            elif self.at_upper(i):
                violation = max(0.0, g[i])
            else:
                violation = abs(g[i])
            worst = max(worst, violation)
        return MarginReport(g=g, max_violation=worst)

    def vector_status(self, i: int) -> VectorStatus:
        """Support, error or ignored, read off alpha_i and the point's label."""
        if not self.active[i]:
            raise ValueError(f"Point {i} is not part of the model")
        kind = self.kinds[i]
        if kind == "B":
            return VectorStatus.ERROR if self.at_lower(i) else VectorStatus.SUPPORT
        if self.at_lower(i):
            return VectorStatus.IGNORED
        if kind == "E" and self.at_upper(i):
            return VectorStatus.ERROR
        return VectorStatus.SUPPORT

    @property
    def status(self) -> List[Optional[str]]:
        return [self.vector_status(i).value if self.active[i] else None for i in range(self.training.m)]

    def equality_residual(self) -> float:
        """|sum_i y_i alpha_i| over the active points."""
        return abs(float(self.y[self.active] @ self.alpha[self.active]))

    def dual_objective(self) -> float:
        idx = self.active_indices
        a = self.coefficients[idx]
        return 0.5 * float(a @ self.gram[np.ix_(idx, idx)] @ a) - float(self.linear[idx] @ self.alpha[idx])

    def decision_frame(self, grid: GridSpec) -> pd.DataFrame:
        """Decision values over a lattice, one row (x1, ..., xd, decision) per point."""
        points = grid.points()
        frame = pd.DataFrame(points, columns=[f"x{k + 1}" for k in range(points.shape[1])])
        frame["decision"] = self.decision(points) if len(points) else []
        return frame

    def rebuild_books(self) -> None:
        """Sort active points into support/error/ignored books from their alphas."""
        self.support, self.error, self.ignored = [], set(), set()
        for i in self.active_indices:
            status = self.vector_status(int(i))
            if status is VectorStatus.SUPPORT:
                self.support.append(int(i))
            elif status is VectorStatus.ERROR:
                self.error.add(int(i))
            else:
                self.ignored.add(int(i))
        self.refresh_margins()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kernel": self.kernel.to_dict(),
            "C1": self.C1,
            "C2": self.C2,
            "alpha": self.alpha.tolist(),
            "b": self.b,
            "active": self.active.tolist(),
            "status": self.status,
            "training_ref": self.training_ref,
            "training": self.training.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], training: Optional[TrainingSet] = None) -> "SvmModel":
        training = training or TrainingSet.from_dict(data["training"])
        model = cls(training, KernelSpec.from_dict(data["kernel"]), data["C1"], data["C2"])
        model.alpha = np.asarray(data["alpha"], dtype=float)
        model.b = float(data["b"])
        model.active = np.asarray(data["active"], dtype=bool)
        model.training_ref = data.get("training_ref")
        model.rebuild_books()
        return model
