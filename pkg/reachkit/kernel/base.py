"""Base module for Mercer kernels."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

KERNEL_KINDS = ("gaussian", "polynomial")


@dataclass(frozen=True)
class KernelSpec:
    """Kernel family and parameters.

    gaussian: K(x, y) = exp(-|x - y|^2 / sigma); polynomial: K(x, y) = (x.y + tau)^degree.
    """

    kind: str = "gaussian"
    sigma: float = 0.7
    tau: float = 1.0
    degree: int = 2

    def __post_init__(self) -> None:
        if self.kind not in KERNEL_KINDS:
            raise ValueError(f"Unknown kernel kind '{self.kind}', expected one of {KERNEL_KINDS}")
        if self.kind == "gaussian" and not self.sigma > 0:
            raise ValueError(f"Gaussian width sigma must be positive, got {self.sigma}")
        if self.kind == "polynomial":
            if self.tau < 0:
                raise ValueError(f"Polynomial offset tau must be nonnegative, got {self.tau}")
            if int(self.degree) != self.degree or self.degree < 1:
                raise ValueError(f"Polynomial degree must be a positive integer, got {self.degree}")

    def to_dict(self) -> Dict[str, Any]:
        if self.kind == "gaussian":
            return {"kind": self.kind, "sigma": self.sigma}
        return {"kind": self.kind, "tau": self.tau, "degree": int(self.degree)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "KernelSpec":
        return cls(**data)


class KernelBase(ABC):
    """Abstract base class for kernels evaluated on point arrays."""

    @abstractmethod
    def pairwise(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """Return the matrix K(X_i, Y_j)."""
        pass

    @abstractmethod
    def evaluate(self, x: np.ndarray, y: np.ndarray) -> float:
        """Return K(x, y) for two single points."""
        pass
