"""Point-to-set and set-to-set distances."""

import numpy as np
from scipy.spatial.distance import cdist, directed_hausdorff

from reachkit.core.exceptions import DomainError
from reachkit.geometry.base import PointSet

TIE_TOL = 1e-12


def _require(A: PointSet, name: str = "A") -> None:
    if A.empty:
        raise DomainError(f"Point set {name} is empty")


def _as_point(x: np.ndarray, A: PointSet) -> np.ndarray:
    x = np.asarray(x, dtype=float).reshape(1, -1)
    if x.shape[1] != A.dim:
        raise DomainError(f"Point of dimension {x.shape[1]} does not match set dimension {A.dim}")
    return x


def dist_point_set(x: np.ndarray, A: PointSet) -> float:
    """dist(x, A) = min over a in A of |x - a|."""
    _require(A)
    return float(np.min(cdist(_as_point(x, A), A.points)))


def projection(x: np.ndarray, A: PointSet) -> PointSet:
    """All points of A at distance dist(x, A) from x."""
    _require(A)
    distances = cdist(_as_point(x, A), A.points)[0]
    return PointSet(A.points[distances <= distances.min() + TIE_TOL])


def neighbourhood_contains(A: PointSet, r: float, x: np.ndarray) -> bool:
    """Whether x lies in the closed r-neighbourhood of A."""
    if r < 0:
        raise ValueError(f"Neighbourhood radius must be nonnegative, got {r}")
    return dist_point_set(x, A) <= r


def semi_distance(A: PointSet, B: PointSet) -> float:
    """One-sided Hausdorff distance max over a in A of dist(a, B)."""
    _require(A, "A")
    _require(B, "B")
    if A.dim != B.dim:
        raise DomainError(f"Point sets of dimension {A.dim} and {B.dim} cannot be compared")
    return float(directed_hausdorff(A.points, B.points)[0])


def hausdorff(A: PointSet, B: PointSet) -> float:
    """d_H(A, B) = max(d(A, B), d(B, A))."""
    return max(semi_distance(A, B), semi_distance(B, A))
