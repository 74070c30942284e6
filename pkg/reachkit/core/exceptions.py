"""Exceptions raised across reachkit."""

from typing import Any, Dict, Optional, Sequence


class ReachkitError(Exception):
    """Base class for reachkit errors."""


class DomainError(ReachkitError, ValueError):
    """Input outside the domain of an operation."""


class ControlBoxError(DomainError):
    """A control value lies outside the control box."""

    def __init__(self, coordinate: int, value: float, lower: float, upper: float, step: Optional[int] = None) -> None:
        self.coordinate = coordinate
        self.value = value
        self.lower = lower
        self.upper = upper
        self.step = step
        where = f" at step {step}" if step is not None else ""
        super().__init__(
            f"Control coordinate {coordinate}{where} is {value!r}, outside [{lower!r}, {upper!r}]"
        )


class DivergenceError(ReachkitError, RuntimeError):
    """A trajectory produced a non-finite state."""

    def __init__(self, step: int) -> None:
        self.step = step
        super().__init__(f"Non-finite state produced at Euler step {step}")


class BoundaryClippingError(ReachkitError, RuntimeError):
    """A reachable point left the region covered by the grid."""

    def __init__(self, point: Sequence[float]) -> None:
        self.point = tuple(float(v) for v in point)
        super().__init__(f"Point {self.point} escaped the grid region; enlarge Omega")


class ConvergenceError(ReachkitError, RuntimeError):
    """An iterative procedure failed to terminate."""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None) -> None:
        self.diagnostics = diagnostics or {}
        super().__init__(message)


class ConfigError(ReachkitError, ValueError):
    """Invalid experiment configuration."""
