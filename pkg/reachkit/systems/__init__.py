"""Control systems package for reachkit."""

from reachkit.systems.base import ControlSystem
from reachkit.systems.builtins import BilinearSystem, NonlinearSystem, builtin_bilinear, builtin_nonlinear
from reachkit.systems.managers import SystemRegistry, default_registry, eval_dynamics

__all__ = [
    "BilinearSystem",
    "ControlSystem",
    "NonlinearSystem",
    "SystemRegistry",
    "builtin_bilinear",
    "builtin_nonlinear",
    "default_registry",
    "eval_dynamics",
]
