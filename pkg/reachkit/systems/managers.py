"""Registry of control systems selectable by name."""

import logging
from typing import Callable, Dict, List, Optional

import numpy as np

from reachkit.systems.base import ControlSystem
from reachkit.systems.builtins import builtin_bilinear, builtin_nonlinear

SystemFactory = Callable[[], ControlSystem]


class SystemRegistry:
    """Manager class for handling named system factories."""

    def __init__(self) -> None:
        """Initialize SystemRegistry."""
        self.systems: Dict[str, SystemFactory] = {}
        self.logger = logging.getLogger(__name__)

    def add_system(self, name: str, factory: SystemFactory) -> None:
        """Register a system factory under a name."""
        self.systems[name] = factory
        self.logger.debug(f"System '{name}' registered")

    def remove_system(self, name: str) -> None:
        """Remove a system from the registry."""
        if name in self.systems:
            del self.systems[name]

    def get_factory(self, name: str) -> Optional[SystemFactory]:
        """Get a system factory by name."""
        return self.systems.get(name)

    def get_system(self, name: str) -> ControlSystem:
        """Build the system registered under the given name."""
        factory = self.get_factory(name)
        if factory:
            return factory()
        else:
            raise ValueError(f"System '{name}' not found.")

    def names(self) -> List[str]:
        return sorted(self.systems)


def default_registry() -> SystemRegistry:
    """Registry holding the builtin example systems."""
    registry = SystemRegistry()
    registry.add_system("bilinear", builtin_bilinear)
    registry.add_system("nonlinear", builtin_nonlinear)
    return registry


def eval_dynamics(system: ControlSystem, t: float, x: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Evaluate g(t, x, u) after checking that u lies in the control box."""
    system.check_control(u)
    return system.dynamics(t, np.asarray(x, dtype=float), np.asarray(u, dtype=float).reshape(-1))
