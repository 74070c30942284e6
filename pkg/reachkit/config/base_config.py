"""Base configuration module for reachkit experiments."""

import os
from dataclasses import asdict, dataclass, field, fields, replace
from importlib import resources
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from reachkit.core.exceptions import ConfigError
from reachkit.kernel.base import KernelSpec
from reachkit.utils import load_json

BALL_CHECK_MODES = ("label", "decrement")


@dataclass(frozen=True)
class ReferenceConfig:
    """Fully discrete Euler reference: grid spacing, bounding box and control lattice size."""

    rho: float = 0.02
    lower: Tuple[float, ...] = (-2.0, -2.0)
    upper: Tuple[float, ...] = (2.0, 2.0)
    control_samples: int = 8


@dataclass(frozen=True)
class ExperimentConfig:
    """One reachable-set experiment: a system, a rho sweep and the learning parameters.

    ``hyperparameters`` maps a rho value (as written with ``{rho:g}``) to overrides of
    sigma, C1 and C2 for that sweep entry.
    """

    system: str
    N: int
    rho: List[float]
    omega: Union[str, List[List[float]]] = "auto"
    epsilon: float = 1e-6
    kernel: KernelSpec = field(default_factory=KernelSpec)
    C1: float = 10.0
    C2: float = 30.0
    restarts: int = 5
    seed: int = 0
    ball_check: bool = True
    ball_check_mode: str = "label"
    reference: ReferenceConfig = field(default_factory=ReferenceConfig)
    rho_eval: float = 0.02
    hyperparameters: Dict[str, Dict[str, float]] = field(default_factory=dict)
    outputs: str = "outputs"
    jobs: int = 1

    def __post_init__(self) -> None:
        rho = [float(r) for r in (self.rho if isinstance(self.rho, (list, tuple)) else [self.rho])]
        object.__setattr__(self, "rho", rho)
        self.validate()

    def validate(self) -> None:
        """Raise ConfigError on the first invalid field."""
        if not self.rho:
            raise ConfigError("rho sweep must not be empty")
        if any(r <= 0 for r in self.rho):
            raise ConfigError(f"rho values must be positive, got {self.rho}")
        if self.rho != sorted(self.rho, reverse=True):
            raise ConfigError(f"rho sweep must be sorted descending, got {self.rho}")
        for name in ("N", "restarts"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        for name in ("epsilon", "C1", "C2", "rho_eval"):
            if not getattr(self, name) > 0:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if not isinstance(self.jobs, int) or self.jobs == 0:
            raise ConfigError("jobs must be nonzero (negative values count back from all cores)")
        if self.ball_check_mode not in BALL_CHECK_MODES:
            raise ConfigError(f"ball_check_mode must be one of {BALL_CHECK_MODES}, got '{self.ball_check_mode}'")
        if self.omega != "auto":
            if not (isinstance(self.omega, (list, tuple)) and len(self.omega) == 2):
                raise ConfigError(f"omega must be 'auto' or [lower, upper], got {self.omega}")
            lower, upper = self.omega
            if len(lower) != len(upper) or any(lo >= hi for lo, hi in zip(lower, upper)):
                raise ConfigError(f"omega bounds are inconsistent: {self.omega}")
        ref = self.reference
        if not ref.rho > 0 or ref.control_samples < 1:
            raise ConfigError(f"reference needs rho > 0 and control_samples >= 1, got {ref}")
        if len(ref.lower) != len(ref.upper) or any(lo >= hi for lo, hi in zip(ref.lower, ref.upper)):
            raise ConfigError(f"reference bounds are inconsistent: {ref.lower}, {ref.upper}")
        for key, values in self.hyperparameters.items():
            unknown = set(values) - {"sigma", "C1", "C2"}
            if unknown:
                raise ConfigError(f"Unknown hyperparameters {sorted(unknown)} for rho={key}")
            if any(not v > 0 for v in values.values()):
                raise ConfigError(f"Hyperparameters for rho={key} must be positive, got {values}")

    def learning_parameters(self, rho: float) -> Tuple[KernelSpec, float, float]:
        """Kernel, C1 and C2 for one sweep entry, with per-rho overrides applied."""
        overrides = self.hyperparameters.get(f"{rho:g}", {})
        kernel = replace(self.kernel, sigma=overrides["sigma"]) if "sigma" in overrides else self.kernel
        return kernel, float(overrides.get("C1", self.C1)), float(overrides.get("C2", self.C2))

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["kernel"] = self.kernel.to_dict()
        data["reference"] = {k: list(v) if isinstance(v, tuple) else v for k, v in data["reference"].items()}
        return data

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "ExperimentConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"Unknown configuration keys: {sorted(unknown)}")
        data = dict(data)
        try:
            if "kernel" in data:
                data["kernel"] = KernelSpec(**data["kernel"])
            if "reference" in data:
                ref = dict(data["reference"])
                for key in ("lower", "upper"):
                    if key in ref:
                        ref[key] = tuple(float(v) for v in ref[key])
                data["reference"] = ReferenceConfig(**ref)
            return cls(**data)
        except ConfigError:
            raise
        except (TypeError, ValueError) as err:
            raise ConfigError(f"Invalid configuration: {err}") from err


def bundled_configs() -> List[str]:
    """Names of the experiment files shipped with the package."""
    folder = resources.files("reachkit.config").joinpath("experiments")
    return sorted(entry.name[:-5] for entry in folder.iterdir() if entry.name.endswith(".json"))


def load_config(path_or_name: str, overrides: Optional[Mapping[str, Any]] = None) -> ExperimentConfig:
    """Load an experiment from a JSON file, or a bundled experiment by name.

    Args:
    ----
        path_or_name (str): A file path, or a bundled name such as ``bilinear``.
        overrides (Optional[Mapping[str, Any]]): Top-level keys replacing file values; None values are ignored.

    Raises:
    ------
        ConfigError: If the file is missing, unreadable, not valid JSON, or the configuration is invalid.
    """
    if os.path.isfile(path_or_name):
        try:
            data = load_json(path_or_name)
        except (ValueError, OSError) as err:
            raise ConfigError(f"Cannot read configuration {path_or_name}: {err}") from err
    elif path_or_name in bundled_configs():
        resource = resources.files("reachkit.config").joinpath("experiments", f"{path_or_name}.json")
        with resources.as_file(resource) as path:
            data = load_json(str(path))
    else:
        raise ConfigError(f"No configuration file or bundled experiment named '{path_or_name}'")
    if not isinstance(data, dict):
        raise ConfigError(f"Configuration {path_or_name} must be a JSON object")
    data.update({key: value for key, value in (overrides or {}).items() if value is not None})
    return ExperimentConfig.from_dict(data)
