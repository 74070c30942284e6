"""Configuration package for reachkit."""

from reachkit.config.base_config import (
    BALL_CHECK_MODES,
    ExperimentConfig,
    ReferenceConfig,
    bundled_configs,
    load_config,
)

__all__ = ["BALL_CHECK_MODES", "ExperimentConfig", "ReferenceConfig", "bundled_configs", "load_config"]
