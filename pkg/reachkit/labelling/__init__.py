"""Labelling of distance fields into training sets."""

from reachkit.labelling.base import TrainingSet
from reachkit.labelling.managers import DEDUP_TOL, DEFAULT_EPSILON, label

__all__ = ["DEDUP_TOL", "DEFAULT_EPSILON", "TrainingSet", "label"]
