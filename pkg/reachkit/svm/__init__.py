"""Adapted three-label support vector machine for reachkit."""

from reachkit.svm.base import STATUS_TOL, MarginReport, SvmModel, VectorStatus
from reachkit.svm.incremental import decrement_point, increment_batch, increment_point
from reachkit.svm.managers import (
    classify,
    decision,
    fit,
    insertion_order,
    margins,
    prune_suppressed,
    vector_status,
)

__all__ = [
    "STATUS_TOL",
    "MarginReport",
    "SvmModel",
    "VectorStatus",
    "classify",
    "decision",
    "decrement_point",
    "fit",
    "increment_batch",
    "increment_point",
    "insertion_order",
    "margins",
    "prune_suppressed",
    "vector_status",
]
