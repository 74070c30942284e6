"""Artifact export for reachkit."""

from reachkit.export.base import ExportFormat
from reachkit.export.managers import ExportManager

__all__ = ["ExportFormat", "ExportManager"]
