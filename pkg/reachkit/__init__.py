"""Reachable set approximation by distance fields and adapted support vector machines."""

__version__ = "0.1.0"
