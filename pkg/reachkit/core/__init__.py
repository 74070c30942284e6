"""Core package for reachkit."""
