"""Command-line front-end and pipeline runner for reachkit."""

from reachkit.cli.pipeline import PipelineReport, PipelineRunner, run_pipeline

__all__ = ["PipelineReport", "PipelineRunner", "run_pipeline"]
