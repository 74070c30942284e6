"""Pipeline runner: reference, distance field, labelling, SVM and metrics per rho."""

import logging
import math
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from reachkit.config.base_config import ExperimentConfig
from reachkit.core.exceptions import ConfigError
from reachkit.dfog.base import DistanceField
from reachkit.dfog.managers import ball_check, build_distance_field
from reachkit.discretization.base import DiscreteReachSet, GridSpec
from reachkit.discretization.euler import euler_reach_reference
from reachkit.export.managers import ExportManager
from reachkit.geometry.base import PointSet
from reachkit.geometry.distances import hausdorff
from reachkit.geometry.rasterize import dfog_pointset, sublevel_pointset
from reachkit.labelling.managers import label
from reachkit.svm.managers import fit, prune_suppressed
from reachkit.systems.base import ControlSystem
from reachkit.systems.managers import SystemRegistry, default_registry

SUMMARY_COLUMNS = ["rho", "d_H_dfog", "d_H_svm"]


@dataclass
class PipelineReport:
    """Summary table of a sweep plus the rho values whose entry failed."""

    summary: pd.DataFrame
    failed: List[float] = field(default_factory=list)
    output_dir: str = ""

    @property
    def ok(self) -> bool:
        return not self.failed


def _distance(A: PointSet, B: PointSet) -> float:
    if A.empty or B.empty:
        return math.nan
    return hausdorff(A, B)


class PipelineRunner:
    """Class to run a reachable-set experiment over its rho sweep."""

    def __init__(
        self,
        config: ExperimentConfig,
        registry: Optional[SystemRegistry] = None,
        exporter: Optional[ExportManager] = None,
        resume: bool = False,
    ) -> None:
        """Initialize the PipelineRunner.

        Args:
        ----
            config (ExperimentConfig): The experiment.
            registry (Optional[SystemRegistry]): Source of the named system; builtins by default.
            exporter (Optional[ExportManager]): Artifact writer.
            resume (bool): Skip sweep entries whose metrics already exist.
        """
        self.config = config
        try:
            self.system: ControlSystem = (registry or default_registry()).get_system(config.system)
        except ValueError as err:
            raise ConfigError(f"Unknown system in configuration: {err}") from err
        self.exporter = exporter or ExportManager()
        self.resume = resume
        self.logger = logging.getLogger(__name__)
        self._reference: Optional[DiscreteReachSet] = None

    @property
    def h(self) -> float:
        return self.system.horizon / self.config.N

    def entry_dir(self, rho: float) -> str:
        return os.path.join(self.config.outputs, f"rho_{rho:g}")

    def reference(self) -> DiscreteReachSet:
        """Fully discrete Euler reference, computed once and cached under the output directory."""
        if self._reference is not None:
            return self._reference
        path = os.path.join(self.config.outputs, "reference.json")
        ref = self.config.reference
        if self.resume and os.path.exists(path):
            self._reference = DiscreteReachSet.from_dict(self.exporter.read(path))
            self.logger.info(f"Loaded reference from {path}")
        else:
            grid = GridSpec(ref.rho, ref.lower, ref.upper)
            self._reference = euler_reach_reference(self.system, grid, self.h, ref.control_samples)
            self.exporter.write(self._reference.to_dict(), path)
        return self._reference

    def omega(self, rho: float) -> GridSpec:
        """Omega for one sweep entry: the reference bounding box grown by 3 rho, or the configured box."""
        if self.config.omega == "auto":
            return GridSpec.around(self.reference().points, rho, 3.0 * rho)
        lower, upper = self.config.omega
        return GridSpec(rho, lower, upper)

    def build_field(self, rho: float) -> DistanceField:
        field_ = build_distance_field(
            self.system,
            self.omega(rho),
            self.config.N,
            restarts=self.config.restarts,
            seed=self.config.seed,
            n_jobs=self.config.jobs,
        )
        return ball_check(field_) if self.config.ball_check else field_

    def run_entry(self, rho: float) -> Dict[str, Any]:
        """Run every stage for one rho and write its artifacts; returns the entry metrics."""
        config = self.config
        out = self.entry_dir(rho)
        reference = PointSet(self.reference().points)

        field_ = self.build_field(rho)
        decrementing = config.ball_check and config.ball_check_mode == "decrement"
        training = label(field_, config.epsilon, keep_suppressed_exterior=decrementing)
        kernel, C1, C2 = config.learning_parameters(rho)
        model = fit(training, kernel, C1, C2)
        if decrementing:
            prune_suppressed(model, field_)
        model.training_ref = "training_set.json"

        evaluation = GridSpec(config.rho_eval, field_.grid.lower, field_.grid.upper)
        svm_set = sublevel_pointset(model, evaluation)
        dfog_set = dfog_pointset(field_, evaluation)
        report = model.margins()
        metrics = {
            "rho": rho,
            "d_H_dfog": _distance(dfog_set, reference),
            "d_H_svm": _distance(svm_set, reference),
            "grid_points": len(field_),
            "suppressed": len(field_.suppressed),
            "not_converged": sum(not r.converged for r in field_.results),
            "interior": len(training.interior),
            "exterior": len(training.exterior),
            "boundary": len(training.boundary),
            "support": len(model.support),
            "max_violation": report.max_violation,
            "sigma": kernel.sigma,
            "C1": C1,
            "C2": C2,
            "dfog_degenerate": dfog_set.degenerate,
            "svm_degenerate": svm_set.degenerate,
        }

        self.exporter.write(field_.to_dict(), os.path.join(out, "distance_field.json"))
        self.exporter.write(training.to_dict(), os.path.join(out, "training_set.json"))
        self.exporter.write(model.to_dict(), os.path.join(out, "svm_model.json"))
        self.exporter.write(model.decision_frame(evaluation), os.path.join(out, "decision_grid.csv"))
        self.exporter.write(dfog_set.to_frame(), os.path.join(out, "dfog_points.csv"))
        self.exporter.write(reference.to_frame(), os.path.join(out, "reference_points.csv"))
        self.exporter.write(metrics, os.path.join(out, "metrics.json"))
        self.logger.info(
            f"rho={rho:g}: d_H_dfog={metrics['d_H_dfog']:.4f}, d_H_svm={metrics['d_H_svm']:.4f}"
        )
        return metrics

    def run(self) -> PipelineReport:
        """Run the sweep; a failing entry is logged and recorded, and the sweep continues."""
        rows = []
        failed = []
        self.reference()
        for rho in self.config.rho:
            metrics_path = os.path.join(self.entry_dir(rho), "metrics.json")
            try:
                if self.resume and os.path.exists(metrics_path):
                    metrics = self.exporter.read(metrics_path)
                    self.logger.info(f"rho={rho:g} already complete, skipping")
                else:
                    metrics = self.run_entry(rho)
            except Exception as e:
                self.logger.exception(f"Sweep entry rho={rho:g} failed: {e}")
                failed.append(rho)
                metrics = {"rho": rho, "d_H_dfog": np.nan, "d_H_svm": np.nan}
            rows.append({column: metrics[column] for column in SUMMARY_COLUMNS})
        summary = pd.DataFrame(rows, columns=SUMMARY_COLUMNS)
        self.exporter.write(summary, os.path.join(self.config.outputs, "summary.csv"))
        return PipelineReport(summary=summary, failed=failed, output_dir=self.config.outputs)


def run_pipeline(
    config: ExperimentConfig, resume: bool = False, registry: Optional[SystemRegistry] = None
) -> PipelineReport:
    """Run the full experiment described by ``config``."""
    return PipelineRunner(config, registry=registry, resume=resume).run()
