"""Command-line interface for reachkit."""

import argparse
import logging
import os
import sys
from typing import List, Optional

from reachkit.cli.pipeline import PipelineRunner
from reachkit.config.base_config import ExperimentConfig, load_config
from reachkit.core.exceptions import ConfigError, ReachkitError
from reachkit.dfog.base import DistanceField
from reachkit.discretization.base import DiscreteReachSet, GridSpec
from reachkit.export.managers import ExportManager
from reachkit.geometry.base import PointSet
from reachkit.geometry.distances import hausdorff
from reachkit.geometry.rasterize import dfog_pointset, sublevel_pointset
from reachkit.kernel.base import KERNEL_KINDS, KernelSpec
from reachkit.labelling.base import TrainingSet
from reachkit.labelling.managers import label
from reachkit.svm.base import SvmModel
from reachkit.svm.managers import fit, prune_suppressed

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PARTIAL = 3

logger = logging.getLogger("reachkit")


def _config(args: argparse.Namespace) -> ExperimentConfig:
    overrides = {
        "rho": getattr(args, "rho", None),
        "seed": getattr(args, "seed", None),
        "outputs": getattr(args, "out", None),
        "jobs": getattr(args, "jobs", None),
    }
    return load_config(args.config, overrides)


def cmd_reference(args: argparse.Namespace) -> int:
    runner = PipelineRunner(_config(args))
    reference = runner.reference()
    ExportManager().write(PointSet(reference.points).to_frame(), os.path.join(runner.config.outputs, "reference_points.csv"))
    return EXIT_OK


def cmd_dfog(args: argparse.Namespace) -> int:
    config = _config(args)
    runner = PipelineRunner(config)
    exporter = ExportManager()
    for rho in config.rho:
        exporter.write(runner.build_field(rho).to_dict(), os.path.join(runner.entry_dir(rho), "distance_field.json"))
    return EXIT_OK


def cmd_label(args: argparse.Namespace) -> int:
    exporter = ExportManager()
    field = DistanceField.from_dict(exporter.read(args.field))
    training = label(field, args.epsilon, keep_suppressed_exterior=args.keep_suppressed_exterior)
    exporter.write(training.to_dict(), args.output)
    return EXIT_OK


def cmd_fit(args: argparse.Namespace) -> int:
    exporter = ExportManager()
    training = TrainingSet.from_dict(exporter.read(args.training))
    try:
        kernel = KernelSpec(kind=args.kernel, sigma=args.sigma, tau=args.tau, degree=args.degree)
    except ValueError as err:
        raise ConfigError(str(err)) from err
    model = fit(training, kernel, args.C1, args.C2)
    if args.prune:
        prune_suppressed(model, DistanceField.from_dict(exporter.read(args.prune)))
    model.training_ref = os.path.basename(args.training)
    exporter.write(model.to_dict(), args.output)
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    exporter = ExportManager()
    reference = PointSet(DiscreteReachSet.from_dict(exporter.read(args.reference)).points)
    field = DistanceField.from_dict(exporter.read(args.field))
    evaluation = GridSpec(args.rho_eval, field.grid.lower, field.grid.upper)
    metrics = {"d_H_dfog": hausdorff(dfog_pointset(field, evaluation), reference)}
    if args.model:
        model = SvmModel.from_dict(exporter.read(args.model))
        metrics["d_H_svm"] = hausdorff(sublevel_pointset(model, evaluation), reference)
    for name, value in metrics.items():
        print(f"{name}={value:.6f}")
    if args.output:
        exporter.write(metrics, args.output)
    return EXIT_OK


def cmd_pipeline(args: argparse.Namespace) -> int:
    report = PipelineRunner(_config(args), resume=args.resume).run()
    if report.failed:
        logger.error(f"Sweep entries failed for rho={report.failed}")
        return EXIT_PARTIAL
    return EXIT_OK


def _add_config_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", required=True, help="Experiment JSON file or bundled name (bilinear, nonlinear)")
    parser.add_argument("--rho", type=float, nargs="+", help="Override the rho sweep")
    parser.add_argument("--seed", type=int, help="Override the random seed")
    parser.add_argument("--out", help="Override the output directory")
    parser.add_argument("--jobs", type=int, help="Worker count for distance-field solves")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reachkit", description="Reachable sets by distance fields and SVMs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level")
    sub = parser.add_subparsers(dest="command", required=True)

    reference = sub.add_parser("reference", help="Compute the fully discrete Euler reference set")
    _add_config_arguments(reference)
    reference.set_defaults(handler=cmd_reference)

    dfog = sub.add_parser("dfog", help="Build (and ball-check) the distance field for each rho")
    _add_config_arguments(dfog)
    dfog.set_defaults(handler=cmd_dfog)

    labelling = sub.add_parser("label", help="Label a distance field into a training set")
    labelling.add_argument("--field", required=True)
    labelling.add_argument("--epsilon", type=float, default=1e-6)
    labelling.add_argument("--keep-suppressed-exterior", action="store_true")
    labelling.add_argument("--output", required=True)
    labelling.set_defaults(handler=cmd_label)

    fitting = sub.add_parser("fit", help="Fit the SVM on a training set")
    fitting.add_argument("--training", required=True)
    fitting.add_argument("--kernel", choices=KERNEL_KINDS, default="gaussian")
    fitting.add_argument("--sigma", type=float, default=0.7)
    fitting.add_argument("--tau", type=float, default=1.0, help="Polynomial kernel offset")
    fitting.add_argument("--degree", type=int, default=2, help="Polynomial kernel degree")
    fitting.add_argument("--C1", type=float, default=10.0)
    fitting.add_argument("--C2", type=float, default=30.0)
    fitting.add_argument("--prune", metavar="FIELD", help="Distance field whose suppressed exterior points are removed")
    fitting.add_argument("--output", required=True)
    fitting.set_defaults(handler=cmd_fit)

    evaluation = sub.add_parser("eval", help="Hausdorff distances against a reference set")
    evaluation.add_argument("--reference", required=True)
    evaluation.add_argument("--field", required=True)
    evaluation.add_argument("--model")
    evaluation.add_argument("--rho-eval", type=float, default=0.02)
    evaluation.add_argument("--output")
    evaluation.set_defaults(handler=cmd_eval)

    pipeline = sub.add_parser("pipeline", help="Run the full rho sweep")
    _add_config_arguments(pipeline)
    pipeline.add_argument("--resume", action="store_true", help="Skip rho values that already have metrics")
    pipeline.set_defaults(handler=cmd_pipeline)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args)
    except ConfigError as e:
        logger.error(f"Configuration error: {e}")
        return EXIT_CONFIG
    except ReachkitError as e:
        logger.exception(f"Command '{args.command}' failed: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
