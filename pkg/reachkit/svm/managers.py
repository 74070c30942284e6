"""Training entry points and query helpers for the adapted SVM."""

import logging
from itertools import chain, zip_longest
from typing import List, Optional, Sequence, Union

import numpy as np

from reachkit.core.exceptions import ConvergenceError
from reachkit.dfog.base import DistanceField
from reachkit.kernel.base import KernelSpec
from reachkit.labelling.base import TrainingSet
from reachkit.svm.base import MarginReport, SvmModel, VectorStatus
from reachkit.svm.incremental import decrement_point, increment_point

logger = logging.getLogger(__name__)

OFFSET_TOL = 1e-6


def insertion_order(training: TrainingSet, indices: Optional[Sequence[int]] = None) -> List[int]:
    """Interior points first, then exterior and boundary points alternately."""
    allowed = set(range(training.m)) if indices is None else {int(i) for i in indices}
    interior = [int(i) for i in training.interior if i in allowed]
    exterior = [int(i) for i in training.exterior if i in allowed]
    boundary = [int(i) for i in training.boundary if i in allowed]
    rest = [i for i in chain.from_iterable(zip_longest(exterior, boundary)) if i is not None]
    return interior + rest


def _bootstrap_pair(model: SvmModel, p: int, q: int) -> None:
    """Closed-form optimum of the dual restricted to an interior point p and a point q."""
    K = model.gram
    d = K[p, p] + K[q, q] - 2.0 * K[p, q]
    if d <= 0:
        raise ConvergenceError(f"Bootstrap pair ({p}, {q}) is degenerate", {"p": p, "q": q, "d": float(d)})
    kind = model.kinds[q]
    if kind == "E":
        alpha = min(2.0 / d, model.C1)
        model.alpha[p] = model.alpha[q] = alpha
    else:
        alpha = min(1.0 / d, model.C2)
        model.alpha[p] = alpha
        model.alpha[q] = -alpha
    model.active[[p, q]] = True
    # The interior point is always a free support vector.
    model.b = 0.0
    model.b = 1.0 - model.decision(model.training.points[p])
    model.support = [p]
    clipped = (kind == "E" and alpha >= model.C1) or (kind == "B" and alpha >= model.C2)
    if clipped:
        model.error.add(q)
    else:
        model.support.append(q)
    model.refresh_margins()


def _finalize_offset(model: SvmModel) -> None:
    """Recompute b as the mean over free support vectors and check it against the tracked b."""
    free = [i for i in model.support if not (model.at_lower(i) or model.at_upper(i))]
    if not free:
        logger.warning("No free support vectors; keeping the tracked offset")
        return
    idx = model.active_indices
    f = model.gram[np.ix_(free, idx)] @ model.coefficients[idx]
    forced = model.y[free] * model.linear[free] - f
    b = float(np.mean(forced))
    if abs(b - model.b) > OFFSET_TOL:
        raise ConvergenceError(
            f"Offset recovered from support vectors ({b}) disagrees with tracked offset ({model.b})",
            {"tracked": model.b, "recovered": b, "spread": float(np.ptp(forced))},
        )
    model.b = b
    model.refresh_margins()


def fit(
    training: TrainingSet,
    kernel: KernelSpec,
    C1: float,
    C2: float,
    indices: Optional[Sequence[int]] = None,
) -> SvmModel:
    """Solve the adapted SVM dual by adding the training points one at a time.

    Args:
    ----
        training (TrainingSet): Labelled points.
        kernel (KernelSpec): Mercer kernel.
        C1 (float): Exterior penalty.
        C2 (float): Boundary penalty.
        indices (Optional[Sequence[int]]): Subset of points to train on; all points by default.

    Returns:
    -------
        SvmModel: Model satisfying every KKT condition.
    """
    model = SvmModel(training, kernel, C1, C2)
    order = insertion_order(training, indices)
    kinds = training.kinds()
    interior = [i for i in order if kinds[i] == "I"]
    others = [i for i in order if kinds[i] != "I"]
    if not interior or not others:
        raise ValueError("Training needs at least one interior and one exterior or boundary point")
    p, q = interior[0], others[0]
    _bootstrap_pair(model, p, q)
    for c in order:
        if c not in (p, q):
            increment_point(model, c)
    _finalize_offset(model)
    report = model.margins()
    logger.info(
        f"Fitted SVM on {len(order)} points: {len(model.support)} support, {len(model.error)} error, "
        f"{len(model.ignored)} ignored; max KKT violation {report.max_violation:.2e}"
    )
    return model


def prune_suppressed(model: SvmModel, field: DistanceField) -> SvmModel:
    """Decrement every exterior point whose grid point was suppressed by ball checking."""
    origin = model.training.origin
    removed = 0
    for i in model.training.exterior:
        if model.active[i] and int(origin[i]) in field.suppressed:
            decrement_point(model, int(i))
            removed += 1
    if removed:
        _finalize_offset(model)
        logger.info(f"Removed {removed} exterior points of suppressed balls")
    return model


def decision(model: SvmModel, x: np.ndarray) -> Union[float, np.ndarray]:
    return model.decision(x)


def classify(model: SvmModel, x: np.ndarray) -> Union[bool, np.ndarray]:
    return model.classify(x)


def margins(model: SvmModel) -> MarginReport:
    return model.margins()


def vector_status(model: SvmModel, i: int) -> VectorStatus:
    return model.vector_status(i)
