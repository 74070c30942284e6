"""Incremental and decremental learning for the adapted SVM.

Each step moves one coefficient alpha_c while the offset and the support-vector
coefficients follow the sensitivities of the bordered KKT system, so every other point
keeps its KKT regime. A step ends at the first book change (support, error, ignored).
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np

from reachkit.core.exceptions import ConvergenceError
from reachkit.svm.base import SvmModel

logger = logging.getLogger(__name__)

KKT_TOL = 1e-10
RATE_TOL = 1e-12
CLIP_TOL = 1e-12
REFRESH_EVERY = 50


@dataclass(frozen=True)
class _Event:
    size: float
    priority: int
    index: int
    kind: str

    def key(self):
        return (self.size, self.priority, self.index)


def _satisfies_kkt(model: SvmModel, c: int) -> Optional[str]:
    """Book the candidate would join at its current alpha, or None if its KKT condition fails."""
    g = model.g[c]
    if model.at_lower(c):
        if g < -KKT_TOL:
            return None
        return "error" if model.kinds[c] == "B" else "ignored"
    if model.at_upper(c):
        return "error" if g <= KKT_TOL else None
    return "support" if abs(g) <= KKT_TOL else None


def _file(model: SvmModel, i: int, book: str) -> None:
    if book == "support":
        model.support.append(i)
    elif book == "error":
        model.error.add(i)
    else:
        model.ignored.add(i)


def _unfile(model: SvmModel, i: int) -> None:
    if i in model.support:
        model.support.remove(i)
    model.error.discard(i)
    model.ignored.discard(i)


def _clip(model: SvmModel, indices: Iterable[int]) -> None:
    for i in indices:
        if abs(model.alpha[i] - model.lower[i]) < CLIP_TOL:
            model.alpha[i] = model.lower[i]
        elif np.isfinite(model.upper[i]) and abs(model.alpha[i] - model.upper[i]) < CLIP_TOL:
            model.alpha[i] = model.upper[i]


def _sensitivities(model: SvmModel, c: int, rows: np.ndarray):
    """Solve [[0, y_S^T], [y_S, Q_SS]] [beta0; beta_S] = -[y_c; Q_Sc] and return (beta0, beta_S, gamma)."""
    S = np.asarray(model.support, dtype=np.int64)
    y_S = model.y[S]
    bordered = np.zeros((S.size + 1, S.size + 1))
    bordered[0, 1:] = y_S
    bordered[1:, 0] = y_S
    bordered[1:, 1:] = model.Q(S, S)
    rhs = -np.concatenate(([model.y[c]], model.Q(S, [c])[:, 0]))
    try:
        solution = np.linalg.solve(bordered, rhs)
    except np.linalg.LinAlgError as err:
        raise ConvergenceError(
            f"Singular bordered system while moving point {c}",
            {"candidate": c, "support": [int(s) for s in S]},
        ) from err
    beta0, beta = float(solution[0]), solution[1:]
    gamma = model.Q(rows, [c])[:, 0] + model.Q(rows, S) @ beta + model.y[rows] * beta0
    return beta0, beta, gamma


def _joiner_events(model: SvmModel, others: np.ndarray, rates: np.ndarray) -> List[_Event]:
    """Error/ignored points whose margin reaches zero; rates are dg_j per unit step."""
    events = []
    for j, rate in zip(others, rates):
        j = int(j)
        if j in model.support:
            continue
        if model.at_upper(j):
            if rate > RATE_TOL:
                events.append(_Event(max(-model.g[j] / rate, 0.0), 1, j, "join"))
        elif rate < -RATE_TOL:
            events.append(_Event(max(-model.g[j] / rate, 0.0), 1, j, "join"))
    return events


def _step(model: SvmModel, c: int, direction: float, decrementing: bool) -> _Event:
    """Advance alpha_c (or the offset alone when no support vectors exist) to the next event."""
    rows = model.active_indices
    others = rows[rows != c]
    events: List[_Event] = []
    g_c = model.g[c]

    if not model.support:
        # Only the offset can move: dg_i = y_i * sigma per unit step.
        sigma = model.y[c] * direction
        if not decrementing:
            events.append(_Event(abs(g_c), 0, c, "margin"))
        events += _joiner_events(model, others, model.y[others] * sigma)
        if not events:
            raise ConvergenceError(
                f"Offset step for point {c} is unbounded",
                {"candidate": c, "mode": "decrement" if decrementing else "increment", "b": model.b},
            )
        event = min(events, key=_Event.key)
        model.b += sigma * event.size
        model.g[rows] += model.y[rows] * sigma * event.size
        return event

    beta0, beta, gamma = _sensitivities(model, c, rows)
    position = {int(i): k for k, i in enumerate(rows)}
    if decrementing:
        events.append(_Event(abs(model.alpha[c]), 0, c, "zero"))
    else:
        gamma_c = gamma[position[c]]
        if gamma_c > RATE_TOL:
            events.append(_Event(abs(g_c) / gamma_c, 0, c, "margin"))
        bound = model.upper[c] if direction > 0 else model.lower[c]
        if np.isfinite(bound):
            events.append(_Event(abs(bound - model.alpha[c]), 0, c, "bound"))
    for j, rate in zip(model.support, beta * direction):
        if rate > RATE_TOL and np.isfinite(model.upper[j]):
            events.append(_Event(max((model.upper[j] - model.alpha[j]) / rate, 0.0), 1, j, "leave"))
        elif rate < -RATE_TOL:
            events.append(_Event(max((model.lower[j] - model.alpha[j]) / rate, 0.0), 1, j, "leave"))
    other_rates = np.array([gamma[position[int(j)]] for j in others]) * direction
    events += _joiner_events(model, others, other_rates)
    event = min(events, key=_Event.key) if events else None
    if event is None or not np.isfinite(event.size):
        raise ConvergenceError(
            f"Unbounded step for point {c}",
            {"candidate": c, "support": list(model.support), "beta0": beta0, "beta": beta.tolist()},
        )

    delta = direction * event.size
    S = list(model.support)
    model.alpha[c] += delta
    model.alpha[S] += beta * delta
    model.b += beta0 * delta
    model.g[rows] += gamma * delta
    _clip(model, S + [c])
    return event


def _migrate(model: SvmModel, event: _Event) -> None:
    j = event.index
    if event.kind == "leave":
        model.support.remove(j)
        if abs(model.alpha[j] - model.lower[j]) <= abs(model.alpha[j] - model.upper[j]):
            model.alpha[j] = model.lower[j]
        else:
            model.alpha[j] = model.upper[j]
        _file(model, j, "error" if model.at_upper(j) or model.kinds[j] == "B" else "ignored")
    elif event.kind == "join":
        _unfile(model, j)
        model.g[j] = 0.0
        model.support.append(j)


def _drive(model: SvmModel, c: int, decrementing: bool) -> None:
    mode = "decrement" if decrementing else "increment"
    limit = 10 * model.training.m
    migrations = 0
    while True:
        if decrementing:
            if model.alpha[c] == 0.0:
                break
            direction = -float(np.sign(model.alpha[c]))
        else:
            book = _satisfies_kkt(model, c)
            if book is not None:
                _file(model, c, book)
                break
            direction = -float(np.sign(model.g[c]))

        event = _step(model, c, direction, decrementing)
        if event.index == c:
            if event.kind == "margin":
                model.g[c] = 0.0
                _file(model, c, model.vector_status(c).value)
            elif event.kind == "bound":
                model.alpha[c] = model.upper[c] if direction > 0 else model.lower[c]
                _file(model, c, "error")
            else:
                model.alpha[c] = 0.0
            break

        _migrate(model, event)
        migrations += 1
        logger.debug(f"{mode} of point {c}: point {event.index} {event.kind}, step {event.size:.3e}")
        if migrations > limit:
            raise ConvergenceError(
                f"No termination after {migrations} migrations while moving point {c}",
                {
                    "candidate": c,
                    "mode": mode,
                    "alpha_c": float(model.alpha[c]),
                    "g_c": float(model.g[c]),
                    "support": list(model.support),
                    "last_event": event.__dict__,
                },
            )
        if migrations % REFRESH_EVERY == 0:
            model.refresh_margins()


def increment_point(model: SvmModel, c: int) -> SvmModel:
    """Add training point c (alpha_c = 0) to the model, keeping every KKT condition."""
    if model.active[c]:
        raise ValueError(f"Point {c} is already part of the model")
    model.alpha[c] = 0.0
    model.active[c] = True
    model.g[c] = model.margin_values([c])[0]
    _drive(model, c, decrementing=False)
    model.refresh_margins()
    return model


def decrement_point(model: SvmModel, c: int) -> SvmModel:
    """Drive alpha_c to zero by the reversed procedure, then remove point c from the model."""
    if not 0 <= c < model.training.m:
        raise IndexError(f"Point index {c} out of range for {model.training.m} training points")
    if not model.active[c]:
        raise ValueError(f"Point {c} is not part of the model")
    _unfile(model, c)
    _drive(model, c, decrementing=True)
    model.alpha[c] = 0.0
    model.active[c] = False
    model.refresh_margins()
    return model


def increment_batch(model: SvmModel, indices: Iterable[int]) -> SvmModel:
    """Add several points one at a time, in the given order."""
    added = 0
    for c in indices:
        increment_point(model, int(c))
        added += 1
    logger.info(f"Added {added} points; model has {int(model.active.sum())} active points")
    return model
