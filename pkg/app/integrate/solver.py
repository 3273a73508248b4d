"""Adaptive Dormand-Prince 5(4) integrator with PI step size control and
dense output. Integration may run backward when the span is decreasing.
"""

from collections.abc import Callable, Sequence

import numpy as np

from app.config import settings
from app.enums import StopReason
from app.exceptions import (
    ConfigError,
    DomainGuardError,
    LabError,
    StepSizeUnderflowError,
)
from app.lab_logger import logger

from . import tableau
from .trajectory import Trajectory

type VectorField = Callable[[float, np.ndarray], np.ndarray]
type GuardFunction = Callable[[float, np.ndarray], float]

# Raised by right-hand sides evaluated on or beyond a singular locus
_GUARD_ERRORS = (LabError, ArithmeticError, ValueError)


def check_tolerance(tol: float | None) -> float:
    tol = settings.default_tol if tol is None else float(tol)
    if not settings.min_tol <= tol <= settings.max_tol:
        msg = (
            f"Tolerance {tol!r} outside of the admissible range "
            f"[{settings.min_tol}, {settings.max_tol}]"
        )
        raise ConfigError(msg)
    return tol


def _rms(values: np.ndarray) -> float:
    return float(np.sqrt(np.mean(values**2)))


def _margin(guard: GuardFunction | None, t: float, y: np.ndarray) -> float:
    return np.inf if guard is None else guard(t, y)


def _initial_step(
    rhs: VectorField,
    t0: float,
    y0: np.ndarray,
    f0: np.ndarray,
    direction: float,
    length: float,
    tol: float,
) -> float:
    scale = tol * (1.0 + np.abs(y0))
    d0, d1 = _rms(y0 / scale), _rms(f0 / scale)
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    h0 = min(h0, length)
    try:
        f1 = rhs(t0 + direction * h0, y0 + direction * h0 * f0)
    except _GUARD_ERRORS:
        return h0
    d2 = _rms((f1 - f0) / scale) / h0
    if max(d1, d2) <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** (1.0 / tableau.ORDER)
    return min(100.0 * h0, h1, length)


def _attempt_step(
    rhs: VectorField, t: float, y: np.ndarray, f0: np.ndarray, step: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """One Dormand-Prince step of signed size `step`, returns the new state,
    the stage derivatives and the local error estimate.
    """
    stages = np.empty((7, len(y)))
    stages[0] = f0
    y_new = y
    for s, couplings in enumerate(tableau.COUPLINGS, start=1):
        y_new = y + step * (couplings @ stages[:s])
        stages[s] = rhs(t + tableau.NODES[s] * step, y_new)
    return y_new, stages, step * (tableau.ERROR_WEIGHTS @ stages)


def _dense_coefficients(
    y: np.ndarray, y_new: np.ndarray, stages: np.ndarray, step: float
) -> np.ndarray:
    difference = y_new - y
    rc3 = step * stages[0] - difference
    rc4 = difference - step * stages[6] - rc3
    rc5 = step * (tableau.DENSE_WEIGHTS @ stages)
    return np.array([y, difference, rc3, rc4, rc5])


def integrate(
    rhs: VectorField,
    init: Sequence[float],
    span: tuple[float, float],
    tol: float | None = None,
    guard: GuardFunction | None = None,
    labels: tuple[str, ...] | None = None,
) -> Trajectory:
    """Integrate y' = rhs(t, y) over span. The trajectory stops early, with a
    recorded stop reason, when the guard margin collapses or the step budget is
    exhausted.
    """
    tol = check_tolerance(tol)
    t0, t1 = float(span[0]), float(span[1])
    if t0 == t1:
        msg = f"Empty integration span {span}"
        raise ConfigError(msg)
    direction = 1.0 if t1 > t0 else -1.0
    length = abs(t1 - t0)

    y = np.array(init, dtype=float)
    labels = labels or tuple(f"y{i}" for i in range(len(y)))
    margin = _margin(guard, t0, y)
    if not margin > settings.guard_margin:
        msg = f"Initial state {y.tolist()} on a singular locus (margin {margin:.3e})"
        raise DomainGuardError(msg)

    f = np.asarray(rhs(t0, y), dtype=float)
    h = _initial_step(rhs, t0, y, f, direction, length, tol)

    t = t0
    times, states, dense = [t0], [y], []
    accepted = rejected = 0
    previous_error = 1e-4
    last_rejected = guard_hit = False
    stop_reason = StopReason.SPAN_END

    while direction * (t1 - t) > 0.0:
        if accepted + rejected >= settings.max_steps:
            stop_reason = StopReason.MAX_STEPS
            break
        h = min(h, abs(t1 - t))
        if h < settings.min_step * max(1.0, abs(t)):
            if guard_hit:
                stop_reason = StopReason.DOMAIN_GUARD
                break
            raise StepSizeUnderflowError(t, h)

        step = direction * h
        try:
            y_new, stages, local_error = _attempt_step(rhs, t, y, f, step)
            blocked = not _margin(guard, t + step, y_new) > settings.guard_margin
        except _GUARD_ERRORS:
            blocked = True
        if blocked:
            guard_hit = last_rejected = True
            rejected += 1
            h *= 0.5
            continue

        scale = tol * (1.0 + np.maximum(np.abs(y), np.abs(y_new)))
        error = _rms(local_error / scale)
        if not error <= 1.0:
            rejected += 1
            last_rejected = True
            h *= max(tableau.MIN_FACTOR, tableau.SAFETY * error**-tableau.CONTROL_ALPHA)
            continue

        dense.append(_dense_coefficients(y, y_new, stages, step))
        last_step = h >= abs(t1 - t)
        t = t1 if last_step else t + step
        y, f = y_new, stages[6]
        times.append(t)
        states.append(y)
        accepted += 1

        factor = (
            tableau.SAFETY
            * max(error, 1e-10) ** -tableau.CONTROL_ALPHA
            * previous_error**tableau.CONTROL_BETA
        )
        factor = min(tableau.MAX_FACTOR, max(tableau.MIN_FACTOR, factor))
        if last_rejected:
            factor = min(factor, 1.0)
        h *= factor
        previous_error = max(error, 1e-4)
        last_rejected = guard_hit = False

    if stop_reason != StopReason.SPAN_END:
        logger.warning(
            "Trajectory stopped at {} before {} ({})", t, t1, stop_reason.value
        )
    logger.debug(
        "Integrated span [{}, {}] with {} accepted and {} rejected steps",
        t0,
        t,
        accepted,
        rejected,
    )
    return Trajectory(
        times=np.array(times),
        states=np.array(states),
        labels=labels,
        stop_reason=stop_reason,
        dense=np.array(dense) if dense else np.empty((0, 5, len(y))),
        steps={"accepted": accepted, "rejected": rejected},
    )
