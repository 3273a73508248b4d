"""Residuals of transformed samples against linear targets, and fits of the
solution structure the targets predict.
"""

from collections.abc import Mapping, Sequence

import numpy as np

from app.integrate.ode import OdeSpec
from app.integrate.trajectory import Trajectory
from app.jets.jet import as_jet, seed_all


def residual_series(
    target: OdeSpec, params: Mapping[str, float], samples: Trajectory
) -> np.ndarray:
    """|U^(n) - F(Y, U, ..., U^(n-1))| at every sample, relative to
    1 + max |U^(k)|
    """
    bound = target.with_params(**params)
    order = target.order
    residuals = []
    for y, row in zip(samples.times, samples.states, strict=True):
        expected = float(bound.evaluate(float(y), list(row[:order])))
        scale = 1.0 + float(np.max(np.abs(row)))
        residuals.append(abs(row[order] - expected) / scale)
    return np.array(residuals)


def linear_residual(
    target: OdeSpec, params: Mapping[str, float], samples: Trajectory
) -> float:
    """Largest relative residual of the samples against the target"""
    return float(np.max(residual_series(target, params, samples), initial=0.0))


def affinity_check(
    target: OdeSpec, params: Mapping[str, float], y: float, derivatives: Sequence[float]
) -> float:
    """Norm of the second derivatives of the right-hand side with respect to
    (U, ..., U^(n-1)), zero for an affine equation
    """
    bound = target.with_params(**params)
    names = tuple(f"d{k}" for k in range(target.order))
    seeds = seed_all(names, [float(d) for d in derivatives[: target.order]], 2)
    value = as_jet(bound.evaluate(y, seeds), seeds[0])
    hessian = np.array([[value.partial(a, b) for b in names] for a in names])
    return float(np.linalg.norm(hessian))


def _fit_deviation(design: np.ndarray, values: np.ndarray) -> float:
    coefficients, *_ = np.linalg.lstsq(design, values, rcond=None)
    deviation = np.max(np.abs(design @ coefficients - values))
    return float(deviation / (1.0 + np.max(np.abs(values))))


def line_fit_deviation(samples: Trajectory) -> float:
    """Departure of U from the best line a Y + b"""
    ys = samples.times
    design = np.column_stack([ys, np.ones_like(ys)])
    return _fit_deviation(design, samples.states[:, 0])


def trig_fit_deviation(samples: Trajectory) -> float:
    """Departure of U from the best a + b sin Y + c cos Y"""
    ys = samples.times
    design = np.column_stack([np.ones_like(ys), np.sin(ys), np.cos(ys)])
    return _fit_deviation(design, samples.states[:, 0])


def harmonic_amplitude_spread(samples: Trajectory) -> float:
    """Relative spread of U² + U'², constant along U'' = -U"""
    amplitude = samples.states[:, 0] ** 2 + samples.states[:, 1] ** 2
    return float(np.ptp(amplitude) / np.mean(amplitude))
