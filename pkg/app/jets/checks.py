"""Cross-checks of jet derivatives against finite differences"""

from collections.abc import Callable, Sequence

import numpy as np

from app.config import settings
from app.exceptions import ConfigError, LabError, SingularLocusError

from .jet import Jet, seed_all, value_of

type ScalarFunction = Callable[[Sequence[Jet | float]], Jet | float]


def jet_gradient(function: ScalarFunction, point: Sequence[float]) -> np.ndarray:
    names = tuple(f"x{i}" for i in range(len(point)))
    result = function(seed_all(names, point, 1))
    if not isinstance(result, Jet):
        return np.zeros(len(point))
    return np.array([result.partial(name) for name in names])


def central_difference_gradient(
    function: ScalarFunction, point: Sequence[float], step: float
) -> np.ndarray:
    gradient = np.zeros(len(point))
    for i in range(len(point)):
        forward = list(point)
        backward = list(point)
        forward[i] += step
        backward[i] -= step
        try:
            upper = value_of(function(forward))
            lower = value_of(function(backward))
        except (LabError, ArithmeticError, ValueError) as error:
            msg = f"Finite difference stencil left the domain around {list(point)}"
            raise SingularLocusError(msg) from error
        gradient[i] = (upper - lower) / (2.0 * step)
    return gradient


def fd_check(
    function: ScalarFunction,
    point: Sequence[float],
    step: float | None = None,
) -> float:
    """Largest relative discrepancy between the jet gradient and a central
    difference gradient, |jet - fd| / (1 + |jet|) over all components.
    """
    step = settings.fd_step if step is None else step
    if not step > 0.0:
        msg = f"Finite difference step must be positive, got {step}"
        raise ConfigError(msg)
    exact = jet_gradient(function, point)
    approximate = central_difference_gradient(function, point, step)
    return float(np.max(np.abs(exact - approximate) / (1.0 + np.abs(exact))))
