"""Reparametrization of Hamiltonian trajectories by one of their coordinates.

Derivatives with respect to the new independent variable y are exact: they are
repeated Lie derivatives D_y = (1/ẏ) d/dt along the symplectic gradient, taken
on multivariate jets of the Hamiltonian.
"""

from collections.abc import Callable, Mapping, Sequence
from operator import itemgetter

import numpy as np

from app.enums import StopReason
from app.exceptions import LabError, MonotonicityLossError
from app.jets.jet import Jet, Num, as_jet, seed_all, value_of
from app.lab_logger import logger
from app.systems.base import HamiltonianSystem
from app.systems.catalog import get_system
from app.systems.enums import SystemId

from .ode import derivative_labels
from .trajectory import Trajectory

type StateFunction = Callable[[Sequence[Num]], Num]

# Below this speed the new independent variable is considered stationary
_STATIONARY_SPEED = 1e-12


def coordinate(index: int) -> StateFunction:
    return itemgetter(index)


def squared(index: int) -> StateFunction:
    def function(state: Sequence[Num]) -> Num:
        return state[index] ** 2

    return function


def _as_function(selector: int | StateFunction) -> StateFunction:
    return coordinate(selector) if isinstance(selector, int) else selector


def _flow(
    system: HamiltonianSystem,
    params: Mapping[str, float],
    state: Sequence[float],
    order: int,
) -> tuple[tuple[str, ...], list[Jet]]:
    """Components of the symplectic gradient as jets of the given order"""
    names = system.state_labels
    energy = system.hamiltonian(params, seed_all(names, state, order + 1))
    gradient = [energy.differentiate(name) for name in names]
    return names, gradient[2:] + [-g for g in gradient[:2]]


def _time_derivative(
    function: Jet, names: tuple[str, ...], flow: list[Jet], order: int
) -> Jet:
    """d/dt of a state function, as a jet of the given order"""
    total = None
    for name, component in zip(names, flow, strict=True):
        term = function.differentiate(name) * component.truncate(order)
        total = term if total is None else total + term
    return total


def time_taylor_derivatives(
    system_id: str | SystemId,
    params: Mapping[str, float] | None,
    state: Sequence[float],
    independent: int | StateFunction,
    dependent: int | StateFunction,
    order: int,
) -> np.ndarray:
    """Derivatives g, dg/dy, ..., d^order g/dy^order of the dependent state
    function with respect to the independent one, at the given state.
    """
    system = get_system(system_id)
    bound = system.bind_params(params)
    state = [float(v) for v in state]
    system.check_domain(bound, state)
    independent, dependent = _as_function(independent), _as_function(dependent)

    if order == 0:
        return np.array([value_of(dependent(state))])

    names, flow = _flow(system, bound, state, order)
    seeds = seed_all(names, state, order)
    speed = _time_derivative(
        as_jet(independent(seeds), seeds[0]), names, flow, order - 1
    )
    if abs(speed.value) <= _STATIONARY_SPEED:
        msg = f"Independent variable is stationary at {state}"
        raise MonotonicityLossError(msg)

    current = as_jet(dependent(seeds), seeds[0])
    values = [current.value]
    for k in range(1, order + 1):
        lowered = order - k
        current = _time_derivative(current, names, flow, lowered) / speed.truncate(
            lowered
        )
        values.append(current.value)
    return np.array(values)


def independent_rate(
    system_id: str | SystemId,
    params: Mapping[str, float] | None,
    state: Sequence[float],
    independent: int | StateFunction,
) -> float:
    """Time derivative of the new independent variable at the given state"""
    system = get_system(system_id)
    bound = system.bind_params(params)
    independent = _as_function(independent)
    names = system.state_labels
    seeds = seed_all(names, [float(v) for v in state], 1)
    value = independent(seeds)
    if not isinstance(value, Jet):
        return 0.0
    gradient = np.array([value.partial(name) for name in names])
    return float(gradient @ system.symplectic_gradient(bound, np.asarray(state)))


def reparametrize(
    trajectory: Trajectory,
    system_id: str | SystemId,
    params: Mapping[str, float] | None,
    independent: int | StateFunction,
    dependent: int | StateFunction,
    order: int = 1,
    samples: int | None = None,
    names: tuple[str, str] = ("y", "u"),
) -> Trajectory:
    """Samples of the dependent quantity and its first `order` y-derivatives
    against the new independent variable y. The result is truncated at the
    last sample before y stops being strictly monotone.
    """
    independent, dependent = _as_function(independent), _as_function(dependent)
    if samples is not None and trajectory.dense is not None and len(trajectory) > 1:
        times = np.linspace(*trajectory.span, samples)
        states = trajectory.evaluate_many(times)
    else:
        times, states = trajectory.times, trajectory.states

    initial_rate = independent_rate(system_id, params, states[0], independent)
    if abs(initial_rate) <= _STATIONARY_SPEED:
        msg = f"Independent variable is stationary at the initial state {states[0]}"
        raise MonotonicityLossError(msg)
    sign = np.sign(initial_rate)

    ys, rows, kept = [], [], []
    stop_reason = trajectory.stop_reason
    for t, state in zip(times, states, strict=True):
        y = value_of(independent(list(state)))
        try:
            rate = independent_rate(system_id, params, state, independent)
            monotone = np.sign(rate) == sign and abs(rate) > _STATIONARY_SPEED
            if ys and sign * (y - ys[-1]) <= 0.0:
                monotone = False
            if not monotone:
                stop_reason = StopReason.MONOTONICITY_LOSS
                break
            row = time_taylor_derivatives(
                system_id, params, state, independent, dependent, order
            )
        except MonotonicityLossError:
            stop_reason = StopReason.MONOTONICITY_LOSS
            break
        except LabError:
            stop_reason = StopReason.DOMAIN_GUARD
            break
        ys.append(y)
        rows.append(row)
        kept.append(t)

    if stop_reason in {StopReason.MONOTONICITY_LOSS, StopReason.DOMAIN_GUARD}:
        logger.warning(
            "Reparametrization of {} truncated after {} samples ({})",
            system_id,
            len(ys),
            stop_reason.value,
        )
    return Trajectory(
        times=np.array(ys),
        states=np.array(rows).reshape(len(rows), order + 1),
        labels=derivative_labels(names[1], names[0], order + 1),
        stop_reason=stop_reason,
        source=np.array(kept),
    )
