"""Jet samples of reduced solutions and their images under a chain.

Samples are Trajectory objects whose times hold the independent variable and
whose states hold (u, u', ..., u^(m)) for the highest order m a chain reads.
"""

from collections.abc import Mapping, Sequence

import numpy as np

from app.config import settings
from app.enums import ChainSource
from app.integrate.hamiltonian import hamiltonian_trajectory
from app.integrate.ode import derivative_labels, integrate_ode
from app.integrate.reparametrize import StateFunction, reparametrize
from app.integrate.trajectory import Trajectory
from app.reduce.catalog import get_case, initial_point
from app.reduce.raising import extend_jet_point
from app.systems.enums import SystemId

from .models import LinearizationChain
from .transforms import push_chain, pushforward_stages


def reduced_window(
    system_id: str | SystemId,
    params: Mapping[str, float],
    state: Sequence[float],
    independent: StateFunction,
    tol: float | None = None,
    span: tuple[float, float] | None = None,
) -> tuple[float, float]:
    """Range of the independent variable swept by the flow over the time
    window of the case, or `span`, its far end pulled back by the window
    margin.
    """
    span = span or get_case(system_id).time_span
    trajectory = hamiltonian_trajectory(system_id, params, state, span, tol)
    swept = reparametrize(
        trajectory, system_id, params, independent, independent, order=0
    )
    start, end = swept.span
    return start, start + (1.0 - settings.window_margin) * (end - start)


def flow_samples(
    system_id: str | SystemId,
    chain: LinearizationChain,
    params: Mapping[str, float],
    state: Sequence[float],
    count: int,
    tol: float | None = None,
    span: tuple[float, float] | None = None,
) -> Trajectory:
    """Exact y-derivatives along the Hamiltonian flow"""
    case = get_case(system_id)
    form = case.form(chain.form)
    span = span or case.time_span
    trajectory = hamiltonian_trajectory(system_id, params, state, span, tol)
    return reparametrize(
        trajectory,
        system_id,
        params,
        form.independent,
        form.dependent,
        order=chain.source_order,
        samples=count,
        names=(form.ode.variable, form.ode.unknown),
    )


def reduced_samples(
    system_id: str | SystemId,
    chain: LinearizationChain,
    params: Mapping[str, float],
    state: Sequence[float],
    count: int,
    tol: float | None = None,
    span: tuple[float, float] | None = None,
) -> Trajectory:
    """Solution of the reduced form through the initial state, its missing
    derivatives obtained by differentiating the form along the solution.
    """
    case = get_case(system_id)
    form = case.form(chain.form)
    ode = form.ode.with_params(**case.bound_constants(params, state))
    y0, initial = initial_point(system_id, chain.form, params, state)
    _, end = reduced_window(system_id, params, state, form.independent, tol, span)
    solution = integrate_ode(ode, initial, (y0, end), tol)

    ys = np.linspace(*solution.span, count)
    extra = chain.source_order + 1 - ode.order
    rows = [
        extend_jet_point(ode, float(y), row, max(extra, 0))[: chain.source_order + 1]
        for y, row in zip(ys, solution.evaluate_many(ys), strict=True)
    ]
    return Trajectory(
        times=ys,
        states=np.array(rows),
        labels=derivative_labels(ode.unknown, ode.variable, chain.source_order + 1),
        stop_reason=solution.stop_reason,
    )


def chain_samples(
    system_id: str | SystemId,
    chain: LinearizationChain,
    params: Mapping[str, float],
    state: Sequence[float],
    count: int,
    tol: float | None = None,
    span: tuple[float, float] | None = None,
) -> Trajectory:
    sampler = flow_samples if chain.source == ChainSource.FLOW else reduced_samples
    return sampler(system_id, chain, params, state, count, tol, span)


def transformed_samples(
    chain: LinearizationChain, params: Mapping[str, float], samples: Trajectory
) -> Trajectory:
    """(Y, U, dU/dY, ..., U^(n)) at the image of every sample"""
    images = [
        push_chain(chain, params, float(y), row)
        for y, row in zip(samples.times, samples.states, strict=True)
    ]
    target = chain.target
    return Trajectory(
        times=np.array([y for y, _ in images]),
        states=np.array([row for _, row in images]),
        labels=derivative_labels(target.unknown, target.variable, target.order + 1),
        stop_reason=samples.stop_reason,
    )


def stage_samples(
    chain: LinearizationChain, params: Mapping[str, float], samples: Trajectory
) -> list[Trajectory]:
    """Samples in the chart reached after each stage of the chain"""
    charts = [
        pushforward_stages(chain.stages, params, float(y), row)
        for y, row in zip(samples.times, samples.states, strict=True)
    ]
    stages = []
    for index, stage in enumerate(chain.stages):
        xs = np.array([chart[index][0] for chart in charts])
        rows = np.array([chart[index][1] for chart in charts])
        stages.append(
            Trajectory(
                times=xs,
                states=rows,
                labels=derivative_labels(stage.name, f"x{index + 1}", rows.shape[1]),
                stop_reason=samples.stop_reason,
            )
        )
    return stages
