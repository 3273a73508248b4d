"""Metrics checking the catalog against the Hamiltonian flow: transcription
of the displayed equations, jet derivatives, conservation, and the reduced
forms, closures and rates compared with the reparametrized trajectory.
"""

from collections.abc import Sequence

import numpy as np

from app.config import settings
from app.enums import FormVariant, Verdict
from app.exceptions import (
    JetDomainError,
    MonotonicityLossError,
    NoCyclicMomentumError,
    RadicandError,
    SingularLocusError,
)
from app.integrate.ode import integrate_ode
from app.integrate.reparametrize import reparametrize, time_taylor_derivatives
from app.jets.checks import fd_check as jet_fd_check
from app.jets.jet import value_of
from app.lab_logger import logger
from app.reduce.catalog import bind_form, branch_sign, closure_by_name, initial_point
from app.reduce.models import ClosureFormula, ReducedForm, ReducedRate
from app.reduce.raising import raise_order
from app.systems.catalog import cyclic_momentum, sample_state, transcription_diagnostics

from .context import CaseContext
from .models import MetricResult
from .verdicts import Item, assess, combine, not_applicable

# Seed streams of the randomized metrics
_RHS_STREAM = 1
_FD_STREAM = 2
_RAISED_STREAM = 3

# Relative size of the perturbations of the initial jet point
_JET_PERTURBATION = 0.05

_SKIPPED_SAMPLE_ERRORS = (
    RadicandError,
    JetDomainError,
    SingularLocusError,
    MonotonicityLossError,
)


def _fallback_targets(entries: Sequence) -> set[str]:
    return {entry.fallback for entry in entries if entry.fallback}


def _flow_subsample(ctx: CaseContext, count: int) -> np.ndarray:
    states = ctx.flow.states
    indices = np.unique(np.linspace(0, len(states) - 1, count).astype(int))
    return states[indices]


def rhs_transcription(ctx: CaseContext) -> MetricResult:
    name, threshold = "rhs_transcription", ctx.thresholds.rhs_transcription
    rng = ctx.rng(_RHS_STREAM)
    states = [
        sample_state(ctx.system_id, ctx.params, rng)
        for _ in range(settings.rhs_sample_count)
    ]
    worst = transcription_diagnostics(ctx.system_id, ctx.params, states)
    if worst is None:
        return not_applicable(name, "Only the Hamiltonian is given in closed form")

    value = float(np.max(worst))
    if value <= threshold:
        return MetricResult(
            name=name, value=value, threshold=threshold, verdict=Verdict.PASS
        )
    mismatches = [
        f"Displayed d{label}/dt differs from the symplectic gradient by {v:.3e}"
        for label, v in zip(ctx.system.state_labels, worst, strict=True)
        if v > threshold
    ]
    logger.warning(
        "Displayed Hamilton equations of {} disagree with the Hamiltonian : {}",
        ctx.system_id,
        mismatches,
    )
    # The flow is always integrated from the symplectic gradient
    return MetricResult(
        name=name,
        value=value,
        threshold=threshold,
        verdict=Verdict.DIAGNOSTIC,
        diagnostics=mismatches,
    )


def _hamiltonian_fd(ctx: CaseContext) -> float:
    rng = ctx.rng(_FD_STREAM)
    system = ctx.system
    return max(
        jet_fd_check(
            lambda state: system.hamiltonian(ctx.params, state),
            sample_state(ctx.system_id, ctx.params, rng),
        )
        for _ in range(settings.fd_sample_count)
    )


def _form_fd(ctx: CaseContext, form: ReducedForm) -> float:
    ode = bind_form(form, ctx.params, ctx.constants)
    y0, derivatives = initial_point(ctx.system_id, form.name, ctx.params, ctx.state)
    return jet_fd_check(
        lambda point: ode.evaluate(point[0], point[1:]),
        [y0, *(float(d) for d in derivatives)],
    )


def fd_check(ctx: CaseContext) -> MetricResult:
    threshold = ctx.thresholds.fd_check
    items = [assess("Hamiltonian", lambda: _hamiltonian_fd(ctx), threshold)]
    items.extend(
        assess(form.name, lambda form=form: _form_fd(ctx, form), threshold)
        for form in ctx.case.forms()
    )
    return combine("fd_check", items, threshold)


def _truncation_notes(ctx: CaseContext) -> list[str]:
    flow = ctx.flow
    if not flow.truncated:
        return []
    return [
        f"Flow stopped at t={flow.span[1]:.6g} ({flow.stop_reason.value}) "
        f"before the end of the window {ctx.span}"
    ]


def energy_drift(ctx: CaseContext) -> MetricResult:
    threshold = ctx.thresholds.energy_drift

    def drift() -> float:
        energies = np.array(
            [ctx.system.energy(ctx.params, state) for state in ctx.flow.states]
        )
        initial = energies[0]
        return float(np.max(np.abs(energies - initial)) / max(1.0, abs(initial)))

    return combine(
        "energy_drift",
        [assess("H along the flow", drift, threshold)],
        threshold,
        notes=_truncation_notes(ctx),
    )


def cyclic_drift(ctx: CaseContext) -> MetricResult:
    name, threshold = "cyclic_drift", ctx.thresholds.cyclic_drift
    try:
        initial = cyclic_momentum(ctx.system_id, ctx.state)
    except NoCyclicMomentumError as error:
        return not_applicable(name, str(error))

    def drift() -> float:
        return max(
            abs(cyclic_momentum(ctx.system_id, state) - initial)
            for state in ctx.flow.states
        )

    return combine(
        name,
        [assess("Cyclic momentum along the flow", drift, threshold)],
        threshold,
    )


def reduced_deviation(ctx: CaseContext, form: ReducedForm) -> float:
    """Sup-norm distance between the reparametrized flow and the solution of
    the reduced form over their common window, relative to 1 + max |u|
    """
    swept = reparametrize(
        ctx.flow,
        ctx.system_id,
        ctx.params,
        form.independent,
        form.dependent,
        order=0,
        samples=settings.residual_sample_count,
        names=(form.ode.variable, form.ode.unknown),
    )
    if len(swept) < 2:
        msg = f"Flow does not sweep the independent variable of {form.name}"
        raise MonotonicityLossError(msg)
    ys, us = swept.times, swept.states[:, 0]
    start, end = float(ys[0]), float(ys[-1])
    cutoff = start + (1.0 - settings.window_margin) * (end - start)

    y0, initial = initial_point(ctx.system_id, form.name, ctx.params, ctx.state)
    ode = bind_form(form, ctx.params, ctx.constants)
    solution = integrate_ode(ode, list(initial), (y0, cutoff), ctx.tol)
    ctx.stop_reasons[f"reduced {form.name}"] = solution.stop_reason
    if solution.truncated:
        ctx.early_stops[form.name] = (
            f"Reduced {form.name} stopped at {form.ode.variable}="
            f"{solution.span[1]:.6g} ({solution.stop_reason.value}) before "
            f"{cutoff:.6g}, compared with the flow up to there"
        )

    common = np.array([solution.contains(float(y)) for y in ys])
    if common.sum() < 2:
        msg = f"No common window between the flow and {form.name}"
        raise SingularLocusError(msg)
    reduced = solution.evaluate_many(ys[common])[:, 0]
    expected = us[common]
    return float(
        np.max(np.abs(reduced - expected)) / (1.0 + np.max(np.abs(expected)))
    )


def reduced_vs_full(ctx: CaseContext) -> MetricResult:
    threshold = ctx.thresholds.reduced_vs_full
    case = ctx.case
    forms = case.forms()
    targets = _fallback_targets(forms)
    items = []
    for form in forms:
        if not form.compare_full or form.name in targets:
            continue
        fallback = None
        if form.fallback:
            derived = case.form(form.fallback)
            fallback = (
                derived.name,
                lambda derived=derived: reduced_deviation(ctx, derived),
            )
        items.append(
            assess(
                form.name,
                lambda form=form: reduced_deviation(ctx, form),
                threshold,
                fallback,
            )
        )
    notes = [*_truncation_notes(ctx), *ctx.early_stops.values()]
    return combine("reduced_vs_full", items, threshold, notes=notes)


def _closure_deviation(ctx: CaseContext, closure: ClosureFormula) -> float:
    deviations = []
    for state in _flow_subsample(ctx, settings.closure_point_count):
        actual = value_of(closure.actual(list(state)))
        sign = branch_sign(closure, state)
        try:
            value = closure.evaluate(list(state), ctx.bound, sign)
        except RadicandError as error:
            logger.debug("Skipping {} at {} : {}", closure.name, state, error)
            continue
        deviations.append(abs(value - actual) / (1.0 + abs(actual)))
    if not deviations:
        msg = f"Every sampled state is rejected by the radicand of {closure.name}"
        raise SingularLocusError(msg)
    return max(deviations)


def _rate_deviation(ctx: CaseContext, rate: ReducedRate) -> float:
    deviations = []
    for state in _flow_subsample(ctx, settings.closure_point_count):
        try:
            expected = time_taylor_derivatives(
                ctx.system_id,
                ctx.params,
                state,
                rate.independent,
                rate.dependent,
                1,
            )[1]
            value = value_of(rate.rate(list(state), ctx.bound))
        except _SKIPPED_SAMPLE_ERRORS as error:
            logger.debug("Skipping {} at {} : {}", rate.name, state, error)
            continue
        deviations.append(abs(value - expected) / (1.0 + abs(expected)))
    if not deviations:
        msg = f"No admissible state along the flow for {rate.name}"
        raise SingularLocusError(msg)
    return max(deviations)


def closure_consistency(ctx: CaseContext) -> MetricResult:
    threshold = ctx.thresholds.closure_consistency
    case = ctx.case
    items: list[Item] = []

    closures = case.closures()
    targets = _fallback_targets(closures)
    for closure in closures:
        if closure.name in targets:
            continue
        fallback = None
        if closure.fallback:
            derived = closure_by_name(case, closure.fallback)
            fallback = (
                derived.name,
                lambda derived=derived: _closure_deviation(ctx, derived),
            )
        items.append(
            assess(
                closure.name,
                lambda closure=closure: _closure_deviation(ctx, closure),
                threshold,
                fallback,
            )
        )

    rates = {rate.name: rate for rate in case.rates()}
    targets = _fallback_targets(rates.values())
    for rate in rates.values():
        if rate.name in targets:
            continue
        fallback = None
        if rate.fallback:
            derived = rates[rate.fallback]
            fallback = (
                derived.name,
                lambda derived=derived: _rate_deviation(ctx, derived),
            )
        items.append(
            assess(
                rate.name,
                lambda rate=rate: _rate_deviation(ctx, rate),
                threshold,
                fallback,
            )
        )
    return combine("closure_consistency", items, threshold)


def raised_deviation(ctx: CaseContext, form: ReducedForm, source: ReducedForm) -> float:
    """Largest relative difference between `form` and the equation raised from
    the derivation of `source`, at perturbations of the initial jet point of
    `form`
    """
    raised = raise_order(source.derivation, source.eliminate).with_params(**ctx.bound)
    ode = bind_form(form, ctx.params, ctx.constants)
    y0, initial = initial_point(ctx.system_id, form.name, ctx.params, ctx.state)
    rng = ctx.rng(_RAISED_STREAM)
    deviations = []
    for _ in range(10 * settings.closure_point_count):
        if len(deviations) == settings.closure_point_count:
            break
        factors = 1.0 + _JET_PERTURBATION * rng.uniform(-1.0, 1.0, len(initial))
        point = [float(d) for d in initial * factors]
        try:
            expected = value_of(raised.evaluate(y0, point))
            value = value_of(ode.evaluate(y0, point))
        except _SKIPPED_SAMPLE_ERRORS as error:
            logger.debug("Skipping {} at {} : {}", form.name, point, error)
            continue
        deviations.append(abs(value - expected) / (1.0 + abs(expected)))
    if not deviations:
        msg = f"No admissible jet point around the initial state for {form.name}"
        raise SingularLocusError(msg)
    return max(deviations)


def raised_consistency(ctx: CaseContext) -> MetricResult:
    threshold = ctx.thresholds.raised_consistency
    case = ctx.case
    items = []
    for form in case.forms():
        if form.variant != FormVariant.DISPLAYED or form.derivation is None:
            continue
        if not form.eliminate:
            continue
        fallback = None
        if form.fallback:
            derived = case.form(form.fallback)
            fallback = (
                derived.name,
                lambda derived=derived, form=form: raised_deviation(ctx, derived, form),
            )
        items.append(
            assess(
                f"{form.name} raised from {form.derivation.name}",
                lambda form=form: raised_deviation(ctx, form, form),
                threshold,
                fallback,
            )
        )
    return combine("raised_consistency", items, threshold)
