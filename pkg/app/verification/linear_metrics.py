"""Metrics of the linearizations: residuals of the transformed solutions,
negative controls off the linearizability conditions, closed forms and the
structure of the linear solutions.
"""

from collections.abc import Callable
from dataclasses import replace

from app.config import settings
from app.enums import Verdict
from app.exceptions import ConditionViolatedError
from app.integrate.trajectory import Trajectory
from app.linearize.catalog import chain_params, list_chains, transform_chain
from app.linearize.closed_forms import closed_form_residual, list_closed_forms
from app.linearize.models import LinearizationChain
from app.linearize.residuals import (
    harmonic_amplitude_spread,
    line_fit_deviation,
    linear_residual,
    trig_fit_deviation,
)
from app.linearize.samples import chain_samples, transformed_samples
from app.reduce.catalog import case_inputs
from app.reduce.presets import check_preset
from app.symmetry.checks import (
    abelian_residual,
    canonical_deviation,
    family_equation,
    sample_jet_points,
)
from app.symmetry.generators import generators
from app.symmetry.models import SymmetryFamily
from app.systems.enums import SystemId

from .context import CaseContext
from .models import MetricResult
from .verdicts import Item, assess, combine

_CLOSED_FORM_STREAM = 10
_CANONICAL_STREAM = 20

type StructureFit = Callable[[Trajectory], float]

# Structure predicted by the linear target of a chain: (chain, label, fit)
STRUCTURE_FITS: dict[SystemId, tuple[tuple[str, str, StructureFit], ...]] = {
    SystemId.PERLICK_I: (
        ("free_particle", "line fit", line_fit_deviation),
        ("harmonic", "amplitude invariant", harmonic_amplitude_spread),
    ),
    SystemId.TAUB_NUT: (("harmonic", "unit frequency fit", trig_fit_deviation),),
}


def primary_chains(system_id: SystemId) -> list[LinearizationChain]:
    """Chains of the case, without the derived ones standing in for others"""
    chains = list_chains(system_id)
    targets = {chain.fallback for chain in chains if chain.fallback}
    return [chain for chain in chains if chain.name not in targets]


def chain_inputs(
    ctx: CaseContext, chain: LinearizationChain, force: bool = False
) -> tuple[dict[str, float], list[float], bool]:
    """Parameters and state a chain is evaluated at. Conditional chains run on
    their preset unless forced onto the parameters of the case.
    """
    force = force or ctx.override.force_second_order
    if not chain.conditional or force:
        return ctx.params, ctx.state, force
    params, state = case_inputs(ctx.system_id, ctx.params, ctx.state, chain.preset)
    return params, state, False


def transformed_chain_samples(
    ctx: CaseContext, chain: LinearizationChain, force: bool = False
) -> tuple[dict[str, float], Trajectory]:
    """Bound parameters of the chain and the image of its reduced samples"""
    params, state, force = chain_inputs(ctx, chain, force)
    bound = chain_params(ctx.system_id, chain, params, state, force=force)
    samples = chain_samples(
        ctx.system_id,
        chain,
        params,
        state,
        settings.residual_sample_count,
        ctx.tol,
        ctx.span,
    )
    ctx.stop_reasons[f"chain {chain.name}"] = samples.stop_reason
    return bound, transformed_samples(chain, bound, samples)


def chain_residual(
    ctx: CaseContext, chain: LinearizationChain, force: bool = False
) -> float:
    bound, images = transformed_chain_samples(ctx, chain, force)
    return linear_residual(chain.target, bound, images)


def _chain_label(chain: LinearizationChain) -> str:
    if chain.conditional:
        return f"{chain.name} on {chain.preset}"
    return chain.name


def linear_residual_metric(ctx: CaseContext) -> MetricResult:
    threshold = ctx.thresholds.linear_residual
    items = []
    for chain in primary_chains(ctx.system_id):
        fallback = None
        if chain.fallback:
            derived = transform_chain(ctx.system_id, chain.fallback)
            fallback = (
                _chain_label(derived),
                lambda derived=derived: chain_residual(ctx, derived),
            )
        items.append(
            assess(
                _chain_label(chain),
                lambda chain=chain: chain_residual(ctx, chain),
                threshold,
                fallback,
            )
        )
    return combine("linear_residual", items, threshold)


def _satisfies(ctx: CaseContext, chain: LinearizationChain) -> bool:
    case = ctx.case
    try:
        check_preset(case, case.preset(chain.preset), ctx.params, ctx.state)
    except ConditionViolatedError:
        return False
    return True


def negative_control(ctx: CaseContext) -> MetricResult:
    """Conditional chains evaluated off their condition must miss the linear
    target by at least the threshold
    """
    threshold = ctx.thresholds.negative_control
    items, notes = [], []
    for chain in primary_chains(ctx.system_id):
        if not chain.conditional:
            continue
        if ctx.override.preset == chain.preset or _satisfies(ctx, chain):
            notes.append(f"{chain.name} skipped, the case satisfies {chain.preset}")
            continue
        items.append(
            assess(
                f"{chain.name} off {chain.preset}",
                lambda chain=chain: chain_residual(ctx, chain, force=True),
                threshold,
                reach=True,
            )
        )
    if not items and notes:
        return MetricResult(
            name="negative_control",
            threshold=threshold,
            verdict=Verdict.NOT_APPLICABLE,
            diagnostics=notes,
        )
    return combine("negative_control", items, threshold, reach=True, notes=notes)


def closed_form_metric(ctx: CaseContext) -> MetricResult:
    threshold = ctx.thresholds.closed_form_residual
    items = [
        assess(
            closed.name,
            lambda closed=closed, index=index: closed_form_residual(
                ctx.system_id,
                closed.name,
                count=settings.closed_form_point_count,
                rng=ctx.rng(_CLOSED_FORM_STREAM + index),
            ),
            threshold,
        )
        for index, closed in enumerate(list_closed_forms(ctx.system_id))
    ]
    return combine("closed_form_residual", items, threshold)


def _fit(ctx: CaseContext, chain_name: str, fit: StructureFit) -> float:
    chain = transform_chain(ctx.system_id, chain_name)
    _, images = transformed_chain_samples(ctx, chain)
    return fit(images)


def _canonical_item(
    ctx: CaseContext, family: SymmetryFamily, index: int, threshold: float
) -> Item:
    """Straightening of the claimed pair by the first stage of its chain"""
    label = f"{family.name} pair in the chart of {family.canonical_chain}"
    points = sample_jet_points(
        family,
        family_equation(family),
        ctx.bound,
        settings.closure_point_count,
        ctx.rng(_CANONICAL_STREAM + index),
    )
    commutator = abelian_residual(family, ctx.bound, points)
    if commutator > ctx.thresholds.commutator:
        deviation = canonical_deviation(family, ctx.bound, points)
        note = (
            f"{label} : the pair does not commute ({commutator:.3e}), "
            f"no chart takes it to (∂_U, Y ∂_U), deviation {deviation:.3e}"
        )
        return Item(label, deviation, Verdict.DIAGNOSTIC, note)

    chain = transform_chain(ctx.system_id, family.canonical_chain)
    fallback = None
    if chain.fallback:
        derived = replace(family, canonical_chain=chain.fallback)
        fallback = (
            f"{family.name} pair in the chart of {chain.fallback}",
            lambda: canonical_deviation(derived, ctx.bound, points),
        )
    return assess(
        label,
        lambda: canonical_deviation(family, ctx.bound, points),
        threshold,
        fallback,
    )


def structure_fit(ctx: CaseContext) -> MetricResult:
    threshold = ctx.thresholds.structure_fit
    items = [
        assess(
            f"{chain_name} {label}",
            lambda chain_name=chain_name, fit=fit: _fit(ctx, chain_name, fit),
            threshold,
        )
        for chain_name, label, fit in STRUCTURE_FITS.get(ctx.system_id, ())
    ]
    items.extend(
        _canonical_item(ctx, family, index, threshold)
        for index, family in enumerate(generators(ctx.system_id))
        if family.canonical_chain is not None
    )
    return combine("structure_fit", items, threshold)
