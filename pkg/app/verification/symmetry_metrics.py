"""Metrics of the claimed symmetry algebras"""

from collections.abc import Sequence
from functools import cache

from app.config import settings
from app.enums import Verdict
from app.exceptions import LabError
from app.symmetry.checks import (
    abelian_residual,
    closure_residual,
    family_equation,
    identity_residual,
    sample_jet_points,
    symmetry_residuals,
)
from app.symmetry.generators import generators
from app.symmetry.models import JetPoint, PointSymmetry, SymmetryFamily
from app.symmetry.prolongation import closure_check, structure_constants

from .context import CaseContext
from .models import MetricResult
from .verdicts import Item, assess, combine

_SYMMETRY_STREAM = 100
_ALGEBRA_STREAM = 200

# Fitted structure constants below this are reported as zero
_STRUCTURE_FLOOR = 1e-6


def _family_points(
    ctx: CaseContext, family: SymmetryFamily, stream: int, count: int
) -> list[JetPoint]:
    return sample_jet_points(
        family, family_equation(family), ctx.bound, count, ctx.rng(stream)
    )


def _family_items(
    ctx: CaseContext, family: SymmetryFamily, stream: int
) -> list[Item]:
    """Residual of every generator on the form it is claimed for, and on the
    derived form when the displayed one is inconsistent
    """
    threshold = ctx.thresholds.symmetry_max_residual

    @cache
    def residuals(form: str) -> dict[str, float]:
        ode = family_equation(family, form)
        points = sample_jet_points(
            family, ode, ctx.bound, settings.jet_point_count, ctx.rng(stream)
        )
        return symmetry_residuals(family, ode, ctx.bound, points)

    derived = ctx.case.form(family.form).fallback
    items = []
    for generator in family.generators:
        label = generator.label
        fallback = None
        if derived:
            fallback = (
                f"{label} on {derived}",
                lambda label=label: residuals(derived)[label],
            )
        items.append(
            assess(
                f"{label} on {family.form}",
                lambda label=label: residuals(family.form)[label],
                threshold,
                fallback,
            )
        )
    return items


def symmetry_max_residual(ctx: CaseContext) -> MetricResult:
    threshold = ctx.thresholds.symmetry_max_residual
    items = [
        item
        for index, family in enumerate(generators(ctx.system_id))
        for item in _family_items(ctx, family, _SYMMETRY_STREAM + index)
    ]
    return combine("symmetry_max_residual", items, threshold)


def _pair_closure(
    ctx: CaseContext, family: SymmetryFamily, points: list[JetPoint]
) -> float:
    base = [(point.y, point.u) for point in points]
    return max(
        closure_check(family.subset(pair), base, ctx.bound)
        for pair in family.abelian_pairs
    )


def abelian_item(
    ctx: CaseContext, family: SymmetryFamily, points: list[JetPoint]
) -> Item:
    """Pairs claimed abelian. A pair which does not commute but still spans
    a two dimensional algebra is reported as a diagnostic.
    """
    threshold = ctx.thresholds.commutator
    label = f"{family.name} pairs {list(family.abelian_pairs)}"
    item = assess(label, lambda: abelian_residual(family, ctx.bound, points), threshold)
    if item.verdict == Verdict.PASS:
        return item
    try:
        closure = _pair_closure(ctx, family, points)
        brackets = [
            note
            for pair in family.abelian_pairs
            for note in _bracket_notes(ctx, family.subset(pair), points)
        ]
    except LabError as error:
        return Item(label, item.value, Verdict.FAIL, f"{item.note}, {error}")
    if closure <= ctx.thresholds.closure_residual:
        note = (
            f"{item.note}, the pair is not abelian since {'; '.join(brackets)}, "
            f"but closes on itself ({closure:.3e})"
        )
        return Item(label, item.value, Verdict.DIAGNOSTIC, note)
    return item


def commutator(ctx: CaseContext) -> MetricResult:
    threshold = ctx.thresholds.commutator
    items = []
    for index, family in enumerate(generators(ctx.system_id)):
        if not family.abelian_pairs:
            continue
        points = _family_points(
            ctx, family, _ALGEBRA_STREAM + index, settings.closure_point_count
        )
        items.append(abelian_item(ctx, family, points))
    return combine("commutator", items, threshold)


def _bracket_notes(
    ctx: CaseContext, subset: Sequence[PointSymmetry], points: list[JetPoint]
) -> list[str]:
    """Fitted commutators [A, B] = c_1 X_1 + ... within the subset"""
    base = [(point.y, point.u) for point in points]
    labels = [generator.label for generator in subset]
    notes = []
    fits = structure_constants(subset, base, ctx.bound)
    for (first, second), (coefficients, _) in fits.items():
        terms = [
            f"{c:+.6f} {label}"
            for c, label in zip(coefficients, labels, strict=True)
            if abs(c) > _STRUCTURE_FLOOR
        ]
        notes.append(f"[{first}, {second}] = {' '.join(terms) or '0'}")
    return notes


def structure_notes(
    ctx: CaseContext, family: SymmetryFamily, points: list[JetPoint]
) -> list[str]:
    """Fitted commutators of every closure set"""
    return [
        note
        for labels in family.closure_sets
        for note in _bracket_notes(ctx, family.subset(labels), points)
    ]


def closure_residual_metric(ctx: CaseContext) -> MetricResult:
    threshold = ctx.thresholds.closure_residual
    items, notes = [], []
    for index, family in enumerate(generators(ctx.system_id)):
        if not family.closure_sets and not family.identities:
            continue
        points = _family_points(
            ctx, family, _ALGEBRA_STREAM + index, settings.closure_point_count
        )
        if family.closure_sets:
            items.append(
                assess(
                    f"{family.name} closure",
                    lambda family=family, points=points: closure_residual(
                        family, ctx.bound, points
                    ),
                    threshold,
                )
            )
            try:
                notes.extend(structure_notes(ctx, family, points))
            except LabError as error:
                notes.append(f"No structure constants for {family.name} : {error}")
        if family.identities:
            items.append(
                assess(
                    f"{family.name} identities",
                    lambda family=family, points=points: identity_residual(
                        family, ctx.bound, points
                    ),
                    threshold,
                )
            )
    return combine("closure_residual", items, threshold, notes=notes)
