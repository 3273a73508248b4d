"""Checks of a generator family at seeded random points of its box"""

from collections.abc import Sequence

import numpy as np

from app.config import settings
from app.exceptions import DomainGuardError, JetDomainError, SingularLocusError
from app.integrate.ode import OdeParams, OdeSpec
from app.jets.jet import value_of
from app.linearize.catalog import transform_chain
from app.reduce.catalog import get_case

from .models import JetPoint, SymmetryFamily
from .prolongation import (
    closure_check,
    commutator,
    pushforward_generator,
    symmetry_residual,
)

# Attempts per requested point before the box is declared inadmissible
_ATTEMPTS_PER_POINT = 50


def family_equation(family: SymmetryFamily, form: str | None = None) -> OdeSpec:
    return get_case(family.system_id).form(form or family.form).ode


def sample_jet_points(
    family: SymmetryFamily,
    ode: OdeSpec,
    params: OdeParams,
    count: int,
    rng: np.random.Generator,
) -> list[JetPoint]:
    """Points of the box away from the singular loci of the equation and of
    every generator of the family by the window margin
    """
    bound = ode.with_params(**params)
    lows, highs = np.array(family.box[: ode.order + 1]).T
    points: list[JetPoint] = []
    for _ in range(_ATTEMPTS_PER_POINT * count):
        if len(points) == count:
            return points
        y, *derivatives = (float(v) for v in rng.uniform(lows, highs))
        u = derivatives[0]
        if not bound.margin(y, derivatives) > settings.window_margin:
            continue
        if any(
            not g.margin(y, u, params) > settings.window_margin
            for g in family.generators
        ):
            continue
        try:
            highest = value_of(bound.evaluate(y, derivatives))
        except (SingularLocusError, JetDomainError):
            continue
        if np.isfinite(highest):
            points.append(JetPoint(y, tuple(derivatives)))
    if len(points) < count:
        msg = (
            f"Only {len(points)} of {count} admissible points found for "
            f"{family.name} in {family.box}"
        )
        raise DomainGuardError(msg)
    return points


def symmetry_residuals(
    family: SymmetryFamily,
    ode: OdeSpec,
    params: OdeParams,
    points: Sequence[JetPoint],
) -> dict[str, float]:
    """Largest symmetry residual of every generator over the points"""
    return {
        generator.label: max(
            symmetry_residual(ode, generator, point, params) for point in points
        )
        for generator in family.generators
    }


def abelian_residual(
    family: SymmetryFamily, params: OdeParams, points: Sequence[JetPoint]
) -> float:
    """Largest component of the commutators of the pairs claimed abelian"""
    worst = 0.0
    for first, second in family.abelian_pairs:
        pair = family.subset((first, second))
        for point in points:
            components = commutator(*pair, point.y, point.u, params)
            worst = max(worst, *(abs(c) for c in components))
    return worst


def closure_residual(
    family: SymmetryFamily, params: OdeParams, points: Sequence[JetPoint]
) -> float:
    """Largest closure residual over the closure sets of the family"""
    base = [(point.y, point.u) for point in points]
    return max(
        (
            closure_check(family.subset(labels), base, params)
            for labels in family.closure_sets
        ),
        default=0.0,
    )


def identity_residual(
    family: SymmetryFamily, params: OdeParams, points: Sequence[JetPoint]
) -> float:
    """Largest deviation of the generators defined as combinations of others"""
    worst = 0.0
    for identity in family.identities:
        generator = family.generator(identity.label)
        combination = identity.combination(params)
        for point in points:
            y, u = point.y, point.u
            xi = sum(
                c * value_of(family.generator(label).xi(y, u, params))
                for label, c in combination.items()
            )
            eta = sum(
                c * value_of(family.generator(label).eta(y, u, params))
                for label, c in combination.items()
            )
            worst = max(
                worst,
                abs(value_of(generator.xi(y, u, params)) - xi),
                abs(value_of(generator.eta(y, u, params)) - eta),
            )
    return worst


def canonical_deviation(
    family: SymmetryFamily, params: OdeParams, points: Sequence[JetPoint]
) -> float | None:
    """Departure of the claimed pair, in the chart of the first stage of the
    canonical chain, from (∂_U, Y ∂_U) up to a common constant factor
    """
    if family.canonical_chain is None or family.canonical_pair is None:
        return None
    transform = transform_chain(family.system_id, family.canonical_chain).stages[0]
    first, second = family.subset(family.canonical_pair)
    scales, deviations = [], []
    for point in points:
        new_y, _, xi1, eta1 = pushforward_generator(
            transform, first, point.y, point.u, params
        )
        _, _, xi2, eta2 = pushforward_generator(
            transform, second, point.y, point.u, params
        )
        scales.append(eta1)
        deviations.append(
            max(
                abs(xi1),
                abs(xi2),
                abs(eta2 - eta1 * new_y) / (1.0 + abs(eta1 * new_y)),
            )
        )
    scales = np.array(scales)
    spread = float(np.ptp(scales) / (1.0 + np.max(np.abs(scales))))
    return max(spread, *deviations)
