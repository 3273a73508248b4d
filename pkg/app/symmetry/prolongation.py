"""Prolongation of point symmetries and the pointwise conditions built on it.

Coefficients are evaluated on jets over (y, u, u', ..., u^(n)), so the total
derivative D_y = ∂_y + Σ u^(k+1) ∂_(u^(k)) is applied exactly and every
condition reduces to values at a single point.
"""

from collections.abc import Sequence

import numpy as np

from app.config import settings
from app.exceptions import IllConditionedError, SingularLocusError
from app.integrate.ode import OdeParams, OdeSpec
from app.jets.jet import Jet, as_jet, seed_all, value_of
from app.linearize.models import Transform

from .models import JetPoint, PointSymmetry

# Smallest singular value, relative to the largest, of a usable closure fit
_CONDITION_FLOOR = 1e-10


def _names(count: int) -> tuple[str, ...]:
    return ("y", *(f"u{k}" for k in range(count)))


def _components(
    generator: PointSymmetry, y: Jet, u: Jet, params: OdeParams
) -> tuple[Jet, Jet]:
    margin = generator.margin(y.value, u.value, params)
    if not margin > settings.guard_margin:
        msg = (
            f"{generator.label} evaluated on its singular locus at "
            f"({y.value!r}, {u.value!r})"
        )
        raise SingularLocusError(msg)
    return as_jet(generator.xi(y, u, params), y), as_jet(generator.eta(y, u, params), y)


def prolong_coeffs(
    generator: PointSymmetry,
    y: float,
    derivatives: Sequence[float],
    params: OdeParams,
) -> np.ndarray:
    """η^(1), ..., η^(n) at the point (y, u, ..., u^(n)), through
    η^(k) = D_y η^(k-1) - u^(k) D_y ξ
    """
    order = len(derivatives) - 1
    if order < 1:
        return np.empty(0)
    seeds = seed_all(_names(order + 1), [y, *derivatives], order)
    y_jet, u_jets = seeds[0], seeds[1:]

    def total(f: Jet) -> Jet:
        lower = f.order - 1
        result = f.differentiate("y")
        for k in range(order):
            result = result + u_jets[k + 1].truncate(lower) * f.differentiate(f"u{k}")
        return result

    xi, eta = _components(generator, y_jet, u_jets[0], params)
    total_xi = total(xi)
    coefficients = []
    current = eta
    for k in range(1, order + 1):
        lowered = total(current)
        lower = lowered.order
        current = lowered - u_jets[k].truncate(lower) * total_xi.truncate(lower)
        coefficients.append(current.value)
    return np.array(coefficients)


def symmetry_residual(
    ode: OdeSpec, generator: PointSymmetry, point: JetPoint, params: OdeParams
) -> float:
    """|η^(n) - X(F)| on the equation u^(n) = F, relative to 1 + |F|. Zero
    certifies the generator as a point symmetry at the point.
    """
    bound = ode.with_params(**params)
    order = ode.order
    derivatives = list(point.derivatives[:order])
    seeds = seed_all(_names(order), [point.y, *derivatives], 1)
    rhs = as_jet(bound.evaluate(seeds[0], seeds[1:]), seeds[0])
    highest = rhs.value

    prolonged = prolong_coeffs(generator, point.y, [*derivatives, highest], params)
    xi = value_of(generator.xi(point.y, point.u, params))
    eta = value_of(generator.eta(point.y, point.u, params))
    expected = xi * rhs.partial("y") + eta * rhs.partial("u0")
    for k in range(1, order):
        expected += prolonged[k - 1] * rhs.partial(f"u{k}")
    return abs(prolonged[order - 1] - expected) / (1.0 + abs(highest))


def commutator(
    first: PointSymmetry,
    second: PointSymmetry,
    y: float,
    u: float,
    params: OdeParams,
) -> tuple[float, float]:
    """(ξ, η) of [first, second] at (y, u)"""
    y_jet, u_jet = seed_all(("y", "u"), (y, u), 1)
    xi1, eta1 = _components(first, y_jet, u_jet, params)
    xi2, eta2 = _components(second, y_jet, u_jet, params)

    def along(xi: Jet, eta: Jet, f: Jet) -> float:
        return xi.value * f.partial("y") + eta.value * f.partial("u")

    return (
        along(xi1, eta1, xi2) - along(xi2, eta2, xi1),
        along(xi1, eta1, eta2) - along(xi2, eta2, eta1),
    )


def _design(
    generators: Sequence[PointSymmetry],
    points: Sequence[tuple[float, float]],
    params: OdeParams,
) -> np.ndarray:
    columns = []
    for generator in generators:
        column = []
        for y, u in points:
            column.append(value_of(generator.xi(y, u, params)))
            column.append(value_of(generator.eta(y, u, params)))
        columns.append(column)
    design = np.array(columns).T
    singular = np.linalg.svd(design, compute_uv=False)
    if not singular[-1] > _CONDITION_FLOOR * singular[0]:
        msg = (
            f"Generators {[g.label for g in generators]} are not independent "
            f"over {len(points)} points"
        )
        raise IllConditionedError(msg)
    return design


def structure_constants(
    generators: Sequence[PointSymmetry],
    points: Sequence[tuple[float, float]],
    params: OdeParams,
) -> dict[tuple[str, str], tuple[np.ndarray, float]]:
    """Least squares expansion of every commutator in the span of the
    generators, with constant coefficients across the points, and the
    relative residual of each fit.
    """
    if len(generators) < 2:
        msg = "Closure needs at least two generators"
        raise IllConditionedError(msg)
    design = _design(generators, points, params)
    fits = {}
    for i, first in enumerate(generators):
        for second in generators[i + 1 :]:
            values = np.array(
                [commutator(first, second, y, u, params) for y, u in points]
            ).ravel()
            coefficients, *_ = np.linalg.lstsq(design, values, rcond=None)
            deviation = np.max(np.abs(design @ coefficients - values))
            fits[first.label, second.label] = (
                coefficients,
                float(deviation / (1.0 + np.max(np.abs(values)))),
            )
    return fits


def closure_check(
    generators: Sequence[PointSymmetry],
    points: Sequence[tuple[float, float]],
    params: OdeParams,
) -> float:
    """Largest residual of the commutators expanded on the generators"""
    fits = structure_constants(generators, points, params)
    return max(residual for _, residual in fits.values())


def pushforward_generator(
    transform: Transform,
    generator: PointSymmetry,
    y: float,
    u: float,
    params: OdeParams,
) -> tuple[float, float, float, float]:
    """(Y, U, Ξ, H): the image of (y, u) and the components of the generator
    in the chart of a point transformation
    """
    y_jet, u_jet = seed_all(("y", "u"), (y, u), 1)
    xi, eta = _components(generator, y_jet, u_jet, params)
    new_y, new_u = (as_jet(c, y_jet) for c in transform.map(y_jet, u_jet, params))

    def along(f: Jet) -> float:
        return xi.value * f.partial("y") + eta.value * f.partial("u")

    return new_y.value, new_u.value, along(new_y), along(new_u)
