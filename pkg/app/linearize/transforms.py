"""Changes of variables pushed along solutions.

A solution of the reduced equation is represented near a sample by the pair of
univariate jets t -> (y0 + t, u(y0 + t)). Every stage maps that pair to a new
one, and derivatives in the new chart follow from d/dX = (1/X') d/dt, so the
chain rule is applied exactly up to the order carried by the jets.
"""

from collections.abc import Sequence

import numpy as np

from app.config import settings
from app.exceptions import JetOrderError, SingularLocusError
from app.integrate.ode import OdeParams
from app.jets.jet import Jet, as_jet, seed_all, taylor_curve

from .models import LinearizationChain, Transform

_CURVE = "t"


def derivative_along(v: Jet, x: Jet, count: int) -> Jet:
    """Jet of d^count v / dx^count along the curve, of order v.order - count"""
    current = v
    for _ in range(count):
        lower = current.order - 1
        current = current.differentiate(_CURVE) / x.differentiate(_CURVE).truncate(
            lower
        )
    return current


def derivatives_along(v: Jet, x: Jet) -> np.ndarray:
    """Derivatives v, dv/dx, ..., up to the order of the jets"""
    values = [v.value]
    current = v
    for _ in range(v.order):
        current = derivative_along(current, x, 1)
        values.append(current.value)
    return np.array(values)


def identity() -> Transform:
    return Transform("identity", lambda x, v, p: (x, v))


def substitution(order: int, name: str | None = None) -> Transform:
    """New dependent variable d^order v / dx^order against the same x"""

    def apply(x: Jet, v: Jet, params: OdeParams) -> tuple[Jet, Jet]:
        return x.truncate(x.order - order), derivative_along(v, x, order)

    return Transform(name or f"derivative_{order}", apply, order_loss=order)


def jacobian_determinant(
    transform: Transform, params: OdeParams, x: float, v: float
) -> float:
    seeds = seed_all(("x", "v"), (x, v), 1)
    new_x, new_v = (as_jet(c, seeds[0]) for c in transform.map(*seeds, params))
    return new_x.partial("x") * new_v.partial("v") - new_x.partial("v") * new_v.partial(
        "x"
    )


def apply_stage(
    transform: Transform, x: Jet, v: Jet, params: OdeParams
) -> tuple[Jet, Jet]:
    if transform.is_point:
        determinant = jacobian_determinant(transform, params, x.value, v.value)
        if not abs(determinant) > settings.guard_margin:
            msg = (
                f"{transform.name} is singular at ({x.value!r}, {v.value!r}) "
                f"(jacobian {determinant:.3e})"
            )
            raise SingularLocusError(msg)
    new_x, new_v = transform.map(x, v, params)
    return as_jet(new_x, x), as_jet(new_v, x)


def curve_through(y: float, derivatives: Sequence[float]) -> tuple[Jet, Jet]:
    order = len(derivatives) - 1
    return taylor_curve([y, 1.0], order, _CURVE), taylor_curve(
        derivatives, order, _CURVE
    )


def pushforward_stages(
    stages: Sequence[Transform],
    params: OdeParams,
    y: float,
    derivatives: Sequence[float],
) -> list[tuple[float, np.ndarray]]:
    """Independent variable and derivatives of the dependent one in the chart
    reached after each stage.
    """
    x, v = curve_through(y, derivatives)
    charts = []
    for stage in stages:
        x, v = apply_stage(stage, x, v, params)
        charts.append((x.value, derivatives_along(v, x)))
    return charts


def pushforward(
    stages: Sequence[Transform],
    params: OdeParams,
    y: float,
    derivatives: Sequence[float],
) -> tuple[float, np.ndarray]:
    """(Y, [U, dU/dY, ...]) at the image of a point (y, u, u', ...)"""
    x, v = curve_through(y, derivatives)
    for stage in stages:
        x, v = apply_stage(stage, x, v, params)
    return x.value, derivatives_along(v, x)


def push_chain(
    chain: LinearizationChain,
    params: OdeParams,
    y: float,
    derivatives: Sequence[float],
) -> tuple[float, np.ndarray]:
    if len(derivatives) < chain.source_order + 1:
        msg = (
            f"Chain {chain.name} needs {chain.source_order + 1} derivatives, "
            f"got {len(derivatives)}"
        )
        raise JetOrderError(msg)
    return pushforward(
        chain.stages, params, y, list(derivatives[: chain.source_order + 1])
    )
