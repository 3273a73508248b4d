"""Linearizations of the Darboux III reductions in the coordinate w2.

Case C goes through three stages: canonical coordinates of an abelian pair of
its symmetries, the second derivative R of the new dependent variable, and a
point transformation of the second order equation satisfied by R.
"""

from collections.abc import Sequence

from app.enums import FormVariant
from app.integrate.ode import OdeParams
from app.jets import functions as fn
from app.jets.jet import Jet, Num
from app.systems.enums import SystemId

from .models import LinearizationChain, Transform, linear_target
from .transforms import substitution


def _free_particle(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    return 0.0 * derivatives[1]


# Case C


def _canonical(shift: float):
    """(u + y) / (3 (uy - C2)) and -1 / (uy - shift C2)"""

    def transform(x: Jet, v: Jet, params: OdeParams) -> tuple[Num, Num]:
        c2 = params["C2"]
        product = v * x
        return (v + x) / (3.0 * (product - c2)), -1.0 / (product - shift * c2)

    return transform


def _flatten(x: Jet, v: Jet, params: OdeParams) -> tuple[Num, Num]:
    scale = fn.power(fn.square(v), 1.0 / 3.0)
    return scale, fn.square(x) / 2.0 * scale


def _staged_chain(name: str, shift: float, **kwargs) -> LinearizationChain:
    return LinearizationChain(
        name,
        "fourth_order_derived",
        (
            Transform("canonical", _canonical(shift)),
            substitution(2, "second_derivative"),
            Transform("flatten", _flatten),
        ),
        linear_target("free_particle", 2, _free_particle),
        **kwargs,
    )


DARBOUX_IIIC_CHAINS = (
    _staged_chain("staged", 3.0, fallback="staged_derived"),
    _staged_chain("staged_derived", 1.0, variant=FormVariant.DERIVED),
)


# Case D


def _d_edge(y: Num, params: OdeParams) -> Num:
    return params["D3"] * y**2 + params["D2"] * y + params["w0"]


def _d_bracket(y: Num, params: OdeParams) -> Num:
    d2, d3, w0 = params["D2"], params["D3"], params["w0"]
    return 4.0 * d3 * y**2 + 3.0 * d2 * y + 2.0 * w0


def _d_discriminant(params: OdeParams) -> Num:
    return 4.0 * params["D3"] * params["w0"] - params["D2"] ** 2


def _d_third_denominator(y: Num, params: OdeParams) -> Num:
    return params["w0"] * y**2 + _d_discriminant(params) * (params["D3"] - y)


def _d_third_target(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    numerator = 3.0 * (_d_discriminant(params) - 2.0 * params["w0"] * y)
    return numerator * derivatives[2] / (2.0 * _d_third_denominator(y, params))


def _d_reciprocal(x: Jet, v: Jet, params: OdeParams) -> tuple[Num, Num]:
    return (2.0 * params["D3"] * x + params["D2"]) / x, -1.0 / v


def _d_second_target(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    s, ds = derivatives
    return (params["w0"] * s - 2.0 * _d_bracket(y, params) * y * ds) / (
        4.0 * y**2 * _d_edge(y, params)
    )


DARBOUX_IIID_CHAINS = (
    LinearizationChain(
        "third_order",
        "third_order",
        (Transform("reciprocal", _d_reciprocal),),
        linear_target(
            "third_order",
            3,
            _d_third_target,
            guard=lambda y, d, p: abs(_d_third_denominator(y, p)),
        ),
    ),
    LinearizationChain(
        "second_order",
        "second_order",
        (Transform("inverse_root", lambda x, v, p: (x, fn.power(v, -0.5))),),
        linear_target(
            "second_order",
            2,
            _d_second_target,
            guard=lambda y, d, p: min(abs(y), abs(_d_edge(y, p))),
        ),
        preset="linearizable",
    ),
)


CHAINS: dict[SystemId, tuple[LinearizationChain, ...]] = {
    SystemId.DIII_C: DARBOUX_IIIC_CHAINS,
    SystemId.DIII_D: DARBOUX_IIID_CHAINS,
}
