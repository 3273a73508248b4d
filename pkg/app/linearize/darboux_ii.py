"""Linearizations of the Darboux II reductions: the momentum w3 against
y = w1² for cases A and B, the coordinate w1 against w2 for the alternative
reduction of case B and for case D.
"""

from collections.abc import Sequence

from app.enums import FormVariant
from app.integrate.ode import OdeParams
from app.jets import functions as fn
from app.jets.jet import Jet, Num
from app.systems.enums import SystemId

from .models import LinearizationChain, Transform, linear_target


def _free_particle(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    return 0.0 * derivatives[1]


def _momentum_chains(scale: str) -> tuple[LinearizationChain, ...]:
    """w3 chains for the potential scale a1 (case A) or 4 b1 (case B)"""

    def displayed(x: Jet, v: Jet, params: OdeParams) -> tuple[Num, Num]:
        return x**2, x**2 * v / 2.0 + params[scale] * x**4 / 8.0

    def derived(x: Jet, v: Jet, params: OdeParams) -> tuple[Num, Num]:
        return x**2, x**2 * v**2 / 2.0 + params[scale] * x**4 / 8.0

    return (
        LinearizationChain(
            "w3_linearized",
            "w3_second_order",
            (Transform("quartic_shift", displayed),),
            linear_target("free_particle", 2, _free_particle),
            fallback="w3_linearized_derived",
        ),
        LinearizationChain(
            "w3_linearized_derived",
            "w3_second_order",
            (Transform("quartic_shift", derived),),
            linear_target("free_particle", 2, _free_particle),
            variant=FormVariant.DERIVED,
        ),
    )


# Case B, alternative reduction


def _b_shift(params: OdeParams) -> Num:
    return params["w0"] * (params["b3"] - params["b1"])


def _b_denominator(y: Num, params: OdeParams) -> Num:
    return y**2 - _b_shift(params) ** 2 + params["b1"] * params["b3"]


def _b_third_target(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    return -3.0 * y * derivatives[2] / _b_denominator(y, params)


def _b_edge(y: Num, params: OdeParams) -> Num:
    b1, b3, w0 = params["b1"], params["b3"], params["w0"]
    return 2.0 * (b1 - b3) * w0 * y**2 - b1 * y**4 - b3


def _b_second_target(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    b1, b3 = params["b1"], params["b3"]
    s, ds = derivatives
    return ((b1 * y**4 - b3) * ds / y - b1 * y**2 * s) / _b_edge(y, params)


def _b_third_chain(name: str, dependent, variant: FormVariant, fallback=None):
    def transform(x: Jet, v: Jet, params: OdeParams) -> tuple[Num, Num]:
        return params["b1"] * x**2 + _b_shift(params), dependent(v)

    return LinearizationChain(
        name,
        "alt_third_order",
        (Transform("quadratic", transform),),
        linear_target(
            name,
            3,
            _b_third_target,
            guard=lambda y, d, p: abs(_b_denominator(y, p)),
        ),
        variant=variant,
        fallback=fallback,
    )


_HYPERBOLIC_ROOT = Transform(
    "hyperbolic_root", lambda x, v, p: (x, fn.sqrt(v**2 + 1.0))
)

DARBOUX_IIB_CHAINS = (
    *_momentum_chains("four_b1"),
    _b_third_chain(
        "alt_third_order",
        lambda v: 1.0 / (2.0 * v**2),
        FormVariant.DISPLAYED,
        fallback="alt_third_order_derived",
    ),
    _b_third_chain(
        "alt_third_order_derived", lambda v: v**2 / 2.0, FormVariant.DERIVED
    ),
    LinearizationChain(
        "alt_second_order",
        "alt_second_order",
        (_HYPERBOLIC_ROOT,),
        linear_target(
            "alt_second_order",
            2,
            _b_second_target,
            guard=lambda y, d, p: min(abs(y), abs(_b_edge(y, p))),
        ),
        preset="linearizable",
    ),
)


# Case D


DARBOUX_IID_CHAINS = (
    LinearizationChain(
        "third_order",
        "third_order",
        (Transform("square", lambda x, v, p: (x, v**2)),),
        linear_target("third_order", 3, lambda y, d, p: 0.0 * d[2]),
    ),
    LinearizationChain(
        "second_order",
        "second_order",
        (_HYPERBOLIC_ROOT,),
        linear_target("free_particle", 2, _free_particle),
        preset="linearizable",
    ),
)


CHAINS: dict[SystemId, tuple[LinearizationChain, ...]] = {
    SystemId.DII_A: _momentum_chains("a1"),
    SystemId.DII_B: DARBOUX_IIB_CHAINS,
    SystemId.DII_D: DARBOUX_IID_CHAINS,
}
