"""Linearizations of the Darboux IV reductions against y = exp(w2)"""

from collections.abc import Sequence

from app.enums import FormVariant
from app.integrate.ode import OdeParams
from app.jets import functions as fn
from app.jets.jet import Jet, Num
from app.systems.enums import SystemId

from .models import LinearizationChain, Transform, linear_target
from .transforms import identity

# Case B


def _b_transform(x: Jet, v: Jet, params: OdeParams) -> tuple[Num, Num]:
    big_b2, big_b3, big_w0 = params["B2"], params["B3"], params["W0"]
    new_x = (
        -big_b2 * x**4 - big_b2 + (4.0 * big_b3 + 96.0 * big_w0) * x**2
    ) / (6.0 * x**2)
    return new_x, -fn.cos(2.0 * v) / 2.0


def _b_displayed_parts(y: Num, params: OdeParams) -> tuple[Num, Num]:
    big_b2, big_b3, big_w0 = params["B2"], params["B3"], params["W0"]
    lead = big_b2**2 + 48.0 * big_b3 * big_w0 + 1152.0 * big_w0**2
    numerator = lead - 72.0 * big_w0 * y
    denominator = (
        big_b2**2 * big_b3
        + 24.0 * (big_b2**2 + 2.0 * big_b3**2) * big_w0
        + 2304.0 * big_b3 * big_w0**2
        + 27648.0 * big_w0**3
        - 3.0 * lead * y
        + 108.0 * big_w0 * y**2
    )
    return numerator, denominator


def _b_displayed_target(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    numerator, denominator = _b_displayed_parts(y, params)
    return 4.5 * derivatives[2] * numerator / denominator


def _b_profile(y: Num, params: OdeParams) -> tuple[Num, Num]:
    """Quadratic F of the new variable and its derivative, through
    z = exp(2 w2) + exp(-2 w2)
    """
    b2, b3, w0 = params["b2"], params["b3"], params["w0"]
    big_b2, big_b3, big_w0 = params["B2"], params["B3"], params["W0"]
    separation = 4.0 * (b3 - b2) - 16.0 * (625.0 * b2 + 81.0 * b3) * w0 / 3375.0
    z = (4.0 * big_b3 + 96.0 * big_w0 - 6.0 * y) / big_b2
    profile = separation * (z**2 - 4.0) - 4.0 * (b2 + b3) * z - 8.0 * (b2 - b3)
    slope = (2.0 * separation * z - 4.0 * (b2 + b3)) * (-6.0 / big_b2)
    return profile, slope


def _b_derived_target(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    profile, slope = _b_profile(y, params)
    return -1.5 * slope * derivatives[2] / profile


DARBOUX_IVB_CHAINS = (
    LinearizationChain(
        "third_order",
        "third_order_derived",
        (Transform("canonical", _b_transform),),
        linear_target(
            "third_order",
            3,
            _b_displayed_target,
            guard=lambda y, d, p: abs(_b_displayed_parts(y, p)[1]),
        ),
        fallback="third_order_derived",
    ),
    LinearizationChain(
        "third_order_derived",
        "third_order_derived",
        (Transform("canonical", _b_transform),),
        linear_target(
            "third_order_derived",
            3,
            _b_derived_target,
            guard=lambda y, d, p: abs(_b_profile(y, p)[0]),
        ),
        variant=FormVariant.DERIVED,
    ),
)


# Case C


def _c_transform(x: Jet, v: Jet, params: OdeParams) -> tuple[Num, Num]:
    c2, c3 = params["C2"], params["C3"]
    return (c3 + 2.0 * c2 * x**2 + c3 * x**4) / x**2, v**2 / 2.0


def _c_frequency(params: OdeParams) -> Num:
    c2, c3, w0 = params["C2"], params["C3"], params["w0"]
    return 2.0 * (2.0 * c2**2 + c3**2 - c3 * w0)


def _c_third_target(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    return 3.0 * y * derivatives[2] / (_c_frequency(params) - y**2)


def _c_weight(y: Num, params: OdeParams) -> tuple[Num, Num]:
    """C3 y⁸ + 4 C2 y⁶ + 2 w0 y⁴ + 4 C2 y² + C3 and its derivative"""
    c2, c3, w0 = params["C2"], params["C3"], params["w0"]
    weight = c3 * y**8 + 4.0 * c2 * y**6 + 2.0 * w0 * y**4 + 4.0 * c2 * y**2 + c3
    slope = 8.0 * c3 * y**7 + 24.0 * c2 * y**5 + 8.0 * w0 * y**3 + 8.0 * c2 * y
    return weight, slope


def _c_second_target(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    u, du = derivatives
    weight, slope = _c_weight(y, params)
    quartic = y**4 - 1.0
    drift = 4.0 * y**3 / quartic - 1.0 / y - slope / (2.0 * weight)
    return drift * du + params["C3"] * quartic**2 / (y**2 * weight) * u


DARBOUX_IVC_CHAINS = (
    LinearizationChain(
        "third_order",
        "third_order_derived",
        (Transform("canonical", _c_transform),),
        linear_target(
            "third_order",
            3,
            _c_third_target,
            guard=lambda y, d, p: abs(_c_frequency(p) - y**2),
        ),
    ),
    LinearizationChain(
        "second_order",
        "second_order",
        (identity(),),
        linear_target(
            "second_order",
            2,
            _c_second_target,
            guard=lambda y, d, p: min(
                abs(y), abs(y**4 - 1.0), abs(_c_weight(y, p)[0])
            ),
        ),
        preset="linearizable",
    ),
)


CHAINS: dict[SystemId, tuple[LinearizationChain, ...]] = {
    SystemId.DIV_B: DARBOUX_IVB_CHAINS,
    SystemId.DIV_C: DARBOUX_IVC_CHAINS,
}
