"""Reductions of the Perlick systems and of Taub-NUT to the polar angle, with
the radius as dependent variable and the angular momentum as constant.
"""

from collections.abc import Sequence

from app.enums import FormVariant
from app.integrate.ode import OdeParams, OdeSpec
from app.integrate.reparametrize import coordinate
from app.jets.jet import Num
from app.systems.enums import SystemId
from app.systems.models import Params

from .base import ReductionCase
from .models import Preset, ReducedForm, ReducedRate
from .raising import relation_of

_RADIUS, _ANGLE, _RADIAL_MOMENTUM = coordinate(0), coordinate(1), coordinate(2)


def _radial_guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
    return min(abs(derivatives[0]), abs(params["w"]))


# Perlick I


def _perlick_i_second(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    k, big_a, w = params["k"], params["A"], params["w"]
    r, dr = derivatives[0], derivatives[1]
    return (big_a * r**3 + (1.0 - k * r**2) * w**2 * r**2 + 2.0 * w**2 * dr**2) / (
        w**2 * r * (1.0 + k * r**2)
    )


def _perlick_i_guard(
    y: float, derivatives: Sequence[float], params: OdeParams
) -> float:
    r = derivatives[0]
    return min(_radial_guard(y, derivatives, params), abs(1.0 + params["k"] * r**2))


def _perlick_i_momentum_rate(state: Sequence[Num], params: OdeParams) -> Num:
    k, big_a, w = params["k"], params["A"], params["w"]
    r, p_r = state[0], state[2]
    return ((1.0 - k * r**2) * w**2 - 2.0 * k * r**4 * p_r**2 + big_a * r) / (
        r * w * (1.0 + k * r**2)
    )


def _radius_rate(state: Sequence[Num], params: OdeParams) -> Num:
    return state[2] * state[0] ** 2 / params["w"]


class PerlickIReduction(ReductionCase):
    system_id = SystemId.PERLICK_I
    time_span = (0.0, 1.0)

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        return {"w": state[3]}

    def forms(self) -> tuple[ReducedForm, ...]:
        return PERLICK_I_FORMS

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("dr_dtheta", _ANGLE, _RADIUS, _radius_rate),
            ReducedRate(
                "dp_r_dtheta", _ANGLE, _RADIAL_MOMENTUM, _perlick_i_momentum_rate
            ),
        )


PERLICK_I_FORMS = (
    ReducedForm(
        OdeSpec("second_order", 2, _perlick_i_second, guard=_perlick_i_guard),
        _ANGLE,
        _RADIUS,
    ),
)


# Perlick II


def _perlick_ii_parts(r: Num, params: OdeParams) -> tuple[Num, Num, Num, Num]:
    lam, delta = params["lam"], params["delta"]
    big_p = (
        lam**4 * r**6 + 3.0 * lam**2 * r**2 - delta - 3.0 * delta * lam**2 * r**4
    )
    big_q = (
        1.0
        + lam**4 * r**8
        + 6.0 * lam**2 * r**4
        - 4.0 * delta * lam**2 * r**6
        - 4.0 * delta * r**2
    )
    conformal = 1.0 + lam**2 * r**4 - 2.0 * delta * r**2
    edge = 1.0 - lam**2 * r**4
    return big_p, big_q, conformal, edge


def _perlick_ii_guard(
    y: float, derivatives: Sequence[float], params: OdeParams
) -> float:
    _, _, conformal, edge = _perlick_ii_parts(derivatives[0], params)
    return min(_radial_guard(y, derivatives, params), abs(conformal), abs(edge))


def _perlick_ii_second_displayed(
    y: Num, derivatives: Sequence[Num], params: OdeParams
) -> Num:
    w, big_b = params["w"], params["B"]
    r, dr = derivatives[0], derivatives[1]
    big_p, big_q, conformal, edge = _perlick_ii_parts(r, params)
    return (w**2 * (2.0 * dr**2 * big_p + big_q) - 2.0 * big_b * r**4) / (
        w * r * conformal * edge
    )


def _perlick_ii_second(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    w, big_b = params["w"], params["B"]
    r, dr = derivatives[0], derivatives[1]
    big_p, big_q, conformal, edge = _perlick_ii_parts(r, params)
    return (
        2.0 * w**2 * dr**2 * big_p * r + w**2 * r * big_q - 2.0 * big_b * r**5
    ) / (w**2 * conformal * edge) + 2.0 * dr**2 / r


def _perlick_ii_third(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    lam = params["lam"]
    r, dr, d2r = derivatives
    edge = 1.0 - lam**2 * r**4
    return (
        dr
        / (r**2 * edge)
        * (
            3.0 * r * (3.0 + lam**2 * r**4) * d2r
            - 12.0 * dr**2
            - 4.0 * r**2 * edge
        )
    )


def _perlick_ii_momentum_rate(power: int):
    """dp_r/dtheta with the p_r² P term scaled by r**power"""

    def rate(state: Sequence[Num], params: OdeParams) -> Num:
        w, big_b = params["w"], params["B"]
        r, p_r = state[0], state[2]
        big_p, big_q, conformal, edge = _perlick_ii_parts(r, params)
        return (
            2.0 * r**power * p_r**2 * big_p + w**2 * big_q - 2.0 * big_b * r**4
        ) / (w * r * conformal * edge)

    return rate


_PERLICK_II_SECOND = ReducedForm(
    OdeSpec(
        "second_order_derived",
        2,
        _perlick_ii_second,
        guard=_perlick_ii_guard,
        variant=FormVariant.DERIVED,
    ),
    _ANGLE,
    _RADIUS,
)

PERLICK_II_FORMS = (
    ReducedForm(
        OdeSpec(
            "second_order", 2, _perlick_ii_second_displayed, guard=_perlick_ii_guard
        ),
        _ANGLE,
        _RADIUS,
        fallback="second_order_derived",
    ),
    _PERLICK_II_SECOND,
    ReducedForm(
        OdeSpec("third_order", 3, _perlick_ii_third, guard=_perlick_ii_guard),
        _ANGLE,
        _RADIUS,
        derivation=relation_of(_PERLICK_II_SECOND.ode),
        eliminate=("B",),
    ),
)


class PerlickIIReduction(ReductionCase):
    system_id = SystemId.PERLICK_II
    time_span = (0.0, 1.0)

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        return {"w": state[3]}

    def forms(self) -> tuple[ReducedForm, ...]:
        return PERLICK_II_FORMS

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("dr_dtheta", _ANGLE, _RADIUS, _radius_rate),
            ReducedRate(
                "dp_r_dtheta",
                _ANGLE,
                _RADIAL_MOMENTUM,
                _perlick_ii_momentum_rate(2),
                fallback="dp_r_dtheta_derived",
            ),
            ReducedRate(
                "dp_r_dtheta_derived",
                _ANGLE,
                _RADIAL_MOMENTUM,
                _perlick_ii_momentum_rate(4),
                variant=FormVariant.DERIVED,
            ),
        )

    def presets(self) -> tuple[Preset, ...]:
        return (
            Preset(
                "linearizable",
                "B",
                lambda p: (
                    p["B"] - 2.0 * p["w"] ** 2 * (p["lam"] ** 2 - p["delta"] ** 2)
                ),
                "B = 2 p_theta² (lam² - delta²)",
            ),
        )


# Taub-NUT


def _taub_nut_guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
    r = derivatives[0]
    return min(_radial_guard(y, derivatives, params), abs(params["eta"] + r))


def _taub_nut_second(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    eta, alpha, w = params["eta"], params["alpha"], params["w"]
    u, du = derivatives[0], derivatives[1]
    return (3.0 * eta + 4.0 * u) * du**2 / (2.0 * u * (eta + u)) - u * (
        2.0 * alpha * u**2 - eta * w**2 - 2.0 * w**2 * u
    ) / (2.0 * w**2 * (eta + u))


def _taub_nut_third(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    u, du, d2u = derivatives
    return -du * (u**2 - 6.0 * u * d2u + 6.0 * du**2) / u**2


def _taub_nut_momentum_rate(state: Sequence[Num], params: OdeParams) -> Num:
    """Displayed form, with a sign opposite to the flow"""
    eta, alpha, w = params["eta"], params["alpha"], params["w"]
    r, p_r = state[0], state[2]
    return (2.0 * (alpha * r - w**2) * r + eta * (r**2 * p_r**2 - w**2)) / (
        2.0 * (eta + r) * r * w
    )


_TAUB_NUT_SECOND = ReducedForm(
    OdeSpec("second_order", 2, _taub_nut_second, guard=_taub_nut_guard),
    _ANGLE,
    _RADIUS,
)

TAUB_NUT_FORMS = (
    _TAUB_NUT_SECOND,
    ReducedForm(
        OdeSpec("third_order", 3, _taub_nut_third, guard=_radial_guard),
        _ANGLE,
        _RADIUS,
        derivation=relation_of(_TAUB_NUT_SECOND.ode),
        eliminate=("alpha",),
    ),
)


class TaubNutReduction(ReductionCase):
    system_id = SystemId.TAUB_NUT
    time_span = (0.0, 1.0)

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        return {"w": state[3]}

    def forms(self) -> tuple[ReducedForm, ...]:
        return TAUB_NUT_FORMS

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("dr_dphi", _ANGLE, _RADIUS, _radius_rate),
            ReducedRate(
                "dp_r_dphi",
                _ANGLE,
                _RADIAL_MOMENTUM,
                _taub_nut_momentum_rate,
                fallback="dp_r_dphi_derived",
            ),
            ReducedRate(
                "dp_r_dphi_derived",
                _ANGLE,
                _RADIAL_MOMENTUM,
                lambda state, params: -_taub_nut_momentum_rate(state, params),
                variant=FormVariant.DERIVED,
            ),
        )
