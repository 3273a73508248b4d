"""Reductions of the Darboux I systems to the coordinate v, with u as
dependent variable. The separation constant of the v part and the energy are
fixed from the initial state.
"""

from collections.abc import Sequence

from app.enums import FormVariant
from app.integrate.ode import OdeParams, OdeSpec
from app.integrate.reparametrize import coordinate
from app.jets.jet import Num
from app.systems.enums import SystemId
from app.systems.models import Params

from .base import ReductionCase
from .models import ClosureFormula, Preset, ReducedForm, ReducedRate
from .quadrature import SIGN, quadrature

_U, _V, _P_U, _P_V = coordinate(0), coordinate(1), coordinate(2), coordinate(3)


def _u_guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
    return abs(derivatives[0])


def _u_rate(state: Sequence[Num], params: OdeParams) -> Num:
    return state[2] / state[3]


# Case 1


def _d1_radicand(y: Num, params: OdeParams) -> Num:
    """p_v² as a function of v, times v²"""
    b1, b3, w0 = params["b1"], params["b3"], params["w0"]
    return (
        2.0 * w0 * b1 * y**2 - b1 * y**4 - 8.0 * w0 * b3 * y**2 - 4.0 * b3
    )


def _d1_guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
    return min(abs(derivatives[0]), abs(y), abs(_d1_radicand(y, params)))


def _d1_numerator(y: Num, u: Num, params: OdeParams) -> Num:
    return (
        4.0 * u * params["h"]
        - 4.0 * params["b1"] * u**2
        - 4.0 * params["b2"]
        - params["c"]
    )


def _d1_denominator(y: Num, u: Num, params: OdeParams) -> Num:
    return params["c"] - params["b1"] * y**2 - 4.0 * params["b3"] / y**2


def _d1_second(b3_weight: float):
    def rhs(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
        b1, b2, b3, w0 = params["b1"], params["b2"], params["b3"], params["w0"]
        u, du = derivatives[0], derivatives[1]
        return du**2 / (2.0 * u) + (
            u * (b1 * y**4 - b3_weight * b3) * du
            + y**3 * (w0 * b1 - 2.0 * b1 * u**2 + 2.0 * b2 - 4.0 * w0 * b3)
        ) / (y * u * _d1_radicand(y, params))

    return rhs


def _d1_third(factor: float):
    def rhs(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
        b1, b3 = params["b1"], params["b3"]
        du, d2u = derivatives[1], derivatives[2]
        return (
            factor
            * (b1 * y**4 - 4.0 * b3)
            * (du - y * d2u)
            / (y**2 * _d1_radicand(y, params))
        )

    return rhs


_D1_QUADRATURE, _D1_RELATION = quadrature(
    "quadrature", _d1_numerator, _d1_denominator, _V, _U
)

DARBOUX_I1_FORMS = (
    _D1_QUADRATURE,
    ReducedForm(
        OdeSpec("second_order", 2, _d1_second(1.0), guard=_d1_guard),
        _V,
        _U,
        derivation=_D1_RELATION,
        eliminate=("h",),
        fallback="second_order_derived",
    ),
    ReducedForm(
        OdeSpec(
            "second_order_derived",
            2,
            _d1_second(4.0),
            guard=_d1_guard,
            variant=FormVariant.DERIVED,
        ),
        _V,
        _U,
        derivation=_D1_RELATION,
        eliminate=("h",),
    ),
    ReducedForm(
        OdeSpec("third_order", 3, _d1_third(1.0), guard=_d1_guard, linear=True),
        _V,
        _U,
        derivation=_D1_RELATION,
        eliminate=("h", "b2"),
        fallback="third_order_derived",
    ),
    ReducedForm(
        OdeSpec(
            "third_order_derived",
            3,
            _d1_third(-3.0),
            guard=_d1_guard,
            variant=FormVariant.DERIVED,
            linear=True,
        ),
        _V,
        _U,
        derivation=_D1_RELATION,
        eliminate=("h", "b2"),
    ),
)


class DarbouxI1Reduction(ReductionCase):
    system_id = SystemId.DI_1

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        b1, b3 = params["b1"], params["b3"]
        _, v, _, p_v = state
        w0 = (p_v**2 + b1 * v**2 + 4.0 * b3 / v**2) / (2.0 * (b1 - 4.0 * b3))
        return {
            "w0": w0,
            "c": 2.0 * w0 * (b1 - 4.0 * b3),
            "h": self.system.energy(params, state),
            SIGN: self.slope_sign(params, state, _V, _U),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_I1_FORMS

    def closures(self) -> tuple[ClosureFormula, ...]:
        return (
            ClosureFormula(
                "p_v",
                _P_V,
                lambda state, p: _d1_radicand(state[1], p) / state[1] ** 2,
                branch=True,
            ),
        )

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("du_dv", _V, _U, _u_rate),
            ReducedRate(
                "dp_v_dv",
                _V,
                _P_V,
                lambda state, p: (4.0 * p["b3"] - p["b1"] * state[1] ** 4)
                / (state[1] ** 3 * state[3]),
            ),
        )

    def presets(self) -> tuple[Preset, ...]:
        return (
            Preset("b2_zero", "b2", lambda p: p["b2"], "b2 = 0"),
            Preset(
                "linearizable",
                "b2",
                lambda p: p["b2"] + p["w0"] * (p["b1"] - 4.0 * p["b3"]) / 2.0,
                "b2 = -w0 (b1 - 4 b3) / 2",
            ),
        )


# Case 2


def _d2_edge(y: Num, params: OdeParams) -> Num:
    """p_v² / 4 as a function of v"""
    a2, a3, w0 = params["a2"], params["a3"], params["w0"]
    return a2 * w0 - a2 * y - a3 * y**2


def _d2_guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
    return min(abs(derivatives[0]), abs(_d2_edge(y, params)))


def _d2_numerator(y: Num, u: Num, params: OdeParams) -> Num:
    return (
        u * params["h"]
        - params["a1"]
        - params["a3"] * u**2
        - params["a2"] * params["w0"]
    )


def _d2_second(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    a1, a2, a3, w0 = params["a1"], params["a2"], params["a3"], params["w0"]
    u, du = derivatives[0], derivatives[1]
    edge = _d2_edge(y, params)
    return (
        edge * du**2 + (a2 + 2.0 * a3 * y) * u * du - a3 * u**2 + a1 + a2 * w0
    ) / (2.0 * u * edge)


def _d2_third(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    a2, a3 = params["a2"], params["a3"]
    return 3.0 * (a2 + 2.0 * a3 * y) * derivatives[2] / (2.0 * _d2_edge(y, params))


_D2_QUADRATURE, _D2_RELATION = quadrature(
    "quadrature", _d2_numerator, lambda y, u, p: _d2_edge(y, p), _V, _U
)

DARBOUX_I2_FORMS = (
    _D2_QUADRATURE,
    ReducedForm(
        OdeSpec("second_order", 2, _d2_second, guard=_d2_guard),
        _V,
        _U,
        derivation=_D2_RELATION,
        eliminate=("h",),
    ),
    ReducedForm(
        OdeSpec("third_order", 3, _d2_third, guard=_d2_guard, linear=True),
        _V,
        _U,
        derivation=_D2_RELATION,
        eliminate=("h", "a1"),
    ),
)


class DarbouxI2Reduction(ReductionCase):
    system_id = SystemId.DI_2

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        a2, a3 = params["a2"], params["a3"]
        _, v, _, p_v = state
        return {
            "w0": (p_v**2 / 4.0 + a2 * v + a3 * v**2) / a2,
            "h": self.system.energy(params, state),
            SIGN: self.slope_sign(params, state, _V, _U),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_I2_FORMS

    def closures(self) -> tuple[ClosureFormula, ...]:
        return (
            ClosureFormula(
                "p_v",
                _P_V,
                lambda state, p: 4.0 * _d2_edge(state[1], p),
                branch=True,
            ),
        )

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("du_dv", _V, _U, _u_rate),
            ReducedRate(
                "dp_v_dv",
                _V,
                _P_V,
                lambda state, p: -2.0 * (p["a2"] + 2.0 * p["a3"] * state[1]) / state[3],
            ),
            ReducedRate(
                "dp_u_dv",
                _V,
                _P_U,
                lambda state, p: (
                    4.0 * p["a1"]
                    + 4.0 * p["a2"] * state[1]
                    - 4.0 * p["a3"] * state[0] ** 2
                    + 4.0 * p["a3"] * state[1] ** 2
                    + state[2] ** 2
                    + state[3] ** 2
                )
                / (2.0 * state[0] * state[3]),
            ),
        )

    def presets(self) -> tuple[Preset, ...]:
        return (
            Preset(
                "linearizable",
                "a1",
                lambda p: p["a1"] + p["a2"] * p["w0"],
                "a1 = -a2 w0",
            ),
        )


# Case 3


def _d3_numerator(y: Num, u: Num, params: OdeParams) -> Num:
    return 4.0 * u * params["h"] - params["w"] ** 2 - 4.0 * params["a"]


def _d3_second(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    a, w = params["a"], params["w"]
    u, du = derivatives[0], derivatives[1]
    return du**2 / (2.0 * u) + (4.0 * a + w**2) / (2.0 * w**2 * u)


def _d3_third(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    return 0.0 * derivatives[2]


_D3_QUADRATURE, _D3_RELATION = quadrature(
    "quadrature", _d3_numerator, lambda y, u, p: p["w"] ** 2, _V, _U
)

DARBOUX_I3_FORMS = (
    _D3_QUADRATURE,
    ReducedForm(
        OdeSpec("second_order", 2, _d3_second, guard=_u_guard),
        _V,
        _U,
        derivation=_D3_RELATION,
        eliminate=("h",),
    ),
    ReducedForm(
        OdeSpec("third_order", 3, _d3_third, guard=_u_guard, linear=True),
        _V,
        _U,
        derivation=_D3_RELATION,
        eliminate=("h", "a"),
    ),
)


class DarbouxI3Reduction(ReductionCase):
    system_id = SystemId.DI_3

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        return {
            "w": state[3],
            "h": self.system.energy(params, state),
            SIGN: self.slope_sign(params, state, _V, _U),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_I3_FORMS

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("du_dv", _V, _U, lambda state, p: state[2] / p["w"]),
            ReducedRate(
                "dp_u_dv",
                _V,
                _P_U,
                lambda state, p: (4.0 * p["a"] + state[2] ** 2 + p["w"] ** 2)
                / (2.0 * state[0] * p["w"]),
            ),
        )

    def presets(self) -> tuple[Preset, ...]:
        return (
            Preset(
                "linearizable",
                "a",
                lambda p: p["a"] + p["w"] ** 2 / 4.0,
                "a = -p_v² / 4",
            ),
        )
