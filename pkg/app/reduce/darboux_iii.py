"""Reductions of the Darboux III systems to the coordinate w2. Cases A, D and
E keep w1 as dependent variable, case B works with the squares r1 = w1² and
w2², case C with -w1 so that both coordinates enter the same quartic.
"""

from collections.abc import Sequence

from app.enums import FormVariant
from app.integrate.ode import OdeParams, OdeSpec
from app.integrate.reparametrize import coordinate, squared
from app.jets.jet import Num
from app.systems.enums import SystemId
from app.systems.models import Params

from .base import ReductionCase
from .models import ClosureFormula, Preset, ReducedForm, ReducedRate, Relation
from .quadrature import SIGN, quadrature
from .raising import raise_order, relation_of

_W1, _W2, _W3, _W4 = coordinate(0), coordinate(1), coordinate(2), coordinate(3)


def _energy_metric(state: Sequence[Num]) -> Num:
    return state[0] ** 2 + state[1] ** 2 + 4.0


def _slope_ratio(state: Sequence[Num], params: OdeParams) -> Num:
    return state[2] / state[3]


def _light_cone_slope(state: Sequence[Num], params: OdeParams) -> Num:
    w1, w2, w3, w4 = state
    return -(w1**2) * w3 / (w2**2 * w4)


# Case A


def _a_edge(y: Num, params: OdeParams) -> Num:
    """w4² along the reduced motion"""
    return params["a2"] * (params["w0"] - y) + params["h0"] * y**2


def _a_numerator(y: Num, u: Num, params: OdeParams) -> Num:
    a1, a2, a3, h0, w0 = (params[k] for k in ("a1", "a2", "a3", "h0", "w0"))
    return h0 * (u**2 + 4.0) - a1 * u - a2 * w0 - a3


def _a_linear_displayed(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    a1, a2, h0, w0 = params["a1"], params["a2"], params["h0"], params["w0"]
    u, du = derivatives[0], derivatives[1]
    return -((a2 - 2.0 * h0 * y) * du + 2.0 * h0 * u - w0 - a1) / (
        2.0 * _a_edge(y, params)
    )


def _a_linear(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    a1, a2, h0 = params["a1"], params["a2"], params["h0"]
    u, du = derivatives[0], derivatives[1]
    return -((2.0 * h0 * y - a2) * du - 2.0 * h0 * u + a1) / (
        2.0 * _a_edge(y, params)
    )


def _a_guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
    return abs(_a_edge(y, params))


def _a_w3_rate(state: Sequence[Num], params: OdeParams) -> Num:
    a1, a2, a3 = params["a1"], params["a2"], params["a3"]
    w1, y, w3, w4 = state
    return (
        2.0 * a2 * w1 * y
        + a1 * (w1**2 - y**2 - 4.0)
        + 2.0 * a3 * w1
        + 2.0 * w1 * (w3**2 + w4**2)
    ) / (2.0 * w4 * _energy_metric(state))


def _a_w4_rate_displayed(state: Sequence[Num], params: OdeParams) -> Num:
    a1, a2, a3 = params["a1"], params["a2"], params["a3"]
    w1, y, w3, w4 = state
    return (
        2.0 * a1 * w1 * y
        - a2 * (w1**2 - y**2 - 4.0)
        + 2.0 * a3 * y
        + 2.0 * y * (w3**2 + w4**2)
    ) / (2.0 * w4 * _energy_metric(state))


def _a_w4_rate(state: Sequence[Num], params: OdeParams) -> Num:
    """Mirror of the w3 rate under w1 <-> w2, a1 <-> a2"""
    a1, a2, a3 = params["a1"], params["a2"], params["a3"]
    w1, y, w3, w4 = state
    return (
        2.0 * a1 * w1 * y
        + a2 * (y**2 - w1**2 - 4.0)
        + 2.0 * a3 * y
        + 2.0 * y * (w3**2 + w4**2)
    ) / (2.0 * w4 * _energy_metric(state))


_A_QUADRATURE, _A_RELATION = quadrature(
    "quadrature", _a_numerator, lambda y, u, p: _a_edge(y, p), _W2, _W1
)

DARBOUX_IIIA_FORMS = (
    _A_QUADRATURE,
    ReducedForm(
        OdeSpec("linear", 2, _a_linear_displayed, guard=_a_guard, linear=True),
        _W2,
        _W1,
        derivation=_A_RELATION,
        eliminate=("a3",),
        fallback="linear_derived",
    ),
    ReducedForm(
        OdeSpec(
            "linear_derived",
            2,
            _a_linear,
            guard=_a_guard,
            variant=FormVariant.DERIVED,
            linear=True,
        ),
        _W2,
        _W1,
        derivation=_A_RELATION,
        eliminate=("a3",),
    ),
)


class DarbouxIIIAReduction(ReductionCase):
    system_id = SystemId.DIII_A

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        h0 = self.system.energy(params, state)
        y, w4 = state[1], state[3]
        return {
            "h0": h0,
            "w0": (w4**2 + params["a2"] * y - h0 * y**2) / params["a2"],
            SIGN: self.slope_sign(params, state, _W2, _W1),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_IIIA_FORMS

    def closures(self) -> tuple[ClosureFormula, ...]:
        return (
            ClosureFormula(
                "w3",
                _W3,
                lambda s, p: p["h0"] * (s[0] ** 2 + s[1] ** 2)
                + 4.0 * p["h0"]
                - p["a1"] * s[0]
                - p["a2"] * s[1]
                - p["a3"]
                - s[3] ** 2,
                branch=True,
            ),
            ClosureFormula("w4", _W4, lambda s, p: _a_edge(s[1], p), branch=True),
        )

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("dw1_dw2", _W2, _W1, _slope_ratio),
            ReducedRate("dw3_dw2", _W2, _W3, _a_w3_rate),
            ReducedRate(
                "dw4_dw2",
                _W2,
                _W4,
                _a_w4_rate_displayed,
                fallback="dw4_dw2_derived",
            ),
            ReducedRate(
                "dw4_dw2_derived",
                _W2,
                _W4,
                _a_w4_rate,
                variant=FormVariant.DERIVED,
            ),
            ReducedRate(
                "dw4_dw2_closed",
                _W2,
                _W4,
                lambda s, p: (2.0 * p["h0"] * s[1] - p["a2"]) / (2.0 * s[3]),
            ),
        )


# Case B

_R1, _R2 = squared(0), squared(1)


def _b_numerator(y: Num, u: Num, params: OdeParams) -> Num:
    b1, b2, b3, h0, w0 = (params[k] for k in ("b1", "b2", "b3", "h0", "w0"))
    return b1 + (b3 - b2 * w0) * u - h0 * u * (u + w0 + 4.0)


def _b_denominator(y: Num, params: OdeParams) -> Num:
    b2, h0, w0 = params["b2"], params["h0"], params["w0"]
    return b2 * (1.0 + w0 * y) + h0 * y * (w0 - y)


def _b_linear(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    b2, b3, h0, w0 = params["b2"], params["b3"], params["h0"], params["w0"]
    r1, dr1 = derivatives[0], derivatives[1]
    return -(
        (b2 * w0 + h0 * w0 - 2.0 * h0 * y) * dr1
        + 2.0 * h0 * r1
        + b2 * w0
        - b3
        + h0 * w0
        + 4.0 * h0
    ) / (2.0 * _b_denominator(y, params))


def _b_w3_rate(state: Sequence[Num], params: OdeParams) -> Num:
    b1, b2, b3 = params["b1"], params["b2"], params["b3"]
    w1, w2, w3, w4 = state
    r1, y = w1**2, w2**2
    kinetic = w3**2 + w4**2
    return (
        (b2 + b3 * y + kinetic * y) * r1**2 + (y + 4.0 + 2.0 * r1) * b1 * y
    ) / (2.0 * y * w1**3 * w2 * (r1 + y + 4.0) * w4)


def _b_w4_rate(state: Sequence[Num], params: OdeParams) -> Num:
    b1, b2, b3 = params["b1"], params["b2"], params["b3"]
    w1, w2, w3, w4 = state
    r1, y = w1**2, w2**2
    kinetic = w3**2 + w4**2
    return (
        (b1 + b3 * r1 + kinetic * r1) * y**2 + (2.0 * (y + 2.0) + r1) * b2 * r1
    ) / (2.0 * y**2 * r1 * (r1 + y + 4.0) * w4)


_B_QUADRATURE, _B_RELATION = quadrature(
    "quadrature", _b_numerator, lambda y, u, p: _b_denominator(y, p), _R2, _R1
)

DARBOUX_IIIB_FORMS = (
    _B_QUADRATURE,
    ReducedForm(
        OdeSpec(
            "linear",
            2,
            _b_linear,
            guard=lambda y, d, p: abs(_b_denominator(y, p)),
            unknown="r1",
            linear=True,
        ),
        _R2,
        _R1,
        derivation=_B_RELATION,
        eliminate=("b1",),
    ),
)


class DarbouxIIIBReduction(ReductionCase):
    system_id = SystemId.DIII_B

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        b2 = params["b2"]
        h0 = self.system.energy(params, state)
        y, w4 = state[1] ** 2, state[3]
        return {
            "h0": h0,
            "w0": -(w4**2 + b2 / y - h0 * y) / (h0 + b2),
            SIGN: self.slope_sign(params, state, _R2, _R1),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_IIIB_FORMS

    def closures(self) -> tuple[ClosureFormula, ...]:
        def w3(s: Sequence[Num], p: OdeParams) -> Num:
            r1, y = s[0] ** 2, s[1] ** 2
            return (
                (p["h0"] * (y + 4.0 + r1) - p["b3"] - s[3] ** 2) * y * r1
                - p["b2"] * r1
                - p["b1"] * y
            ) / (y * r1)

        def w4(s: Sequence[Num], p: OdeParams) -> Num:
            y, w0 = s[1] ** 2, p["w0"]
            return (p["h0"] * y * (y - w0) - p["b2"] * (1.0 + w0 * y)) / y

        return (
            ClosureFormula("w3", _W3, w3, branch=True),
            ClosureFormula("w4", _W4, w4, branch=True),
        )

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate(
                "dr1_dr2", _R2, _R1, lambda s, p: s[0] * s[2] / (s[1] * s[3])
            ),
            ReducedRate("dw3_dr2", _R2, _W3, _b_w3_rate),
            ReducedRate("dw4_dr2", _R2, _W4, _b_w4_rate),
            ReducedRate(
                "dw4_dr2_closed",
                _R2,
                _W4,
                lambda s, p: (p["b2"] + p["h0"] * s[1] ** 4)
                / (2.0 * s[3] * s[1] ** 4),
            ),
        )


# Case C


def _negated_w1(state: Sequence[Num]) -> Num:
    return -state[0]


def _c_quartic(x: Num, params: OdeParams) -> Num:
    """Quartic shared by both separated coordinates, normalized by C1"""
    return (
        params["H0"] * x**4
        + x**3
        + params["W0"] * x**2
        + params["C2"] * x
        + params["C3"]
    )


def _c_fourth(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    c2 = params["C2"]
    u, du, d2u, d3u = derivatives
    alpha1 = (
        9.0
        * (u - y)
        * (c2 * (3.0 * u + 5.0 * y) - 2.0 * u**2 * y - 5.0 * u * y**2 - y**3)
    )
    alpha2 = (
        c2 * (36.0 * u + 54.0 * y + 36.0 * u * du - 54.0 * du**2 * y)
        - 36.0 * u**2 * du**2 * y
        + 72.0 * u * du**2 * y**2
        + 18.0 * du**2 * y**3
        + 18.0 * u**3 * du
        - 72.0 * u**2 * du * y
        - 18.0 * u * du * y**2
        + 36.0 * du * y**3
        - 18.0 * u**2 * y
        - 72.0 * u * y**2
    )
    alpha3 = (
        3.0
        * (u - y)
        * (
            c2 * (13.0 * u * du + 15.0 * du * y + 5.0 * u + 7.0 * y)
            - 12.0 * u**2 * du * y
            - 15.0 * u * du * y**2
            - du * y**3
            + u**3
            - 5.0 * u**2 * y
            - 8.0 * u * y**2
        )
    )
    alpha4 = (
        18.0
        * du
        * (du + 1.0)
        * (
            c2 * (du**2 - 1.0)
            - 4.0 * u * du**2 * y
            + du**2 * y**2
            + 3.0 * u**2 * du
            - 3.0 * du * y**2
            - u**2
            + 4.0 * u * y
        )
    )
    alpha5 = 5.0 * (u + y) * (u - y) ** 2 * (c2 - u * y)
    alpha7 = (
        du
        * (du + 1.0)
        * (
            c2 * (3.0 * u * du + 5.0 * du * y - 5.0 * u - 3.0 * y)
            - 2.0 * u**2 * du * y
            - 5.0 * u * du * y**2
            - du * y**3
            + u**3
            + 5.0 * u**2 * y
            + 2.0 * u * y**2
        )
    )
    alpha8 = 36.0 * du**2 * (du - 1.0) * (du + 1.0) ** 2 * (u - du * y)
    numerator = (
        alpha1 * d2u**3
        + alpha2 * d2u**2
        - alpha3 * d2u * d3u
        - alpha4 * d2u
        + alpha5 * d3u**2
        - 6.0 * alpha7 * d3u
        + alpha8
    )
    return -numerator / (
        3.0
        * (c2 - u * y)
        * (u * d2u - 2.0 * du**2 - 2.0 * du - d2u * y)
        * (u**2 - y**2)
    )


def _c_fourth_guard(
    y: float, derivatives: Sequence[float], params: OdeParams
) -> float:
    u, du, d2u = derivatives[0], derivatives[1], derivatives[2]
    return min(
        abs(params["C2"] - u * y),
        abs(u * d2u - 2.0 * du**2 - 2.0 * du - d2u * y),
        abs(u**2 - y**2),
    )


def _c_w4_rate(sign: float):
    def rate(state: Sequence[Num], params: OdeParams) -> Num:
        c1, c2, c3, h0 = params["c1"], params["c2"], params["c3"], params["h0"]
        y, w4 = state[1], state[3]
        return (
            sign
            * (
                2.0 * w4**2 * y**4
                - c1 * y**3
                + c2 * y
                + 2.0 * c3
                + 2.0 * y**3 * h0 * (1.0 - y)
            )
            / (2.0 * w4 * y**5)
        )

    return rate


def _c_w3(state: Sequence[Num], params: OdeParams) -> Num:
    c1, c2, c3, h0 = params["c1"], params["c2"], params["c3"], params["h0"]
    w1, y, _, w4 = state
    return (
        w1**2 * w4**2 * y**4
        - w1 * y * (w1 + y) * (c1 * w1 * y + c2)
        + c3 * (y**2 - w1**2)
        + h0 * (w1 + y) * (2.0 + w1 - y) * w1**2 * y**2
    ) / (w1**2 * y) ** 2


def _c_w4(state: Sequence[Num], params: OdeParams) -> Num:
    c1, c2, c3, h0, w0 = (params[k] for k in ("c1", "c2", "c3", "h0", "w0"))
    y = state[1]
    return (w0 * y**2 + c1 * y**3 + c2 * y + c3 + h0 * y**3 * (y - 2.0)) / y**4


_C_QUADRATURE, _C_RELATION = quadrature(
    "quadrature",
    lambda y, u, p: _c_quartic(u, p),
    lambda y, u, p: _c_quartic(y, p),
    _W2,
    _negated_w1,
)

_C_CONSTANTS = ("C3", "W0", "H0")


def _c_pair_parts(
    y: Num, derivatives: Sequence[Num], c2: Num
) -> tuple[Num, Num, Num]:
    """Coefficients of H0, W0 and 1 in the second order consequence of the
    quadrature. Q(u) - Q(y) replaces Q(y) (u'² - 1), so C3 drops out.
    """
    u, du, d2u = derivatives[0], derivatives[1], derivatives[2]
    slope = du**2 - 1.0
    quartic = 2.0 * d2u * (u**4 - y**4) + 4.0 * slope * (du * y**3 - u**3)
    quadratic = 2.0 * d2u * (u**2 - y**2) + 2.0 * slope * (du * y - u)
    rest = 2.0 * d2u * (u**3 - y**3 + c2 * (u - y)) + slope * (
        3.0 * (du * y**2 - u**2) + c2 * (du - 1.0)
    )
    return quartic, quadratic, rest


def _c_pair_residual(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    quartic, quadratic, rest = _c_pair_parts(y, derivatives, params["C2"])
    return (rest + params["H0"] * quartic) / quadratic + params["W0"]


def _c_pair_guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
    _, quadratic, _ = _c_pair_parts(y, derivatives, params["C2"])
    return min(abs(quadratic), abs(derivatives[1]))


def _c_slope_guard(
    y: float, derivatives: Sequence[float], params: OdeParams
) -> float:
    return abs(derivatives[1] ** 2 - 1.0)


# Free of C3, affine in W0 and H0
_C_PAIR_RELATION = Relation("pair", 2, _c_pair_residual, guard=_c_pair_guard)

_C_PAIR = ("W0", "H0")


def _c_raised(name: str, count: int) -> ReducedForm:
    return ReducedForm(
        raise_order(
            _C_RELATION, _C_CONSTANTS[:count], name, guard=_c_slope_guard
        ),
        _W2,
        _negated_w1,
    )


DARBOUX_IIIC_FORMS = (
    _C_QUADRATURE,
    _c_raised("second_order", 1),
    _c_raised("third_order", 2),
    ReducedForm(
        OdeSpec("fourth_order", 4, _c_fourth, guard=_c_fourth_guard),
        _W2,
        _negated_w1,
        derivation=_C_PAIR_RELATION,
        eliminate=_C_PAIR,
        fallback="fourth_order_derived",
    ),
    ReducedForm(
        raise_order(_C_PAIR_RELATION, _C_PAIR, "fourth_order_derived"),
        _W2,
        _negated_w1,
    ),
)


class DarbouxIIICReduction(ReductionCase):
    system_id = SystemId.DIII_C

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        c1, c2, c3 = params["c1"], params["c2"], params["c3"]
        h0 = self.system.energy(params, state)
        y, w4 = state[1], state[3]
        w0 = (
            w4**2 * y**4 - c1 * y**3 - c2 * y - c3 - h0 * y**3 * (y - 2.0)
        ) / y**2
        big_c1 = c1 - 2.0 * h0
        return {
            "h0": h0,
            "w0": w0,
            "C1": big_c1,
            "C2": c2 / big_c1,
            "C3": c3 / big_c1,
            "H0": h0 / big_c1,
            "W0": w0 / big_c1,
            SIGN: self.slope_sign(params, state, _W2, _negated_w1),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_IIIC_FORMS

    def closures(self) -> tuple[ClosureFormula, ...]:
        return (
            ClosureFormula("w3", _W3, _c_w3, branch=True),
            ClosureFormula("w4", _W4, _c_w4, branch=True),
        )

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("dw1_dw2", _W2, _W1, _light_cone_slope),
            ReducedRate(
                "dw4_dw2", _W2, _W4, _c_w4_rate(1.0), fallback="dw4_dw2_derived"
            ),
            ReducedRate(
                "dw4_dw2_derived",
                _W2,
                _W4,
                _c_w4_rate(-1.0),
                variant=FormVariant.DERIVED,
            ),
        )


# Case D


def _d_edge(y: Num, params: OdeParams) -> Num:
    """y² w4² / y² along the reduced motion"""
    return params["D3"] * y**2 + params["D2"] * y + params["w0"]


def _d_bracket(y: Num, params: OdeParams) -> Num:
    """(y² D)' / y"""
    d2, d3, w0 = params["D2"], params["D3"], params["w0"]
    return 4.0 * d3 * y**2 + 3.0 * d2 * y + 2.0 * w0


def _d_numerator(y: Num, u: Num, params: OdeParams) -> Num:
    d1, d3, h0, w0 = params["D1"], params["D3"], params["h0"], params["w0"]
    return u**2 * ((2.0 * h0 - d3) * u**2 + d1 * u + w0)


def _d_second(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    d3, h0, w0 = params["D3"], params["h0"], params["w0"]
    u, du = derivatives[0], derivatives[1]
    edge = _d_edge(y, params)
    return (
        3.0 * y**2 * edge * du**2
        - _d_bracket(y, params) * y * u * du
        - (d3 - 2.0 * h0) * u**4
        - w0 * u**2
    ) / (2.0 * y**2 * u * edge)


def _d_third(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    d2, d3 = params["D2"], params["D3"]
    u, du, d2u = derivatives
    edge = _d_edge(y, params)
    bracket = _d_bracket(y, params)
    return (
        -4.0 * y * edge * du**3
        + 2.0 * u * bracket * du**2
        - 2.0 * (2.0 * d3 * y + d2) * u**2 * du
        + (4.0 * y * u * edge * du - bracket * u**2) * d2u
    ) / (2.0 * y * u**2 * edge / 3.0)


def _d_guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
    return min(abs(y), abs(derivatives[0]), abs(_d_edge(y, params)))


_D_QUADRATURE, _D_RELATION = quadrature(
    "quadrature", _d_numerator, lambda y, u, p: y**2 * _d_edge(y, p), _W2, _W1
)

_D_SECOND = ReducedForm(
    OdeSpec("second_order", 2, _d_second, guard=_d_guard),
    _W2,
    _W1,
    derivation=_D_RELATION,
    eliminate=("D1",),
)

DARBOUX_IIID_FORMS = (
    _D_QUADRATURE,
    _D_SECOND,
    ReducedForm(
        OdeSpec("third_order", 3, _d_third, guard=_d_guard),
        _W2,
        _W1,
        derivation=relation_of(_D_SECOND.ode),
        eliminate=("h0",),
    ),
)


class DarbouxIIIDReduction(ReductionCase):
    system_id = SystemId.DIII_D

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        h0 = self.system.energy(params, state)
        d2 = params["d2"] - 2.0 * h0
        d3 = params["d3"] + h0
        y, w4 = state[1], state[3]
        return {
            "h0": h0,
            "D1": 2.0 * h0 - params["d1"],
            "D2": d2,
            "D3": d3,
            "w0": w4**2 * y**2 - d2 * y - d3 * y**2,
            SIGN: self.slope_sign(params, state, _W2, _W1),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_IIID_FORMS

    def closures(self) -> tuple[ClosureFormula, ...]:
        return (
            ClosureFormula(
                "w3",
                _W3,
                lambda s, p: _d_numerator(s[1], s[0], p) / s[0] ** 4,
                branch=True,
            ),
            ClosureFormula(
                "w4", _W4, lambda s, p: _d_edge(s[1], p) / s[1] ** 2, branch=True
            ),
        )

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("dw1_dw2", _W2, _W1, _light_cone_slope),
            ReducedRate(
                "dw4_dw2",
                _W2,
                _W4,
                lambda s, p: (
                    p["D2"] + 2.0 * p["D3"] * s[1] - 2.0 * s[3] ** 2 * s[1]
                )
                / (2.0 * s[3] * s[1] ** 2),
            ),
        )

    def presets(self) -> tuple[Preset, ...]:
        return (
            Preset("linearizable", "d3", lambda p: p["d3"] - p["h0"], "d3 = h0"),
        )


# Case E


def _e_edge(y: Num, params: OdeParams) -> Num:
    return y**2 - 2.0 * params["w0"]


def _e_linear(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    u, du = derivatives[0], derivatives[1]
    return (y * du - u) / (2.0 * params["w0"] - y**2)


_E_QUADRATURE, _E_RELATION = quadrature(
    "quadrature",
    lambda y, u, p: u**2 + p["kappa"],
    lambda y, u, p: _e_edge(y, p),
    _W2,
    _W1,
)

DARBOUX_IIIE_FORMS = (
    _E_QUADRATURE,
    ReducedForm(
        OdeSpec(
            "linear",
            2,
            _e_linear,
            guard=lambda y, d, p: abs(_e_edge(y, p)),
            linear=True,
        ),
        _W2,
        _W1,
        derivation=_E_RELATION,
        eliminate=("kappa",),
    ),
)


class DarbouxIIIEReduction(ReductionCase):
    system_id = SystemId.DIII_E

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        h0 = self.system.energy(params, state)
        y, w4 = state[1], state[3]
        w0 = (h0 * y**2 - w4**2) / (2.0 * h0)
        return {
            "h0": h0,
            "w0": w0,
            "kappa": 4.0 + 2.0 * w0 - params["c"] / h0,
            SIGN: self.slope_sign(params, state, _W2, _W1),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_IIIE_FORMS

    def closures(self) -> tuple[ClosureFormula, ...]:
        return (
            ClosureFormula(
                "w3",
                _W3,
                lambda s, p: p["h0"] * (s[0] ** 2 + s[1] ** 2)
                + 4.0 * p["h0"]
                - p["c"]
                - s[3] ** 2,
                branch=True,
            ),
            ClosureFormula(
                "w4", _W4, lambda s, p: p["h0"] * _e_edge(s[1], p), branch=True
            ),
        )

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("dw1_dw2", _W2, _W1, _slope_ratio),
            ReducedRate(
                "dw4_dw2", _W2, _W4, lambda s, p: p["h0"] * s[1] / s[3]
            ),
        )
