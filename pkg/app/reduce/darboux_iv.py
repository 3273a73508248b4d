"""Reductions of the Darboux IV systems. Cases A and D are written in the
squared variables r_i = w_i², case B keeps w1 against y = exp(w2), case C
uses u = cos(w1) against the same y.
"""

from collections.abc import Sequence

from app.enums import FormVariant
from app.integrate.ode import OdeParams, OdeSpec
from app.integrate.reparametrize import coordinate, squared
from app.jets import functions as fn
from app.jets.jet import Num
from app.systems.enums import SystemId
from app.systems.models import Params

from .base import ReductionCase
from .models import ClosureFormula, Preset, ReducedForm, ReducedRate
from .quadrature import SIGN, quadrature
from .raising import raise_order

_W1, _W3, _W4 = coordinate(0), coordinate(2), coordinate(3)
_R1, _R2, _R3, _R4 = squared(0), squared(1), squared(2), squared(3)


def _exp_w2(state: Sequence[Num]) -> Num:
    return fn.exp(state[1])


def _cos_w1(state: Sequence[Num]) -> Num:
    return fn.cos(state[0])


def _squared_slope(state: Sequence[Num], params: OdeParams) -> Num:
    w1, w2, w3, w4 = state
    return w1 * w3 / (w2 * w4)


def _rational_metric(r1: Num, y: Num, a: float) -> Num:
    return a * (r1 + y) + 2.0 * (r1 - y)


# Case A


def _a_edge(y: Num, params: OdeParams) -> Num:
    """4 y r4 along the reduced motion"""
    return params["b2"] + 4.0 * params["r0"] * y - 4.0 * params["a3"] * y**2


def _a_numerator(y: Num, u: Num, params: OdeParams) -> Num:
    a1, a3, b2, h0, r0 = (params[k] for k in ("a1", "a3", "b2", "h0", "r0"))
    return 4.0 * h0 + b2 - 4.0 * (r0 + a1) * u - 4.0 * a3 * u**2


def _a_third(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    a3, r0 = params["a3"], params["r0"]
    return 6.0 * (2.0 * a3 * y - r0) * derivatives[2] / _a_edge(y, params)


def _a_guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
    return abs(_a_edge(y, params))


def _a_r3(state: Sequence[Num], params: OdeParams) -> Num:
    a, a1, a2, a3, h0 = (params[k] for k in ("a", "a1", "a2", "a3", "h0"))
    r1, y, r4 = state[0] ** 2, state[1] ** 2, state[3] ** 2
    return -(
        4.0 * r1 * r4 * y
        + ((a + 2.0) * r1 + (a - 2.0) * y) * h0
        + 4.0 * a1 * r1 * y
        + 4.0 * a2 * (r1 + y)
        + 4.0 * a3 * r1 * y * (r1 + y)
    ) / (4.0 * r1 * y)


def _a_r4_rate(sign: float):
    def rate(state: Sequence[Num], params: OdeParams) -> Num:
        a, a1, a2, a3 = params["a"], params["a1"], params["a2"], params["a3"]
        r1, y, r3, r4 = (v**2 for v in state)
        momenta = r3 + r4
        bracket = (
            a * a3 * (r1 + y) ** 2
            + a * r1 * momenta
            + a1 * r1 * (a + 2.0)
            + 4.0 * a2
            + 2.0 * a3 * (r1**2 - y**2 + 2.0 * r1 * y)
            + 2.0 * r1 * momenta
        )
        return sign * bracket / (y * _rational_metric(r1, y, a))

    return rate


_A_QUADRATURE, _A_RELATION = quadrature(
    "quadrature", _a_numerator, lambda y, u, p: _a_edge(y, p), _R2, _R1
)

DARBOUX_IVA_FORMS = (
    _A_QUADRATURE,
    ReducedForm(raise_order(_A_RELATION, ("a1",), "second_order"), _R2, _R1),
    ReducedForm(
        OdeSpec("third_order", 3, _a_third, guard=_a_guard, unknown="r1", linear=True),
        _R2,
        _R1,
        derivation=_A_RELATION,
        eliminate=("a1", "h0"),
    ),
)


class DarbouxIVAReduction(ReductionCase):
    system_id = SystemId.DIV_A

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        a, a2, a3 = params["a"], params["a2"], params["a3"]
        h0 = self.system.energy(params, state)
        y, r4 = state[1] ** 2, state[3] ** 2
        return {
            "h0": h0,
            "r0": (4.0 * y * r4 + (a + 2.0) * h0 + 4.0 * a2 + 4.0 * a3 * y**2)
            / (4.0 * y),
            "b2": -(a + 2.0) * h0 - 4.0 * a2,
            SIGN: self.slope_sign(params, state, _R2, _R1),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_IVA_FORMS

    def closures(self) -> tuple[ClosureFormula, ...]:
        return (
            ClosureFormula("r3", _R3, _a_r3),
            ClosureFormula(
                "r4",
                _R4,
                lambda s, p: _a_edge(s[1] ** 2, p) / (4.0 * s[1] ** 2),
            ),
        )

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("dr1_dr2", _R2, _R1, _squared_slope),
            ReducedRate(
                "dr4_dr2", _R2, _R4, _a_r4_rate(1.0), fallback="dr4_dr2_derived"
            ),
            ReducedRate(
                "dr4_dr2_derived",
                _R2,
                _R4,
                _a_r4_rate(-1.0),
                variant=FormVariant.DERIVED,
            ),
            ReducedRate(
                "dr4_dr2_closed",
                _R2,
                _R4,
                lambda s, p: (
                    (p["a"] + 2.0) * p["h0"] + 4.0 * p["a2"] - 4.0 * p["a3"] * s[1] ** 4
                )
                / (4.0 * s[1] ** 4),
            ),
        )


# Case B

# Coefficients of the separation constant in the closed form of w4
_B_SCALE = 3375.0


def _b_potential(y: Num, params: OdeParams) -> Num:
    """b2/sinh²(w2) + b3/cosh²(w2) with y = exp(w2)"""
    b2, b3 = params["b2"], params["b3"]
    return 4.0 * b2 * y**2 / (y**2 - 1.0) ** 2 + 4.0 * b3 * y**2 / (y**2 + 1.0) ** 2


def _b_separation(params: OdeParams) -> Num:
    """w4² + potential, conserved along the motion"""
    b2, b3, w0 = params["b2"], params["b3"], params["w0"]
    return 4.0 * (b3 - b2) - 16.0 * (625.0 * b2 + 81.0 * b3) * w0 / _B_SCALE


def _b_w4_squared(y: Num, params: OdeParams) -> Num:
    return _b_separation(params) - _b_potential(y, params)


def _b_numerator(y: Num, u: Num, params: OdeParams) -> Num:
    b1, h0, a = params["b1"], params["h0"], params["a"]
    return -(b1 + h0 * (2.0 * fn.cos(2.0 * u) + a)) - _b_separation(
        params
    ) * fn.sin(2.0 * u) ** 2


def _b_denominator(y: Num, u: Num, params: OdeParams) -> Num:
    return y**2 * _b_w4_squared(y, params) * fn.sin(2.0 * u) ** 2


def _b_polynomials(y: Num, params: OdeParams) -> tuple[Num, Num, Num]:
    """P1, P2 and Q of the third order equation"""
    b2, b3, w0 = params["b2"], params["b3"], params["w0"]
    lead = (2500.0 * b2 + 324.0 * b3) * w0 + _B_SCALE * (b2 - b3)
    even = b2 + b3
    odd = b2 - b3
    weight = 2500.0 * b2 + 324.0 * b3
    p1 = (
        lead * y**12
        - ((7500.0 * b2 + 972.0 * b3) * w0 + 16875.0 * odd) * y**8
        - 20250.0 * even * y**6
        + ((7500.0 * b2 + 972.0 * b3) * w0 - 10125.0 * odd) * y**4
        - 6750.0 * even * y**2
        - weight * w0
        - _B_SCALE * odd
    )
    p2 = (
        lead * y**16
        - ((10000.0 * b2 + 1296.0 * b3) * w0 - 20250.0 * odd) * y**12
        - 33750.0 * even * y**10
        + ((15000.0 * b2 + 1944.0 * b3) * w0 - 47250.0 * odd) * y**8
        - 67500.0 * even * y**6
        - ((10000.0 * b2 + 1296.0 * b3) * w0 - 47250.0 * odd) * y**4
        - 6750.0 * even * y**2
        + weight * w0
        + _B_SCALE * odd
    )
    q = (
        lead * y**8
        + _B_SCALE * even * y**6
        - (5000.0 * b2 + 648.0 * b3) * w0 * y**4
        + _B_SCALE * even * y**2
        + weight * w0
        + _B_SCALE * odd
    )
    return p1, p2, q


def _b_third(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    u, du, d2u = derivatives
    p1, p2, q = _b_polynomials(y, params)
    cot = fn.cos(2.0 * u) / fn.sin(2.0 * u)
    quartic = y**4 - 1.0
    return (
        -6.0 * cot * du * d2u
        - 3.0 * p1 * d2u / (y * quartic * q)
        + 4.0 * du**3
        - 6.0 * cot * p1 * du**2 / (y * quartic * q)
        + 3.0 * p2 * du / (y**2 * quartic**2 * q)
    )


def _b_guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
    return min(
        abs(fn.sin(2.0 * derivatives[0])),
        abs(y**4 - 1.0),
        abs(_b_w4_squared(y, params)),
    )


def _b_w4_rate(power: int):
    def rate(state: Sequence[Num], params: OdeParams) -> Num:
        b2, b3 = params["b2"], params["b3"]
        y = fn.exp(state[1])
        bracket = (
            (b2 + b3) * y**8
            + 4.0 * (b2 - b3) * y**6
            + 6.0 * (b2 + b3) * y**4
            + 4.0 * (b2 - b3) * y**2
            + b2
            + b3
        )
        return 4.0 * y**power * bracket / (state[3] * (y**4 - 1.0) ** 3)

    return rate


_B_QUADRATURE, _B_RELATION = quadrature(
    "quadrature", _b_numerator, _b_denominator, _exp_w2, _W1
)

DARBOUX_IVB_FORMS = (
    _B_QUADRATURE,
    ReducedForm(raise_order(_B_RELATION, ("h0",), "second_order"), _exp_w2, _W1),
    ReducedForm(
        OdeSpec("third_order", 3, _b_third, guard=_b_guard),
        _exp_w2,
        _W1,
        derivation=_B_RELATION,
        eliminate=("h0", "b1"),
        fallback="third_order_derived",
    ),
    ReducedForm(
        raise_order(_B_RELATION, ("h0", "b1"), "third_order_derived"), _exp_w2, _W1
    ),
)


class DarbouxIVBReduction(ReductionCase):
    system_id = SystemId.DIV_B

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        b2, b3 = params["b2"], params["b3"]
        h0 = self.system.energy(params, state)
        y = fn.exp(state[1])
        separation = state[3] ** 2 + _b_potential(y, params)
        w0 = (
            _B_SCALE
            * (4.0 * (b3 - b2) - separation)
            / (16.0 * (625.0 * b2 + 81.0 * b3))
        )
        # Constants of the linearizing change of variables
        big_b2 = 20250.0 * (b2 + b3)
        shifted = 20250.0 * (b3 - b2)
        scale = 353.0 * big_b2 - 272.0 * shifted
        big_w0 = (4.0 * scale * w0 / _B_SCALE - shifted) / 6.0
        return {
            "h0": h0,
            "w0": w0,
            "B2": big_b2,
            "B3": shifted - 12.0 * big_w0,
            "W0": big_w0,
            SIGN: self.slope_sign(params, state, _exp_w2, _W1),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_IVB_FORMS

    def closures(self) -> tuple[ClosureFormula, ...]:
        return (
            ClosureFormula(
                "w4",
                _W4,
                lambda s, p: _b_w4_squared(fn.exp(s[1]), p),
                branch=True,
            ),
        )

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate(
                "dw1_dy",
                _exp_w2,
                _W1,
                lambda s, p: s[2] / (fn.exp(s[1]) * s[3]),
            ),
            ReducedRate(
                "dw4_dy", _exp_w2, _W4, _b_w4_rate(2), fallback="dw4_dy_derived"
            ),
            ReducedRate(
                "dw4_dy_derived",
                _exp_w2,
                _W4,
                _b_w4_rate(1),
                variant=FormVariant.DERIVED,
            ),
        )


# Case C


def _c_weight(y: Num, params: OdeParams) -> Num:
    """C3 y⁸ + 4 C2 y⁶ + 2 w0 y⁴ + 4 C2 y² + C3"""
    c2, c3, w0 = params["C2"], params["C3"], params["w0"]
    return c3 * y**8 + 4.0 * c2 * y**6 + 2.0 * w0 * y**4 + 4.0 * c2 * y**2 + c3


def _c_numerator(y: Num, u: Num, params: OdeParams) -> Num:
    return 8.0 * params["C3"] * u**4 - params["A"] * u**2 - params["C1"]


def _c_denominator(y: Num, u: Num, params: OdeParams) -> Num:
    return 8.0 * u**2 * y**2 * _c_weight(y, params) / (y**4 - 1.0) ** 2


def _c_third(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    c2, c3, w0 = params["C2"], params["C3"], params["w0"]
    u, du, d2u = derivatives
    weight = _c_weight(y, params)
    quartic = y**4 - 1.0
    first = (
        c3 * y**12
        - (5.0 * c3 + 2.0 * w0) * y**8
        - 24.0 * c2 * y**6
        - (3.0 * c3 + 6.0 * w0) * y**4
        - 8.0 * c2 * y**2
        - c3
    )
    second = (
        c3 * y**16
        - (6.0 * c3 + 2.0 * w0) * y**12
        - 40.0 * c2 * y**10
        - 2.0 * (7.0 * c3 + 10.0 * w0) * y**8
        - 80.0 * c2 * y**6
        - 2.0 * (7.0 * c3 + 5.0 * w0) * y**4
        - 8.0 * c2 * y**2
        + c3
    )
    return (
        -3.0 * du * d2u / u
        - 3.0 * first * (d2u + d2u**2 / u) / (y * quartic * weight)
        + 3.0 * second * du / (y**2 * quartic**2 * weight)
    )


def _c_guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
    return min(
        abs(derivatives[0]), abs(y**4 - 1.0), abs(_c_weight(y, params))
    )


def _c_r4(state: Sequence[Num], params: OdeParams) -> Num:
    """r4 through the integration constant w0"""
    return _c_r4_profile(fn.exp(state[1]), params) + params["w0"]


def _c_r4_profile(y: Num, params: OdeParams) -> Num:
    a, c2, c3, h0 = params["a"], params["c2"], params["c3"], params["h0"]
    return (
        4.0 * c2 * ((y**2 + 1.0) ** 2 - y**2) / (y**2 + 1.0) ** 2
        + 4.0 * c3 * (y**4 - y**2 + 1.0) / (y**2 - 1.0) ** 2
        - 2.0 * (a + 2.0) * h0 * (y**8 + 1.0) / (y**4 - 1.0) ** 2
    )


def _c_r3(state: Sequence[Num], params: OdeParams) -> Num:
    a, c1, c2, c3, h0 = (params[k] for k in ("a", "c1", "c2", "c3", "h0"))
    r1, y = fn.cos(state[0]), fn.exp(state[1])
    return (
        -_c_r4(state, params)
        - c1 / r1**2
        - 4.0 * y**2 * c2 / (y**2 + 1.0) ** 2
        + (4.0 * r1**2 * y**2 + y**4 - 6.0 * y**2 + 1.0)
        * c3
        / ((y**2 - 1.0) ** 2 * (r1**2 - 1.0))
        + (a - 2.0) * h0 / (4.0 * r1**2 * (r1**2 - 1.0))
        - 4.0 * (a + 2.0) * h0 * y**4 / (y**4 - 1.0) ** 2
    )


def _c_r4_rate(state: Sequence[Num], params: OdeParams) -> Num:
    a, c2, c3, h0 = params["a"], params["c2"], params["c3"], params["h0"]
    y = fn.exp(state[1])
    return (
        8.0
        * y
        * (
            (y - 1.0) ** 4 * (y + 1.0) ** 4 * c2
            - (y**2 + 1.0) ** 4 * c3
            + 2.0 * h0 * y**2 * (y**4 + 1.0) * (a + 2.0)
        )
        / (y**4 - 1.0) ** 3
    )


_C_QUADRATURE, _C_RELATION = quadrature(
    "quadrature", _c_numerator, _c_denominator, _exp_w2, _cos_w1
)

DARBOUX_IVC_FORMS = (
    _C_QUADRATURE,
    ReducedForm(raise_order(_C_RELATION, ("A",), "second_order"), _exp_w2, _cos_w1),
    ReducedForm(
        OdeSpec("third_order", 3, _c_third, guard=_c_guard),
        _exp_w2,
        _cos_w1,
        derivation=_C_RELATION,
        eliminate=("A", "C1"),
        fallback="third_order_derived",
    ),
    ReducedForm(
        raise_order(_C_RELATION, ("A", "C1"), "third_order_derived"),
        _exp_w2,
        _cos_w1,
    ),
)


class DarbouxIVCReduction(ReductionCase):
    system_id = SystemId.DIV_C

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        a, c1, c2, c3 = params["a"], params["c1"], params["c2"], params["c3"]
        h0 = self.system.energy(params, state)
        y = fn.exp(state[1])
        w0 = state[3] ** 2 - _c_r4_profile(y, {**params, "h0": h0})
        big_c2 = c2 - c3
        big_c3 = 4.0 * h0 - w0 - 4.0 * big_c2 + 2.0 * a * h0 - 8.0 * c3
        big_c1 = 4.0 * h0 - 2.0 * a * h0 - 8.0 * c1
        return {
            "h0": h0,
            "w0": w0,
            "C1": big_c1,
            "C2": big_c2,
            "C3": big_c3,
            "A": 4.0 * big_c2 + 9.0 * big_c3 + w0 - big_c1 - 4.0 * a * h0,
            SIGN: self.slope_sign(params, state, _exp_w2, _cos_w1),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_IVC_FORMS

    def closures(self) -> tuple[ClosureFormula, ...]:
        return (
            ClosureFormula("r3", _R3, _c_r3),
            ClosureFormula("r4", _R4, _c_r4),
        )

    def rates(self) -> tuple[ReducedRate, ...]:
        return (ReducedRate("dr4_dy", _exp_w2, _R4, _c_r4_rate),)

    def presets(self) -> tuple[Preset, ...]:
        return (Preset("linearizable", "c1", lambda p: p["C1"], "C1 = 0"),)


# Case D


def _d_edge(y: Num, params: OdeParams) -> Num:
    return params["r0"] * y - params["D"]


def _d_linear(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    r0 = params["r0"]
    return -r0 * (derivatives[1] + 1.0) / (2.0 * _d_edge(y, params))


def _d_r4_rate(sign: float):
    def rate(state: Sequence[Num], params: OdeParams) -> Num:
        a, d = params["a"], params["d"]
        r1, y, r3, r4 = (v**2 for v in state)
        momenta = r3 + r4
        return (
            sign
            * (a * r1 * momenta + 4.0 * d + 2.0 * r1 * momenta)
            / (y * _rational_metric(r1, y, a))
        )

    return rate


_D_QUADRATURE, _D_RELATION = quadrature(
    "quadrature",
    lambda y, u, p: p["h0"] - p["D"] - p["r0"] * u,
    lambda y, u, p: _d_edge(y, p),
    _R2,
    _R1,
)

DARBOUX_IVD_FORMS = (
    _D_QUADRATURE,
    ReducedForm(
        OdeSpec(
            "linear",
            2,
            _d_linear,
            guard=lambda y, d, p: abs(_d_edge(y, p)),
            unknown="r1",
            linear=True,
        ),
        _R2,
        _R1,
        derivation=_D_RELATION,
        eliminate=("h0",),
    ),
)


class DarbouxIVDReduction(ReductionCase):
    system_id = SystemId.DIV_D

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        a, d = params["a"], params["d"]
        h0 = self.system.energy(params, state)
        y, r4 = state[1] ** 2, state[3] ** 2
        return {
            "h0": h0,
            "r0": (4.0 * y * r4 + (a + 2.0) * h0 + 4.0 * d) / (4.0 * y),
            "D": d + (a + 2.0) * h0 / 4.0,
            SIGN: self.slope_sign(params, state, _R2, _R1),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_IVD_FORMS

    def closures(self) -> tuple[ClosureFormula, ...]:
        def r3(s: Sequence[Num], p: OdeParams) -> Num:
            a, d, h0 = p["a"], p["d"], p["h0"]
            r1, y, r4 = s[0] ** 2, s[1] ** 2, s[3] ** 2
            return -(
                4.0 * r1 * r4 * y
                + ((a + 2.0) * r1 + (a - 2.0) * y) * h0
                + 4.0 * d * (r1 + y)
            ) / (4.0 * r1 * y)

        return (
            ClosureFormula("r3", _R3, r3),
            ClosureFormula(
                "r4",
                _R4,
                lambda s, p: p["r0"] - ((p["a"] + 2.0) * p["h0"] + 4.0 * p["d"])
                / (4.0 * s[1] ** 2),
            ),
        )

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("dr1_dr2", _R2, _R1, _squared_slope),
            ReducedRate(
                "dr4_dr2", _R2, _R4, _d_r4_rate(1.0), fallback="dr4_dr2_derived"
            ),
            ReducedRate(
                "dr4_dr2_derived",
                _R2,
                _R4,
                _d_r4_rate(-1.0),
                variant=FormVariant.DERIVED,
            ),
        )
