"""Reductions of the Darboux II systems. Cases A and B are reduced to w1, with
the momentum w3 (and w2 for case A) as dependent variables, case B also to w2
with w1 as dependent variable. Case C is written in the squared coordinates
r_i = w_i², case D reduces to w2 with the cyclic momentum w4 fixed.
"""

from collections.abc import Sequence

from app.enums import FormVariant
from app.integrate.ode import OdeParams, OdeSpec
from app.integrate.reparametrize import coordinate, squared
from app.jets.jet import Num
from app.systems.enums import SystemId
from app.systems.models import Params

from .base import ReductionCase
from .models import ClosureFormula, Preset, ReducedForm, ReducedRate
from .quadrature import SIGN, quadrature
from .raising import relation_of

_W1, _W2, _W3, _W4 = coordinate(0), coordinate(1), coordinate(2), coordinate(3)


def _momentum_guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
    return min(abs(y), abs(derivatives[0]))


def _w3_second(scale: float):
    """w3'' for the potential scale a1 (case A) or 4 b1 (case B)"""

    def rhs(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
        w3, dw3 = derivatives[0], derivatives[1]
        return -(dw3 * (y * dw3 + 3.0 * w3) + params[scale] * y) / (y * w3)

    return rhs


# Case A


def _a_w3_first(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    a1, a3, k = params["a1"], params["a3"], params["K"]
    w3 = derivatives[0]
    return -(4.0 * w3**2 + 4.0 * k + a1 * y**4 + 2.0 * a1 * y**2 - 4.0 * a3) / (
        4.0 * y * w3 * (y**2 + 1.0)
    )


def _a_w2_denominator(y: Num, params: OdeParams) -> Num:
    a1, c1, c2 = params["a1"], params["C1"], params["C2"]
    return a1 * y**5 - 8.0 * c1 * y - 8.0 * c2 * y**3


def _a_w2_linear(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    a1, a2, c1 = params["a1"], params["a2"], params["C1"]
    w2, dw2 = derivatives[0], derivatives[1]
    return (
        -(a1 * y**4 + 8.0 * c1) * dw2 + 4.0 * a1 * y**3 * w2 + 2.0 * a2 * y**3
    ) / _a_w2_denominator(y, params)


def _a_w3_rate(quarter: float):
    def rate(state: Sequence[Num], params: OdeParams) -> Num:
        a1, a2, a3 = params["a1"], params["a2"], params["a3"]
        w1, w2, w3, w4 = state
        k = w4**2 + a1 * w2**2 + a2 * w2
        return -(4.0 * w3**2 + 4.0 * k + a1 * w1**4 + 2.0 * a1 * w1**2 - 4.0 * a3) / (
            quarter * w1 * w3 * (w1**2 + 1.0)
        )

    return rate


def _a_w4_rate(half: float):
    def rate(state: Sequence[Num], params: OdeParams) -> Num:
        return -(2.0 * params["a1"] * state[1] + params["a2"]) / (half * state[2])

    return rate


_A_W3_FIRST = ReducedForm(
    OdeSpec(
        "w3_first_order",
        1,
        _a_w3_first,
        guard=_momentum_guard,
        variant=FormVariant.DERIVED,
        unknown="w3",
    ),
    _W1,
    _W3,
)

DARBOUX_IIA_FORMS = (
    _A_W3_FIRST,
    ReducedForm(
        OdeSpec(
            "w3_second_order", 2, _w3_second("a1"), guard=_momentum_guard, unknown="w3"
        ),
        _W1,
        _W3,
        derivation=relation_of(_A_W3_FIRST.ode),
        eliminate=("a3",),
    ),
    ReducedForm(
        OdeSpec(
            "w2_linear",
            2,
            _a_w2_linear,
            guard=lambda y, d, p: abs(_a_w2_denominator(y, p)),
            unknown="w2",
            linear=True,
        ),
        _W1,
        _W2,
    ),
)


class DarbouxIIAReduction(ReductionCase):
    system_id = SystemId.DII_A

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        a1, a2, a3 = params["a1"], params["a2"], params["a3"]
        _, w2, _, w4 = state
        h = self.system.energy(params, state)
        k = w4**2 + a1 * w2**2 + a2 * w2
        return {"h": h, "K": k, "C1": (h - a3) / 2.0, "C2": (h - k) / 2.0}

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_IIA_FORMS

    def closures(self) -> tuple[ClosureFormula, ...]:
        return (
            ClosureFormula(
                "w3",
                _W3,
                lambda s, p: (
                    8.0 * p["C2"] * s[0] ** 2 + 8.0 * p["C1"] - p["a1"] * s[0] ** 4
                )
                / (4.0 * s[0] ** 2),
                branch=True,
            ),
        )

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("dw2_dw1", _W1, _W2, lambda s, p: s[3] / s[2]),
            ReducedRate(
                "dw3_dw1", _W1, _W3, _a_w3_rate(2.0), fallback="dw3_dw1_derived"
            ),
            ReducedRate(
                "dw3_dw1_derived",
                _W1,
                _W3,
                _a_w3_rate(4.0),
                variant=FormVariant.DERIVED,
            ),
            ReducedRate(
                "dw4_dw1", _W1, _W4, _a_w4_rate(1.0), fallback="dw4_dw1_derived"
            ),
            ReducedRate(
                "dw4_dw1_derived",
                _W1,
                _W4,
                _a_w4_rate(2.0),
                variant=FormVariant.DERIVED,
            ),
        )


# Case B


def _b_w3_first(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    b1, b2, k = params["b1"], params["b2"], params["K"]
    w3 = derivatives[0]
    return -(w3**2 + k + b1 * y**4 + 2.0 * b1 * y**2 - b2) / (
        y * w3 * (y**2 + 1.0)
    )


def _b_edge(y: Num, params: OdeParams) -> Num:
    """y² w4² along the reduced motion"""
    b1, b3, w0 = params["b1"], params["b3"], params["w0"]
    return 2.0 * (b1 - b3) * w0 * y**2 - b1 * y**4 - b3


def _b_alt_numerator(y: Num, u: Num, params: OdeParams) -> Num:
    b1, b2, b3, h, w0 = (
        params["b1"],
        params["b2"],
        params["b3"],
        params["h"],
        params["w0"],
    )
    return y**2 * (h - 2.0 * (b1 - b3) * w0 + (h - b2) / u**2 - b1 * u**2)


def _b_alt_guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
    return min(abs(y), abs(derivatives[0]), abs(_b_edge(y, params)))


def _b_alt_second(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    b1, b2, b3, w0 = params["b1"], params["b2"], params["b3"], params["w0"]
    u, du = derivatives[0], derivatives[1]
    edge = _b_edge(y, params)
    return (
        -(du**2) / (u * (u**2 + 1.0))
        + (b1 * y**4 - b3) * du / (y * edge)
        - y**2
        * (b1 * (u**4 + 2.0 * u**2 + 2.0 * w0) - b2 - 2.0 * b3 * w0)
        / (u * (u**2 + 1.0) * edge)
    )


def _b_alt_third(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    b1, b3 = params["b1"], params["b3"]
    u, du, d2u = derivatives
    return -3.0 * du * d2u / u + 3.0 * (b1 * y**4 - b3) / _b_edge(y, params) * (
        d2u / y + du**2 / (y * u) - du / y**2
    )


def _b_w3_rate(state: Sequence[Num], params: OdeParams) -> Num:
    b1, b2, b3 = params["b1"], params["b2"], params["b3"]
    w1, w2, w3, w4 = state
    return -(
        w2**2 * w3**2
        + w2**2 * w4**2
        + b1 * w1**4 * w2**2
        + 2.0 * b1 * w1**2 * w2**2
        + b1 * w2**4
        - b2 * w2**2
        + b3
    ) / (w2**2 * w3 * w1 * (w1**2 + 1.0))


def _b_alt_w3_rate(state: Sequence[Num], params: OdeParams) -> Num:
    b1, b2, b3 = params["b1"], params["b2"], params["b3"]
    w1, w2, w3, w4 = state
    return -(
        w2**2 * w3**2
        + w2**2 * w4**2
        + b1 * w1**4 * w2**2
        + 2.0 * b1 * w1**2 * w2**2
        + b1 * w2**4
        - b2 * w2**2
        + b3
    ) / (w1 * w4 * w2**2 * (w1**2 + 1.0))


_B_W3_FIRST = ReducedForm(
    OdeSpec(
        "w3_first_order",
        1,
        _b_w3_first,
        guard=_momentum_guard,
        variant=FormVariant.DERIVED,
        unknown="w3",
    ),
    _W1,
    _W3,
)

_B_ALT_QUADRATURE, _B_ALT_RELATION = quadrature(
    "alt_quadrature",
    _b_alt_numerator,
    lambda y, u, p: _b_edge(y, p),
    _W2,
    _W1,
)

DARBOUX_IIB_FORMS = (
    _B_W3_FIRST,
    ReducedForm(
        OdeSpec(
            "w3_second_order",
            2,
            _w3_second("four_b1"),
            guard=_momentum_guard,
            unknown="w3",
        ),
        _W1,
        _W3,
        derivation=relation_of(_B_W3_FIRST.ode),
        eliminate=("b2",),
    ),
    _B_ALT_QUADRATURE,
    ReducedForm(
        OdeSpec("alt_second_order", 2, _b_alt_second, guard=_b_alt_guard),
        _W2,
        _W1,
        derivation=_B_ALT_RELATION,
        eliminate=("h",),
    ),
    ReducedForm(
        OdeSpec("alt_third_order", 3, _b_alt_third, guard=_b_alt_guard),
        _W2,
        _W1,
        derivation=_B_ALT_RELATION,
        eliminate=("h", "b2"),
    ),
)


class DarbouxIIBReduction(ReductionCase):
    system_id = SystemId.DII_B

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        b1, b2, b3 = params["b1"], params["b2"], params["b3"]
        _, w2, _, w4 = state
        h = self.system.energy(params, state)
        k = w4**2 + b1 * w2**2 + b3 / w2**2
        return {
            "h": h,
            "K": k,
            "C1": (h - b2) / 2.0,
            "C2": (h - k) / 2.0,
            "w0": k / (2.0 * (b1 - b3)),
            "four_b1": 4.0 * b1,
            SIGN: self.slope_sign(params, state, _W2, _W1),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_IIB_FORMS

    def closures(self) -> tuple[ClosureFormula, ...]:
        return (
            ClosureFormula(
                "w3",
                _W3,
                lambda s, p: (
                    8.0 * p["C2"] * s[0] ** 2
                    + 8.0 * p["C1"]
                    - 4.0 * p["b1"] * s[0] ** 4
                )
                / (4.0 * s[0] ** 2),
                branch=True,
            ),
            ClosureFormula(
                "w4", _W4, lambda s, p: _b_edge(s[1], p) / s[1] ** 2, branch=True
            ),
        )

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("dw2_dw1", _W1, _W2, lambda s, p: s[3] / s[2]),
            ReducedRate("dw3_dw1", _W1, _W3, _b_w3_rate),
            ReducedRate(
                "dw4_dw1",
                _W1,
                _W4,
                lambda s, p: -(p["b1"] * s[1] ** 4 - p["b3"]) / (s[1] ** 3 * s[2]),
            ),
            ReducedRate("dw1_dw2", _W2, _W1, lambda s, p: s[2] / s[3]),
            ReducedRate("dw3_dw2", _W2, _W3, _b_alt_w3_rate),
            ReducedRate(
                "dw4_dw2",
                _W2,
                _W4,
                lambda s, p: -(p["b1"] * s[1] ** 4 - p["b3"]) / (s[1] ** 3 * s[3]),
            ),
        )

    def presets(self) -> tuple[Preset, ...]:
        return (
            Preset(
                "linearizable",
                "b2",
                lambda p: p["b2"] - 2.0 * (p["b1"] - p["b3"]) * p["w0"] + p["b1"],
                "b2 = 2 (b1 - b3) w0 - b1",
            ),
        )


# Case C


_R1, _R2, _R3, _R4 = squared(0), squared(1), squared(2), squared(3)


def _c_numerator(y: Num, u: Num, params: OdeParams) -> Num:
    a1, a2, h0, w0 = params["a1"], params["a2"], params["h0"], params["w0"]
    return h0 * u**2 - (a1 + w0) * u - a2 + h0


def _c_denominator(y: Num, u: Num, params: OdeParams) -> Num:
    a3, h0, w0 = params["a3"], params["h0"], params["w0"]
    return h0 * y**2 + w0 * y - a3 + h0


def _c_linear(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    a1, a3, h0, w0 = params["a1"], params["a3"], params["h0"], params["w0"]
    r1, dr1 = derivatives[0], derivatives[1]
    return ((w0 + 2.0 * h0 * y) * dr1 - 2.0 * h0 * r1 + w0 + a1) / (
        2.0 * (a3 - w0 * y - (y**2 + 1.0) * h0)
    )


def _c_r4(power: int):
    def formula(state: Sequence[Num], params: OdeParams) -> Num:
        a3, h0, w0 = params["a3"], params["h0"], params["w0"]
        y = state[1] ** 2
        return (w0 * y - a3 + h0 * (y**2 + 1.0)) / y**power

    return formula


def _c_r3(state: Sequence[Num], params: OdeParams) -> Num:
    a1, a2, a3, h0 = params["a1"], params["a2"], params["a3"], params["h0"]
    r1, y, r4 = state[0] ** 2, state[1] ** 2, state[3] ** 2
    return (
        (r1 * y + 1.0) * (r1 + y) * h0 - r1 * r4 * y - a3 * r1 - a2 * y - a1 * y * r1
    ) / (y * r1)


def _c_r4_rate(state: Sequence[Num], params: OdeParams) -> Num:
    a1, a2, a3 = params["a1"], params["a2"], params["a3"]
    r1, y, r3, r4 = (v**2 for v in state)
    return (
        (a1 * r1 + a2 + (r3 + r4) * r1) * (y**2 - 1.0)
        + (r1**2 + 1.0 + 2.0 * r1 * y) * a3
    ) / (y * (r1 * y + 1.0) * (r1 + y))


_C_QUADRATURE, _C_RELATION = quadrature(
    "quadrature", _c_numerator, _c_denominator, _R2, _R1
)

DARBOUX_IIC_FORMS = (
    _C_QUADRATURE,
    ReducedForm(
        OdeSpec(
            "linear",
            2,
            _c_linear,
            guard=lambda y, d, p: abs(_c_denominator(y, d[0], p)),
            unknown="r1",
            linear=True,
        ),
        _R2,
        _R1,
        derivation=_C_RELATION,
        eliminate=("a2",),
    ),
)


class DarbouxIICReduction(ReductionCase):
    system_id = SystemId.DII_C

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        h0 = self.system.energy(params, state)
        y, r4 = state[1] ** 2, state[3] ** 2
        return {
            "h0": h0,
            "w0": r4 + params["a3"] / y - h0 * (y + 1.0 / y),
            SIGN: self.slope_sign(params, state, _R2, _R1),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_IIC_FORMS

    def closures(self) -> tuple[ClosureFormula, ...]:
        return (
            ClosureFormula("r3", _R3, _c_r3),
            ClosureFormula("r4", _R4, _c_r4(2), fallback="r4_derived"),
            ClosureFormula("r4_derived", _R4, _c_r4(1), variant=FormVariant.DERIVED),
        )

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate(
                "dr1_dr2", _R2, _R1, lambda s, p: s[0] * s[2] / (s[1] * s[3])
            ),
            ReducedRate("dr4_dr2", _R2, _R4, _c_r4_rate),
            ReducedRate(
                "dr4_dr2_closed",
                _R2,
                _R4,
                lambda s, p: (p["a3"] + (s[1] ** 4 - 1.0) * p["h0"]) / s[1] ** 4,
                variant=FormVariant.DERIVED,
            ),
        )


# Case D


def _d_numerator(y: Num, u: Num, params: OdeParams) -> Num:
    return params["h"] * (1.0 + 1.0 / u**2) - params["w"] ** 2 - params["d"]


def _d_second(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    d, w = params["d"], params["w"]
    u, du = derivatives[0], derivatives[1]
    return -(w**2 * du**2 + w**2 + d) / (w**2 * u * (u**2 + 1.0))


def _d_third(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    u, du, d2u = derivatives
    return -3.0 * du * d2u / u


def _d_guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
    return min(abs(derivatives[0]), abs(params["w"]))


_D_QUADRATURE, _D_RELATION = quadrature(
    "quadrature", _d_numerator, lambda y, u, p: p["w"] ** 2, _W2, _W1
)

_D_SECOND = ReducedForm(
    OdeSpec("second_order", 2, _d_second, guard=_d_guard),
    _W2,
    _W1,
    derivation=_D_RELATION,
    eliminate=("h",),
)

DARBOUX_IID_FORMS = (
    _D_QUADRATURE,
    _D_SECOND,
    ReducedForm(
        OdeSpec("third_order", 3, _d_third, guard=_d_guard),
        _W2,
        _W1,
        derivation=relation_of(_D_SECOND.ode),
        eliminate=("d",),
    ),
)


class DarbouxIIDReduction(ReductionCase):
    system_id = SystemId.DII_D

    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        return {
            "w": state[3],
            "h": self.system.energy(params, state),
            SIGN: self.slope_sign(params, state, _W2, _W1),
        }

    def forms(self) -> tuple[ReducedForm, ...]:
        return DARBOUX_IID_FORMS

    def rates(self) -> tuple[ReducedRate, ...]:
        return (
            ReducedRate("dw1_dw2", _W2, _W1, lambda s, p: s[2] / p["w"]),
            ReducedRate(
                "dw3_dw2",
                _W2,
                _W3,
                lambda s, p: -(s[2] ** 2 + p["w"] ** 2 + p["d"])
                / (p["w"] * s[0] * (s[0] ** 2 + 1.0)),
            ),
        )

    def presets(self) -> tuple[Preset, ...]:
        return (
            Preset("linearizable", "d", lambda p: p["d"] + p["w"] ** 2, "d = -w4²"),
        )
