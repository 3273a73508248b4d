"""Closed form general solutions and their substitution into the equations
they solve.

Each closed form is evaluated on a jet of the independent variable, so its
derivatives up to the order of the equation come out exactly and the
equation residual can be taken at any admissible point.
"""

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from app.exceptions import (
    JetDomainError,
    RadicandError,
    SingularLocusError,
    UnknownCaseError,
)
from app.integrate.ode import OdeParams, OdeSpec
from app.jets import functions as fn
from app.jets.jet import Num, as_jet, seed, value_of
from app.lab_logger import logger
from app.reduce.catalog import get_case
from app.systems.catalog import parse_system_id
from app.systems.enums import SystemId

type Solution = Callable[[Num, OdeParams], Num]

# Attempts per requested point when sampling admissible points
_ATTEMPTS_PER_POINT = 20


def _root(target: str, radicand: Num) -> Num:
    if value_of(radicand) < 0.0:
        raise RadicandError(target, value_of(radicand))
    return fn.sqrt(radicand)


@dataclass(frozen=True)
class ClosedForm:
    """General solution u(y; constants) of an equation of the catalog"""

    name: str
    solution: Solution
    equation: Callable[[], OdeSpec]
    defaults: Mapping[str, float] = field(default_factory=dict)
    window: tuple[float, float] = (0.5, 2.0)

    def evaluate(self, y: Num, constants: OdeParams) -> Num:
        return self.solution(y, {**self.defaults, **constants})


def _form_equation(system_id: SystemId, form: str) -> Callable[[], OdeSpec]:
    return lambda: get_case(system_id).form(form).ode


# Darboux II, case A


def _a_w2_general(y: Num, c: OdeParams) -> Num:
    a1, a2 = c["a1"], c["a2"]
    radicand = a1 * y**4 - 8.0 * c["C1"] - 8.0 * c["C2"] * y**2
    return (
        (a1 * y**2 - 4.0 * c["C2"]) * c["C3"]
        + _root("w2", radicand) * c["C4"]
        - a2 / (2.0 * a1)
    )


def _a_w3_general(y: Num, c: OdeParams) -> Num:
    radicand = 8.0 * c["C2"] * y**2 + 8.0 * c["C1"] - c["a1"] * y**4
    return c["sign"] * _root("w3", radicand) / (2.0 * y)


# Darboux III, case C


def _r_equation() -> OdeSpec:
    def rhs(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
        r, dr = derivatives
        return (3.0 * r + 5.0 * y * dr) * dr / (3.0 * y * r)

    return OdeSpec(
        "second_derivative",
        2,
        rhs,
        guard=lambda y, d, p: min(abs(y), abs(d[0])),
        unknown="R",
    )


def _u_tilde_equation() -> OdeSpec:
    def rhs(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
        d2u, d3u = derivatives[2], derivatives[3]
        return (3.0 * d2u + 5.0 * y * d3u) * d3u / (3.0 * y * d2u)

    return OdeSpec(
        "canonical_fourth_order",
        4,
        rhs,
        guard=lambda y, d, p: min(abs(y), abs(d[2])),
    )


def _c_r_general(y: Num, c: OdeParams) -> Num:
    a1, a2 = c["A1"], c["A2"]
    shifted = y**2 - 2.0 * a1
    return 2.0 * a2 * _root("R", 2.0 * a2) / (shifted * _root("R", shifted))


def _c_u_tilde_general(y: Num, c: OdeParams) -> Num:
    a1, a2 = c["A1"], c["A2"]
    return (
        a2 / a1 * _root("u_tilde", 2.0 * a2 * (y**2 - 2.0 * a1))
        + c["A3"] * y
        + c["A4"]
    )


def _c_u_coefficients(c: OdeParams) -> tuple[list[float], list[float], list[float]]:
    """(β0, β1, β2), (γ0, ..., γ4) and the denominator coefficients"""
    a1, a2, a3, a4, c2 = c["A1"], c["A2"], c["A3"], c["A4"], c["C2"]
    cube = a2**3
    beta = [
        a1**2 * a3 * (3.0 * c2 * a4 - 1.0),
        9.0 * a1**2 * a4**2 * c2
        - 3.0 * a1**2 * a4
        + 2.0 * cube
        - a1**2 * a3**2
        + 36.0 * cube * a1 * c2,
        -3.0 * a1**2 * a3 * a4,
    ]
    gamma = [
        -18.0 * a1**2 * a3**2 * c2**2
        + 9.0 * a1 * a4**2 * c2**2
        - 6.0 * a1 * c2 * a4
        + a1
        + 36.0 * cube * c2**2,
        -36.0 * a1**2 * c2 * a3,
        18.0 * a4**2 * a1 * c2
        - 6.0 * a4 * a1
        + 72.0 * cube * c2
        - 36.0 * a1**2 * a3**2 * c2
        - 18.0 * a1**2,
        -36.0 * a1**2 * a3,
        -18.0 * a1**2 * a3**2 + 9.0 * a4**2 * a1 + 36.0 * cube,
    ]
    denominator = [
        a1**2 * a3**2 - 2.0 * cube,
        6.0 * a1**2 * a3 * a4,
        9.0 * a1 * (a4**2 * a1 + 4.0 * cube),
    ]
    return beta, gamma, denominator


def _polynomial(coefficients: Sequence[float], y: Num) -> Num:
    total = 0.0 * y + coefficients[-1]
    for coefficient in reversed(coefficients[:-1]):
        total = total * y + coefficient
    return total


def _c_u_general(y: Num, c: OdeParams) -> Num:
    """Root of the quadratic in u on the + branch of its discriminant,
    2 A1 A2³ (γ0 + ... + γ4 y⁴)
    """
    beta, gamma, denominator = _c_u_coefficients(c)
    radicand = 2.0 * c["A1"] * c["A2"] ** 3 * _polynomial(gamma, y)
    return (_polynomial(beta, y) + _root("u", radicand)) / _polynomial(
        denominator, y
    )


CLOSED_FORMS: dict[SystemId, tuple[ClosedForm, ...]] = {
    SystemId.DII_A: (
        ClosedForm(
            "w2_general",
            _a_w2_general,
            _form_equation(SystemId.DII_A, "w2_linear"),
            {"a1": 1.0, "a2": 0.5, "C1": -1.0, "C2": -0.5, "C3": 0.3, "C4": 0.7},
        ),
        ClosedForm(
            "w3_general",
            _a_w3_general,
            _form_equation(SystemId.DII_A, "w3_second_order"),
            {"a1": 1.0, "C1": 1.0, "C2": 1.0, "sign": 1.0},
        ),
    ),
    SystemId.DIII_C: (
        ClosedForm("R_general", _c_r_general, _r_equation, {"A1": -1.0, "A2": 1.0}),
        ClosedForm(
            "u_tilde_general",
            _c_u_tilde_general,
            _u_tilde_equation,
            {"A1": -1.0, "A2": 1.0, "A3": 0.5, "A4": 0.2},
        ),
        ClosedForm(
            "u_general",
            _c_u_general,
            _form_equation(SystemId.DIII_C, "fourth_order_derived"),
            {"A1": 1.0, "A2": 1.0, "A3": 0.5, "A4": 0.2, "C2": 0.1},
            window=(1.1, 2.0),
        ),
    ),
}


def list_closed_forms(system_id: str | SystemId) -> tuple[ClosedForm, ...]:
    return CLOSED_FORMS.get(parse_system_id(system_id), ())


def get_closed_form(system_id: str | SystemId, name: str) -> ClosedForm:
    for closed in list_closed_forms(system_id):
        if closed.name == name:
            return closed
    msg = f"No closed form {name!r} for {system_id}"
    raise UnknownCaseError(msg)


def closed_form(
    system_id: str | SystemId, name: str, constants: OdeParams, y: float
) -> float:
    """Value of the named general solution at y"""
    return value_of(get_closed_form(system_id, name).evaluate(y, constants))


def closed_form_point_residual(
    closed: ClosedForm, constants: OdeParams, y: float
) -> float:
    """|u^(n) - F(y, u, ..., u^(n-1))| for the closed form substituted through
    jets, relative to 1 + max |u^(k)|
    """
    merged = {**closed.defaults, **constants}
    equation = closed.equation().with_params(**merged)
    order = equation.order
    variable = seed("y", y, order)
    derivatives = as_jet(closed.solution(variable, merged), variable).derivatives()
    expected = value_of(equation.evaluate(y, [float(d) for d in derivatives[:order]]))
    scale = 1.0 + float(np.max(np.abs(derivatives)))
    return abs(derivatives[order] - expected) / scale


def closed_form_residual(
    system_id: str | SystemId,
    name: str,
    constants: OdeParams | None = None,
    count: int = 100,
    rng: np.random.Generator | None = None,
) -> float:
    """Largest relative residual of the closed form over random admissible
    points of its window. Points where the solution or the equation is not
    defined are skipped.
    """
    closed = get_closed_form(system_id, name)
    rng = rng if rng is not None else np.random.default_rng()
    constants = constants or {}
    residuals = []
    for _ in range(_ATTEMPTS_PER_POINT * count):
        if len(residuals) == count:
            break
        y = float(rng.uniform(*closed.window))
        try:
            residuals.append(closed_form_point_residual(closed, constants, y))
        except (RadicandError, JetDomainError, SingularLocusError) as error:
            logger.debug("Skipping {} at y={}: {}", name, y, error)
    if not residuals:
        msg = f"No admissible point for {name} in {closed.window}"
        raise SingularLocusError(msg)
    return max(residuals)
