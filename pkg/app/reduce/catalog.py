"""Catalog of the reductions, one per superintegrable system"""

from collections.abc import Mapping, Sequence
from functools import cache

import numpy as np

from app.exceptions import UnknownCaseError
from app.integrate.ode import OdeSpec
from app.integrate.reparametrize import time_taylor_derivatives
from app.jets.jet import value_of
from app.systems.catalog import parse_system_id
from app.systems.enums import SystemId

from .base import ReductionCase
from .darboux_i import DarbouxI1Reduction, DarbouxI2Reduction, DarbouxI3Reduction
from .darboux_ii import (
    DarbouxIIAReduction,
    DarbouxIIBReduction,
    DarbouxIICReduction,
    DarbouxIIDReduction,
)
from .darboux_iii import (
    DarbouxIIIAReduction,
    DarbouxIIIBReduction,
    DarbouxIIICReduction,
    DarbouxIIIDReduction,
    DarbouxIIIEReduction,
)
from .darboux_iv import (
    DarbouxIVAReduction,
    DarbouxIVBReduction,
    DarbouxIVCReduction,
    DarbouxIVDReduction,
)
from .models import ClosureFormula, ReducedForm
from .perlick import PerlickIIReduction, PerlickIReduction, TaubNutReduction
from .presets import solve_preset

_CASE_CLASSES: tuple[type[ReductionCase], ...] = (
    PerlickIReduction,
    PerlickIIReduction,
    TaubNutReduction,
    DarbouxI1Reduction,
    DarbouxI2Reduction,
    DarbouxI3Reduction,
    DarbouxIIAReduction,
    DarbouxIIBReduction,
    DarbouxIICReduction,
    DarbouxIIDReduction,
    DarbouxIIIAReduction,
    DarbouxIIIBReduction,
    DarbouxIIICReduction,
    DarbouxIIIDReduction,
    DarbouxIIIEReduction,
    DarbouxIVAReduction,
    DarbouxIVBReduction,
    DarbouxIVCReduction,
    DarbouxIVDReduction,
)


@cache
def get_case(system_id: str | SystemId) -> ReductionCase:
    system_id = parse_system_id(system_id)
    case_class = next(c for c in _CASE_CLASSES if c.system_id == system_id)
    return case_class()


def list_cases() -> list[ReductionCase]:
    return [get_case(system_id) for system_id in SystemId]


def case_inputs(
    system_id: str | SystemId,
    params: Mapping[str, float] | None = None,
    state: Sequence[float] | None = None,
    preset: str | None = None,
) -> tuple[dict[str, float], list[float]]:
    """Bound parameters and initial state of a case, the default ones unless
    given, with the preset parameter solved when a preset is named.
    """
    case = get_case(system_id)
    system = case.system
    bound = system.bind_params(params)
    initial = [float(v) for v in (system.default_state if state is None else state)]
    if preset is not None:
        bound = solve_preset(case, case.preset(preset), bound, initial)
    system.check_domain(bound, initial)
    return bound, initial


def constants_from_state(
    system_id: str | SystemId,
    params: Mapping[str, float] | None,
    state: Sequence[float],
) -> dict[str, float]:
    case = get_case(system_id)
    return case.constants(case.system.bind_params(params), [float(v) for v in state])


def bind_form(
    form: ReducedForm, params: Mapping[str, float], constants: Mapping[str, float]
) -> OdeSpec:
    return form.ode.with_params(**params, **constants)


def reduced_ode(
    system_id: str | SystemId,
    form: str,
    params: Mapping[str, float] | None = None,
    state: Sequence[float] | None = None,
) -> OdeSpec:
    """Reduced form with the parameters and the constants of `state` bound"""
    case = get_case(system_id)
    bound, initial = case_inputs(system_id, params, state)
    return bind_form(case.form(form), bound, case.constants(bound, initial))


def initial_point(
    system_id: str | SystemId,
    form: str,
    params: Mapping[str, float] | None = None,
    state: Sequence[float] | None = None,
) -> tuple[float, np.ndarray]:
    """Independent variable and (u, u', ..., u^(n-1)) at the state, the
    derivatives taken along the Hamiltonian flow.
    """
    case = get_case(system_id)
    bound, initial = case_inputs(system_id, params, state)
    reduced = case.form(form)
    y0 = value_of(reduced.independent(initial))
    derivatives = time_taylor_derivatives(
        system_id,
        bound,
        initial,
        reduced.independent,
        reduced.dependent,
        reduced.order - 1,
    )
    return y0, derivatives


def closure_by_name(case: ReductionCase, name: str) -> ClosureFormula:
    for closure in case.closures():
        if closure.name == name:
            return closure
    msg = (
        f"No closure {name!r} for {case.system_id}, "
        f"expected one of {[c.name for c in case.closures()]}"
    )
    raise UnknownCaseError(msg)


def branch_sign(closure: ClosureFormula, state: Sequence[float]) -> float:
    """Sign of the actual quantity, fixing the branch of a ± closure"""
    return float(np.sign(value_of(closure.actual(state))) or 1.0)


def momentum_closure(
    system_id: str | SystemId,
    name: str,
    params: Mapping[str, float] | None,
    initial_state: Sequence[float],
    state: Sequence[float] | None = None,
) -> float:
    """Closure evaluated at `state`, with the constants and the branch of
    `initial_state`.
    """
    case = get_case(system_id)
    bound = case.system.bind_params(params)
    initial = [float(v) for v in initial_state]
    closure = closure_by_name(case, name)
    merged = case.bound_constants(bound, initial)
    target = initial if state is None else [float(v) for v in state]
    return closure.evaluate(target, merged, branch_sign(closure, initial))
