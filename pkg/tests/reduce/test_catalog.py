import numpy as np
import pytest

from app.exceptions import (
    JetDomainError,
    MonotonicityLossError,
    RadicandError,
    SingularLocusError,
    UnknownCaseError,
)
from app.integrate.reparametrize import time_taylor_derivatives
from app.reduce import catalog
from app.systems.enums import SystemId

# Seeds of the sampled states, None stands for the default state
_STATE_SEEDS = (None, 3, 11, 29)

_SINGULAR_ERRORS = (
    JetDomainError,
    MonotonicityLossError,
    RadicandError,
    SingularLocusError,
)


def _default_inputs(system_id: SystemId) -> tuple[dict, list[float]]:
    return catalog.case_inputs(system_id)


def _inputs(system_id: SystemId, seed: int | None) -> tuple[dict, list[float]]:
    if seed is None:
        return _default_inputs(system_id)
    params, _ = _default_inputs(system_id)
    state = catalog.get_case(system_id).system.sample_state(
        params, np.random.default_rng(seed)
    )
    return params, [float(v) for v in state]


def _checked_forms() -> list[tuple[SystemId, str]]:
    """Forms compared with the flow: those without a fallback, the fallbacks
    themselves included.
    """
    return [
        (case.system_id, form.name)
        for case in catalog.list_cases()
        for form in case.forms()
        if form.fallback is None and form.compare_full
    ]


def _checked_rates() -> list[tuple[SystemId, str]]:
    return [
        (case.system_id, rate.name)
        for case in catalog.list_cases()
        for rate in case.rates()
        if rate.fallback is None
    ]


def _checked_closures() -> list[tuple[SystemId, str]]:
    return [
        (case.system_id, closure.name)
        for case in catalog.list_cases()
        for closure in case.closures()
        if closure.fallback is None
    ]


@pytest.mark.parametrize("system_id", list(SystemId))
def test_every_system_has_a_reduction(system_id: SystemId):
    case = catalog.get_case(system_id)

    assert case.system_id == system_id
    assert case.forms()


def test_list_cases_in_catalog_order():
    cases = catalog.list_cases()

    assert len(cases) == 19
    assert cases[0].system_id == SystemId.PERLICK_I
    assert cases[-1].system_id == SystemId.DIV_D


def test_get_case_from_string():
    assert catalog.get_case("dIII_c") is catalog.get_case(SystemId.DIII_C)


def test_unknown_case():
    with pytest.raises(UnknownCaseError):
        catalog.get_case("dV_a")


def test_unknown_form():
    with pytest.raises(UnknownCaseError):
        catalog.get_case(SystemId.DI_3).form("fifth_order")


def test_unknown_closure():
    with pytest.raises(UnknownCaseError):
        catalog.closure_by_name(catalog.get_case(SystemId.DI_3), "p_x")


@pytest.mark.parametrize("case", catalog.list_cases(), ids=lambda c: c.system_id)
def test_fallbacks_point_to_derived_forms(case):
    for form in case.forms():
        if form.fallback is not None:
            target = case.form(form.fallback)
            assert target.fallback is None
            assert target.order == form.order
    names = {rate.name for rate in case.rates()}
    for rate in case.rates():
        if rate.fallback is not None:
            assert rate.fallback in names


@pytest.mark.parametrize("seed", _STATE_SEEDS)
@pytest.mark.parametrize(("system_id", "name"), _checked_forms())
def test_reduced_form_matches_the_flow(
    system_id: SystemId, name: str, seed: int | None
):
    case = catalog.get_case(system_id)
    params, state = _inputs(system_id, seed)
    form = case.form(name)
    try:
        derivatives = time_taylor_derivatives(
            system_id, params, state, form.independent, form.dependent, form.order
        )
        bound = catalog.bind_form(form, params, case.constants(params, state))
        highest = bound.evaluate(
            form.independent(state), list(derivatives[: form.order])
        )
    except _SINGULAR_ERRORS as error:
        pytest.skip(f"Sampled state on a singular locus: {error}")

    assert highest == pytest.approx(derivatives[form.order], rel=1e-6, abs=1e-8)


@pytest.mark.parametrize("seed", _STATE_SEEDS)
@pytest.mark.parametrize(("system_id", "name"), _checked_rates())
def test_reduced_rate_matches_the_flow(
    system_id: SystemId, name: str, seed: int | None
):
    case = catalog.get_case(system_id)
    params, state = _inputs(system_id, seed)
    rate = next(r for r in case.rates() if r.name == name)
    try:
        expected = time_taylor_derivatives(
            system_id, params, state, rate.independent, rate.dependent, 1
        )[1]
    except _SINGULAR_ERRORS as error:
        pytest.skip(f"Sampled state on a singular locus: {error}")

    value = rate.rate(state, case.bound_constants(params, state))

    assert value == pytest.approx(expected, rel=1e-6, abs=1e-8)


@pytest.mark.parametrize("seed", _STATE_SEEDS)
@pytest.mark.parametrize(("system_id", "name"), _checked_closures())
def test_closure_reproduces_the_state(
    system_id: SystemId, name: str, seed: int | None
):
    case = catalog.get_case(system_id)
    params, state = _inputs(system_id, seed)
    closure = catalog.closure_by_name(case, name)
    try:
        value = catalog.momentum_closure(system_id, name, params, state)
    except _SINGULAR_ERRORS as error:
        pytest.skip(f"Sampled state on a singular locus: {error}")

    assert value == pytest.approx(closure.actual(state), rel=1e-6, abs=1e-8)


@pytest.mark.parametrize(
    ("system_id", "displayed", "derived"),
    [
        (SystemId.PERLICK_II, "dp_r_dtheta", "dp_r_dtheta_derived"),
        (SystemId.DIII_A, "dw4_dw2", "dw4_dw2_derived"),
    ],
)
def test_displayed_rate_misses_the_flow_off_its_special_points(
    system_id: SystemId, displayed: str, derived: str
):
    # Perlick II: the p_r² P term needs r**4, both agree at r = 1
    # dIII_a: the a2 term needs (w2² - w1² - 4)
    case = catalog.get_case(system_id)
    state = [0.8, 0.0, 0.4, 1.0] if system_id == SystemId.PERLICK_II else None
    params, state = catalog.case_inputs(system_id, state=state)
    rates = {rate.name: rate for rate in case.rates()}
    expected = time_taylor_derivatives(
        system_id,
        params,
        state,
        rates[derived].independent,
        rates[derived].dependent,
        1,
    )[1]
    constants = case.bound_constants(params, state)

    assert rates[derived].rate(state, constants) == pytest.approx(expected, rel=1e-8)
    assert abs(rates[displayed].rate(state, constants) - expected) > 1e-3


def test_perlick_ii_second_order_away_from_the_unit_radius():
    case = catalog.get_case(SystemId.PERLICK_II)
    params, state = catalog.case_inputs(
        SystemId.PERLICK_II, state=[0.8, 0.0, 0.4, 1.0]
    )
    derivatives = time_taylor_derivatives(
        SystemId.PERLICK_II, params, state, 1, 0, 3
    )
    constants = case.constants(params, state)

    for name in ("second_order_derived", "third_order"):
        form = case.form(name)
        ode = catalog.bind_form(form, params, constants)
        highest = ode.evaluate(state[1], list(derivatives[: form.order]))
        assert highest == pytest.approx(derivatives[form.order], rel=1e-8)


def test_initial_point_has_one_value_per_order():
    y0, derivatives = catalog.initial_point(SystemId.TAUB_NUT, "third_order")

    assert y0 == 0.0
    assert len(derivatives) == 3
    assert derivatives[0] == 1.0


def test_reduced_ode_binds_the_constants():
    ode = catalog.reduced_ode(SystemId.DI_3, "second_order")

    assert {"w", "h", "a"} <= set(ode.params)


def test_constants_from_state_use_the_given_state():
    first = catalog.constants_from_state(
        SystemId.PERLICK_I, None, (1.0, 0.0, 0.1, 1.0)
    )
    second = catalog.constants_from_state(
        SystemId.PERLICK_I, None, (1.0, 0.0, 0.1, 2.0)
    )

    assert first != second


@pytest.mark.parametrize(
    ("system_id", "form", "params", "point", "expected"),
    [
        (SystemId.DI_3, "second_order", {"a": -0.25, "w": 1.0}, (1.0, 0.0), 0.0),
        (SystemId.DI_3, "third_order", {"a": 0.2, "w": 1.0}, (1.0, 0.3, 0.1), 0.0),
    ],
)
def test_reduced_forms_at_known_points(
    system_id: SystemId, form: str, params: dict, point: tuple, expected: float
):
    ode = catalog.get_case(system_id).form(form).ode.with_params(**params, h=1.0)

    assert ode.evaluate(0.5, list(point)) == pytest.approx(expected, abs=1e-12)


def test_branch_sign_follows_the_actual_value():
    case = catalog.get_case(SystemId.DI_1)
    closure = catalog.closure_by_name(case, "p_v")

    assert catalog.branch_sign(closure, (1.0, 1.0, 0.1, -1.0)) == -1.0
    assert catalog.branch_sign(closure, (1.0, 1.0, 0.1, 0.0)) == 1.0


def test_momentum_closure_at_another_state():
    params, state = _default_inputs(SystemId.DI_1)
    moved = [state[0] + 0.1, state[1], state[2], state[3]]

    value = catalog.momentum_closure(SystemId.DI_1, "p_v", params, state, moved)

    assert value == pytest.approx(state[3])
