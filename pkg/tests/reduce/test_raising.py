import pytest

from app.config import settings
from app.enums import FormVariant
from app.exceptions import ConfigError, SingularLocusError
from app.integrate.ode import OdeSpec
from app.integrate.reparametrize import time_taylor_derivatives
from app.jets.checks import fd_check
from app.reduce import catalog
from app.reduce.models import Relation
from app.reduce.raising import extend_jet_point, raise_order, relation_of
from app.systems.enums import SystemId


def _scaled_oscillator(y, derivatives, params):
    return -params["c"] * derivatives[0]


def _unit_oscillator(y, derivatives, params):
    return -derivatives[0]


def test_relation_of_vanishes_on_the_equation():
    ode = OdeSpec("oscillator", 2, _scaled_oscillator)

    relation = relation_of(ode)

    assert relation.order == 2
    assert relation.evaluate(0.0, [2.0, 1.0, -6.0], {"c": 3.0}) == 0.0
    assert relation.evaluate(0.0, [2.0, 1.0, 0.0], {"c": 3.0}) == pytest.approx(6.0)


def test_raise_order_eliminates_a_constant():
    # u'' = -c u gives u''' = u'' u' / u
    raised = raise_order(OdeSpec("oscillator", 2, _scaled_oscillator), ("c",))

    assert raised.order == 3
    assert raised.variant == FormVariant.DERIVED
    assert raised.evaluate(0.0, [2.0, 3.0, 5.0]) == pytest.approx(7.5)


def test_raised_equation_does_not_depend_on_the_eliminated_value():
    raised = raise_order(OdeSpec("oscillator", 2, _scaled_oscillator), ("c",))

    first = raised.with_params(c=1.0).evaluate(0.3, [2.0, 3.0, 5.0])
    second = raised.with_params(c=-4.0).evaluate(0.3, [2.0, 3.0, 5.0])

    assert first == pytest.approx(second)


def test_raise_a_quadrature_twice():
    # w² u'² = 4 u h - w² - 4 a, with h and a eliminated
    relation = catalog.get_case(SystemId.DI_3).form("third_order").derivation
    raised = raise_order(relation, ("h", "a"))

    value = raised.with_params(w=1.3, sign=1.0).evaluate(0.2, [1.5, 0.7, -0.4])

    assert value == pytest.approx(0.0, abs=1e-12)


def test_raised_quadrature_matches_the_displayed_second_order():
    case = catalog.get_case(SystemId.DI_3)
    displayed = case.form("second_order")
    raised = raise_order(displayed.derivation, displayed.eliminate)
    params = {"a": 0.2, "w": 1.3, "sign": 1.0}

    expected = displayed.ode.with_params(**params).evaluate(0.2, [1.5, 0.7])
    value = raised.with_params(**params).evaluate(0.2, [1.5, 0.7])

    assert value == pytest.approx(expected)


def test_raise_order_needs_constants():
    with pytest.raises(ConfigError):
        raise_order(OdeSpec("oscillator", 2, _scaled_oscillator), ())


def test_raise_order_on_a_singular_point():
    raised = raise_order(OdeSpec("oscillator", 2, _scaled_oscillator), ("c",))

    with pytest.raises(SingularLocusError):
        raised.evaluate(0.0, [0.0, 1.0, 0.0])


def test_relation_without_highest_derivative():
    relation = Relation("flat", 1, lambda y, d, p: p["c"] * d[0] - 1.0)
    raised = raise_order(relation, ("c",))

    with pytest.raises(SingularLocusError):
        raised.evaluate(0.0, [1.0, 0.5])


def test_extend_jet_point_of_an_explicit_equation():
    ode = OdeSpec("oscillator", 2, _unit_oscillator)

    values = extend_jet_point(ode, 0.0, [1.0, 0.0], 3)

    assert values == pytest.approx([1.0, 0.0, -1.0, 0.0, 1.0])


def test_extend_jet_point_of_a_raised_equation():
    raised = raise_order(OdeSpec("oscillator", 2, _scaled_oscillator), ("c",))

    values = extend_jet_point(raised, 0.0, [1.0, 0.5, -1.0], 2)

    assert values == pytest.approx([1.0, 0.5, -1.0, -0.5, 1.0])


def test_raised_guard_can_replace_the_relation_guard():
    relation = Relation(
        "flat", 1, lambda y, d, p: d[1] - p["c"] * d[0], guard=lambda y, d, p: p["c"]
    )

    raised = raise_order(relation, ("c",), guard=lambda y, d, p: abs(d[0]))

    assert raised.margin(0.0, [2.0, 1.0]) == 2.0


def test_darboux_iii_c_fourth_order_is_smooth_at_the_initial_point():
    # The fourth order form only needs C2, and its jet gradient agrees with
    # central differences
    case = catalog.get_case(SystemId.DIII_C)
    form = case.form("fourth_order_derived")
    params, state = catalog.case_inputs(SystemId.DIII_C)
    ode = catalog.bind_form(form, {}, {"C2": case.constants(params, state)["C2"]})
    y0, derivatives = catalog.initial_point(SystemId.DIII_C, form.name)

    discrepancy = fd_check(
        lambda point: ode.evaluate(point[0], point[1:]),
        [y0, *(float(d) for d in derivatives)],
    )

    assert discrepancy <= settings.fd_check_threshold


def test_darboux_iii_c_fourth_order_matches_the_flow_derivative():
    case = catalog.get_case(SystemId.DIII_C)
    form = case.form("fourth_order_derived")
    params, state = catalog.case_inputs(SystemId.DIII_C)
    derivatives = time_taylor_derivatives(
        SystemId.DIII_C, params, state, form.independent, form.dependent, 4
    )
    ode = catalog.bind_form(form, params, case.constants(params, state))

    highest = ode.evaluate(form.independent(state), list(derivatives[:4]))

    assert highest == pytest.approx(derivatives[4], rel=1e-7)
