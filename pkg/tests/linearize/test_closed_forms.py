import numpy as np
import pytest

from app.config import settings
from app.exceptions import RadicandError, UnknownCaseError
from app.linearize.closed_forms import (
    closed_form,
    closed_form_point_residual,
    closed_form_residual,
    get_closed_form,
    list_closed_forms,
)
from app.systems.enums import SystemId


def test_w2_without_solution_modes():
    value = closed_form(SystemId.DII_A, "w2_general", {"C3": 0.0, "C4": 0.0}, 1.3)

    assert value == pytest.approx(-0.25)


def test_second_derivative_without_amplitude():
    assert closed_form(SystemId.DIII_C, "R_general", {"A2": 0.0}, 1.0) == 0.0


@pytest.mark.parametrize(
    ("system_id", "name"),
    [
        (SystemId.DII_A, "w2_general"),
        (SystemId.DII_A, "w3_general"),
        (SystemId.DIII_C, "R_general"),
        (SystemId.DIII_C, "u_tilde_general"),
        (SystemId.DIII_C, "u_general"),
    ],
)
def test_closed_form_solves_its_equation(system_id: SystemId, name: str):
    residual = closed_form_residual(
        system_id, name, count=100, rng=np.random.default_rng(42)
    )

    assert residual <= settings.closed_form_threshold


def test_w3_with_other_constants():
    residual = closed_form_residual(
        SystemId.DII_A,
        "w3_general",
        {"a1": 0.5, "C1": 0.3, "C2": 2.0, "sign": -1.0},
        count=50,
        rng=np.random.default_rng(7),
    )

    assert residual <= 1e-8


def test_general_solution_in_the_original_variables_at_one_point():
    # Only C2 and the A constants are bound, the equation must not need the
    # constants it eliminated
    closed = get_closed_form(SystemId.DIII_C, "u_general")

    residual = closed_form_point_residual(closed, {}, 1.5)

    assert residual <= settings.closed_form_threshold


@pytest.mark.parametrize("a2", [1.5, 2.0])
def test_general_solution_with_other_amplitudes(a2: float):
    # The root carries 2 A1 A2³, which is 1 for none of these amplitudes
    residual = closed_form_residual(
        SystemId.DIII_C,
        "u_general",
        {"A2": a2},
        count=30,
        rng=np.random.default_rng(7),
    )

    assert residual <= settings.closed_form_threshold


def test_negative_radicand():
    with pytest.raises(RadicandError):
        closed_form(SystemId.DII_A, "w3_general", {"C1": -10.0, "C2": 0.0}, 1.0)


def test_unknown_closed_form():
    with pytest.raises(UnknownCaseError):
        closed_form(SystemId.DII_A, "w4_general", {}, 1.0)


def test_systems_without_closed_forms():
    assert list_closed_forms(SystemId.PERLICK_I) == ()
