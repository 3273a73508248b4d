import pytest

from app.exceptions import ConditionViolatedError, UnknownCaseError
from app.reduce import catalog
from app.reduce.models import Preset
from app.reduce.presets import check_preset, preset_residual, solve_preset
from app.systems.enums import SystemId


@pytest.mark.parametrize(
    ("system_id", "preset", "parameter", "expected"),
    [
        (SystemId.DI_3, "linearizable", "a", -0.25),
        (SystemId.DI_1, "b2_zero", "b2", 0.0),
    ],
)
def test_solve_preset(
    system_id: SystemId, preset: str, parameter: str, expected: float
):
    case = catalog.get_case(system_id)
    params, state = catalog.case_inputs(system_id)

    solved = solve_preset(case, case.preset(preset), params, state)

    assert solved[parameter] == pytest.approx(expected, abs=1e-10)
    assert preset_residual(case, case.preset(preset), solved, state) == pytest.approx(
        0.0, abs=1e-10
    )
    assert {k: v for k, v in solved.items() if k != parameter} == {
        k: v for k, v in params.items() if k != parameter
    }


def test_case_inputs_with_a_preset():
    params, _ = catalog.case_inputs(SystemId.DI_3, preset="linearizable")

    assert params["a"] == pytest.approx(-0.25)


def test_check_preset_rejects_the_default_parameters():
    case = catalog.get_case(SystemId.DI_3)
    params, state = catalog.case_inputs(SystemId.DI_3)

    with pytest.raises(ConditionViolatedError):
        check_preset(case, case.preset("linearizable"), params, state)


def test_check_preset_accepts_a_solved_preset():
    case = catalog.get_case(SystemId.DI_3)
    params, state = catalog.case_inputs(SystemId.DI_3, preset="linearizable")

    check_preset(case, case.preset("linearizable"), params, state)


def test_preset_independent_of_its_parameter():
    case = catalog.get_case(SystemId.DI_3)
    params, state = catalog.case_inputs(SystemId.DI_3)
    preset = Preset("constant", "a", lambda p: 1.0)

    with pytest.raises(ConditionViolatedError):
        solve_preset(case, preset, params, state)


def test_unknown_preset():
    with pytest.raises(UnknownCaseError):
        catalog.get_case(SystemId.DI_3).preset("b2_zero")
