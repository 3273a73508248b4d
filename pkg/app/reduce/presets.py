"""Linearizability presets: one parameter of the family is moved until the
condition of the preset holds for the reduction constants of the initial
state. Most conditions are affine in the parameter once the constants are
frozen, but the constants themselves depend on it through the energy, so the
condition is solved by secant iterations.
"""

from collections.abc import Sequence

from scipy import optimize

from app.config import settings
from app.exceptions import ConditionViolatedError, LabError
from app.lab_logger import logger
from app.systems.models import Params

from .base import ReductionCase
from .models import Preset


def preset_residual(
    case: ReductionCase, preset: Preset, params: Params, state: Sequence[float]
) -> float:
    """Value of the condition, zero when the preset holds"""
    return float(preset.condition(case.bound_constants(params, state)))


def solve_preset(
    case: ReductionCase, preset: Preset, params: Params, state: Sequence[float]
) -> dict[str, float]:
    """Parameters equal to `params` except for the preset parameter, chosen so
    that the condition holds at `state`.
    """

    def residual(value: float) -> float:
        return preset_residual(case, preset, {**params, preset.parameter: value}, state)

    start = float(params[preset.parameter])
    try:
        # Secant method, no derivative given
        root, result = optimize.newton(
            residual,
            start,
            x1=start + max(1e-3, 1e-3 * abs(start)),
            tol=settings.preset_tolerance,
            maxiter=settings.preset_max_iterations,
            full_output=True,
            disp=False,
        )
        value = float(root)
        remaining = residual(value)
    except LabError as error:
        msg = (
            f"Preset {preset.name} of {case.system_id} left the domain "
            f"while solving for {preset.parameter}: {error}"
        )
        raise ConditionViolatedError(msg) from error

    if not result.converged or not _holds(remaining, value):
        msg = (
            f"Preset {preset.name} of {case.system_id} did not converge "
            f"({result.flag}, residual {remaining:.3e})"
        )
        raise ConditionViolatedError(msg)

    solved = {**params, preset.parameter: value}
    case.system.check_domain(solved, state)
    logger.info(
        "Preset {} of {} sets {} = {} after {} iterations",
        preset.name,
        case.system_id,
        preset.parameter,
        value,
        result.iterations,
    )
    return solved


def _holds(residual: float, parameter: float) -> bool:
    return abs(residual) <= settings.preset_tolerance * 1e3 * (1.0 + abs(parameter))


def check_preset(
    case: ReductionCase, preset: Preset, params: Params, state: Sequence[float]
) -> None:
    """Raise unless the condition of the preset holds at `state`"""
    value = preset_residual(case, preset, params, state)
    if not _holds(value, params[preset.parameter]):
        msg = (
            f"{case.system_id} does not satisfy {preset.description or preset.name} "
            f"(residual {value:.3e})"
        )
        raise ConditionViolatedError(msg)
