import math

import numpy as np
import pytest

from app.config import settings
from app.enums import StopReason
from app.exceptions import (
    ConfigError,
    DomainGuardError,
    OutOfSpanError,
    StepSizeUnderflowError,
)
from app.integrate.solver import integrate
from app.integrate.trajectory import Trajectory
from app.systems import catalog
from app.systems.enums import SystemId

from .conftest import harmonic


def test_harmonic_oscillator_quarter_period():
    trajectory = integrate(harmonic, [1.0, 0.0], (0.0, math.pi / 2.0), 1e-10)

    assert trajectory.stop_reason == StopReason.SPAN_END
    assert trajectory.times[-1] == math.pi / 2.0
    assert abs(trajectory.final_state[0]) <= 1e-8
    assert trajectory.final_state[1] == pytest.approx(-1.0, abs=1e-8)


def test_backward_integration():
    trajectory = integrate(lambda t, y: y, [1.0], (0.0, -1.0), 1e-10)

    assert np.all(np.diff(trajectory.times) < 0.0)
    assert trajectory.final_state[0] == pytest.approx(math.exp(-1.0), abs=1e-8)


def test_samples_are_strictly_increasing(harmonic_trajectory: Trajectory):
    assert np.all(np.diff(harmonic_trajectory.times) > 0.0)
    assert harmonic_trajectory.steps["accepted"] == len(harmonic_trajectory) - 1


@pytest.mark.parametrize("t", [0.0, 0.123, 1.0, 2.5, 4.44, 2.0 * math.pi])
def test_dense_output(harmonic_trajectory: Trajectory, t: float):
    state = harmonic_trajectory.evaluate(t)

    assert state[0] == pytest.approx(math.cos(t), abs=1e-8)
    assert state[1] == pytest.approx(-math.sin(t), abs=1e-8)


def test_dense_output_matches_reintegration(harmonic_trajectory: Trajectory):
    start = float(harmonic_trajectory.times[3])
    restarted = integrate(
        harmonic, harmonic_trajectory.states[3], (start, 3.0), 1e-10
    )

    assert np.max(
        np.abs(harmonic_trajectory.evaluate(3.0) - restarted.final_state)
    ) <= 10.0 * 1e-8


def test_dense_output_outside_of_span(harmonic_trajectory: Trajectory):
    with pytest.raises(OutOfSpanError):
        harmonic_trajectory.evaluate(7.0)


def test_smaller_tolerance_reduces_the_error():
    def global_error(tol: float) -> float:
        trajectory = integrate(harmonic, [1.0, 0.0], (0.0, 10.0), tol)
        return abs(trajectory.final_state[0] - math.cos(10.0))

    assert global_error(1e-8) <= global_error(1e-6) / 2.0


@pytest.mark.parametrize("tol", [1e-13, 1e-3, 0.0])
def test_tolerance_outside_of_range(tol: float):
    with pytest.raises(ConfigError):
        integrate(harmonic, [1.0, 0.0], (0.0, 1.0), tol)


def test_empty_span():
    with pytest.raises(ConfigError):
        integrate(harmonic, [1.0, 0.0], (1.0, 1.0))


def test_initial_state_on_singular_locus():
    with pytest.raises(DomainGuardError):
        integrate(lambda t, y: y, [1.0], (0.0, 1.0), guard=lambda t, y: 1.0 - y[0])


def test_guard_truncates_the_trajectory():
    trajectory = integrate(
        lambda t, y: np.ones(1), [0.0], (0.0, 2.0), 1e-8, guard=lambda t, y: 1.0 - y[0]
    )

    assert trajectory.stop_reason == StopReason.DOMAIN_GUARD
    assert trajectory.truncated
    assert 0.999 < trajectory.final_state[0] < 1.0


def test_step_budget(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(settings, "max_steps", 5)

    trajectory = integrate(harmonic, [1.0, 0.0], (0.0, 100.0), 1e-10)

    assert trajectory.stop_reason == StopReason.MAX_STEPS
    assert len(trajectory) <= 6


def test_step_size_underflow(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(settings, "min_step", 1.0)

    with pytest.raises(StepSizeUnderflowError):
        integrate(harmonic, [1.0, 0.0], (0.0, 10.0), 1e-10)


def test_truncate(harmonic_trajectory: Trajectory):
    truncated = harmonic_trajectory.truncate(2, StopReason.MONOTONICITY_LOSS)

    assert len(truncated) == 3
    assert truncated.dense is not None
    assert len(truncated.dense) == 2
    assert truncated.stop_reason == StopReason.MONOTONICITY_LOSS
    assert len(harmonic_trajectory) > 3


@pytest.mark.parametrize(
    "system_id", [SystemId.PERLICK_I, SystemId.TAUB_NUT, SystemId.DII_B]
)
def test_energy_drift(system_id: SystemId):
    system = catalog.get_system(system_id)
    params = system.bind_params()

    trajectory = integrate(
        lambda t, y: system.symplectic_gradient(params, y),
        system.default_state,
        (0.0, 2.0),
        settings.default_tol,
        guard=lambda t, y: system.guard_margin(params, y),
    )

    energies = [system.energy(params, state) for state in trajectory.states]
    drift = max(abs(e - energies[0]) for e in energies) / max(1.0, abs(energies[0]))
    assert drift <= settings.energy_drift_threshold


def test_cyclic_momentum_is_conserved():
    system = catalog.get_system(SystemId.PERLICK_I)
    params = system.bind_params()

    trajectory = integrate(
        lambda t, y: system.symplectic_gradient(params, y),
        system.default_state,
        (0.0, 2.0),
        labels=system.state_labels,
    )

    np.testing.assert_array_equal(
        trajectory.column("p_theta"), system.default_state[3]
    )
