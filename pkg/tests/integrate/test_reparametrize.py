import numpy as np
import pytest

from app.enums import StopReason
from app.exceptions import MonotonicityLossError
from app.integrate.reparametrize import (
    independent_rate,
    reparametrize,
    time_taylor_derivatives,
)
from app.integrate.solver import integrate
from app.integrate.trajectory import Trajectory
from app.systems import catalog
from app.systems.enums import SystemId


def _hamiltonian_trajectory(
    system_id: SystemId, params: dict | None, state, span
) -> Trajectory:
    system = catalog.get_system(system_id)
    bound = system.bind_params(params)
    return integrate(
        lambda t, y: system.symplectic_gradient(bound, y),
        state,
        span,
        guard=lambda t, y: system.guard_margin(bound, y),
        labels=system.state_labels,
    )


def test_free_particle_orbit_equation():
    params = {"k": 0.0, "A": 0.0}
    trajectory = _hamiltonian_trajectory(
        SystemId.PERLICK_I, params, (1.0, 0.0, 0.3, 1.0), (0.0, 1.0)
    )

    reduced = reparametrize(
        trajectory, SystemId.PERLICK_I, params, independent=1, dependent=0, order=2
    )

    r, dr, d2r = reduced.states.T
    assert len(reduced) == len(trajectory)
    assert np.max(np.abs(d2r - (2.0 * dr**2 / r + r))) <= 1e-9


def test_taub_nut_first_derivative():
    system = catalog.get_system(SystemId.TAUB_NUT)
    trajectory = _hamiltonian_trajectory(
        SystemId.TAUB_NUT, None, system.default_state, (0.0, 2.0)
    )

    reduced = reparametrize(
        trajectory, SystemId.TAUB_NUT, None, independent=1, dependent=0, samples=40
    )

    r_values = reduced.column("u")
    states = trajectory.evaluate_many(reduced.source)
    expected = states[:, 0] ** 2 * states[:, 2] / states[:, 3]
    assert np.max(np.abs(reduced.column("du_dy") - expected)) <= 1e-9
    np.testing.assert_allclose(r_values, states[:, 0], atol=1e-12)


def test_derivatives_of_a_state_function():
    # y = θ, g = 1/r on the free particle: g'' = -g
    params = {"k": 0.0, "A": 0.0}

    derivatives = time_taylor_derivatives(
        SystemId.PERLICK_I,
        params,
        (1.3, 0.2, -0.4, 0.9),
        independent=1,
        dependent=lambda s: 1.0 / s[0],
        order=4,
    )

    assert derivatives[2] == pytest.approx(-derivatives[0], abs=1e-12)
    assert derivatives[3] == pytest.approx(-derivatives[1], abs=1e-12)
    assert derivatives[4] == pytest.approx(derivatives[0], abs=1e-12)


def test_order_zero_returns_the_value():
    derivatives = time_taylor_derivatives(
        SystemId.PERLICK_I, None, (1.3, 0.2, -0.4, 0.9), 1, 0, 0
    )

    np.testing.assert_array_equal(derivatives, [1.3])


def test_stationary_independent_variable():
    with pytest.raises(MonotonicityLossError):
        time_taylor_derivatives(
            SystemId.PERLICK_I, None, (1.0, 0.0, 0.1, 0.0), 1, 0, 2
        )


def test_independent_rate():
    rate = independent_rate(SystemId.TAUB_NUT, None, (1.0, 0.0, 0.1, 1.0), 1)

    # p_phi / ((eta + r) r) with eta = 1
    assert rate == pytest.approx(0.5)


def test_turning_point_truncates():
    system = catalog.get_system(SystemId.PERLICK_I)
    trajectory = _hamiltonian_trajectory(
        SystemId.PERLICK_I, None, system.default_state, (0.0, 20.0)
    )

    reduced = reparametrize(trajectory, SystemId.PERLICK_I, None, 0, 3)

    assert reduced.stop_reason == StopReason.MONOTONICITY_LOSS
    assert 1 < len(reduced) < len(trajectory)
    assert np.all(np.diff(reduced.times) > 0.0)
    np.testing.assert_array_equal(reduced.column("du_dy"), 0.0)
