import numpy as np
import pytest

from app.config import settings
from app.exceptions import (
    ConfigError,
    DomainGuardError,
    NoCyclicMomentumError,
    UnknownCaseError,
)
from app.jets.checks import fd_check
from app.systems import catalog
from app.systems.enums import SystemId


def test_list_systems_in_catalog_order():
    systems = catalog.list_systems()

    assert len(systems) == 19
    assert systems[0] == SystemId.PERLICK_I
    assert systems[-1] == SystemId.DIV_D


@pytest.mark.parametrize("system_id", list(SystemId))
def test_every_system_is_registered(system_id: SystemId):
    system = catalog.get_system(system_id)

    assert system.system_id == system_id
    assert len(system.state_labels) == 4


def test_unknown_system():
    with pytest.raises(UnknownCaseError):
        catalog.get_system("dV_a")


def test_unknown_parameter():
    with pytest.raises(ConfigError):
        catalog.hamiltonian(SystemId.PERLICK_I, {"kappa": 1.0}, (1.0, 0.0, 0.0, 1.0))


@pytest.mark.parametrize(
    ("system_id", "params", "state", "expected"),
    [
        (SystemId.PERLICK_I, {"k": 0.0, "A": 0.0}, (1.0, 0.0, 0.0, 1.0), 0.5),
        (SystemId.PERLICK_I, {"k": 1.0, "A": 2.0}, (1.0, 0.0, 0.0, 0.0), 0.0),
        (SystemId.TAUB_NUT, {"eta": 0.0, "alpha": 0.0}, (1.0, 0.0, 0.0, 1.0), 0.5),
        (SystemId.DI_3, {"a": 1.0}, (2.0, 0.0, 2.0, 0.0), 1.0),
        (SystemId.DIII_E, {"c": 1.0}, (0.0, 0.0, 1.0, 2.0), 1.5),
    ],
)
def test_hamiltonian_values(
    system_id: SystemId, params: dict, state: tuple, expected: float
):
    assert catalog.hamiltonian(system_id, params, state) == pytest.approx(expected)


def test_hamiltonian_outside_of_domain():
    with pytest.raises(DomainGuardError):
        catalog.hamiltonian(SystemId.PERLICK_I, None, (0.0, 0.0, 0.1, 1.0))


@pytest.mark.parametrize(
    ("system_id", "component"),
    [(SystemId.PERLICK_I, 3), (SystemId.DI_3, 3), (SystemId.DII_D, 3)],
)
def test_cyclic_momentum_has_zero_derivative(
    system_id: SystemId, component: int, rng: np.random.Generator
):
    for _ in range(10):
        state = catalog.sample_state(system_id, None, rng)
        assert catalog.hamilton_rhs(system_id, None, state)[component] == 0.0


@pytest.mark.parametrize(
    ("system_id", "state", "expected"),
    [
        (SystemId.PERLICK_I, (1.0, 0.0, 0.0, 3.0), 3.0),
        (SystemId.DI_3, (1.0, 0.0, 0.0, 2.0), 2.0),
        (SystemId.TAUB_NUT, (1.0, 0.4, 0.2, 0.7), 0.7),
    ],
)
def test_cyclic_momentum(system_id: SystemId, state: tuple, expected: float):
    assert catalog.cyclic_momentum(system_id, state) == expected


@pytest.mark.parametrize("system_id", [SystemId.DII_A, SystemId.DIV_B])
def test_no_cyclic_momentum(system_id: SystemId):
    with pytest.raises(NoCyclicMomentumError):
        catalog.cyclic_momentum(system_id, (1.0, 0.5, 0.8, 0.3))


@pytest.mark.parametrize(
    "system_id",
    [
        SystemId.PERLICK_I,
        SystemId.TAUB_NUT,
        SystemId.DI_1,
        SystemId.DI_3,
        SystemId.DII_A,
        SystemId.DII_B,
        SystemId.DII_D,
        SystemId.DIII_E,
    ],
)
@pytest.mark.parametrize("seed", [7, 42, 2024])
def test_displayed_equations_match_symplectic_gradient(
    system_id: SystemId, seed: int
):
    rng = np.random.default_rng(seed)
    states = [
        catalog.sample_state(system_id, None, rng)
        for _ in range(settings.rhs_sample_count)
    ]

    mismatch = catalog.transcription_diagnostics(system_id, None, states)

    assert mismatch is not None
    assert mismatch.max() <= settings.rhs_transcription_threshold


def test_transcription_mismatch_is_reported():
    # The displayed p_u equation of the second Darboux I case carries a v²
    # where the Hamiltonian gives v
    system = catalog.get_system(SystemId.DI_2)
    state = np.array(system.default_state)

    mismatch = catalog.transcription_diagnostics(SystemId.DI_2, None, [state])

    assert mismatch is not None
    assert mismatch[2] > 1e-3
    assert mismatch[[0, 1, 3]].max() <= settings.rhs_transcription_threshold


def test_darboux_iii_a_w4_sign_mismatch_is_reported(rng: np.random.Generator):
    # The displayed dw4/dt has -a2 (w1² - w2² - 4) where the Hamiltonian gives
    # a2 (w2² - w1² - 4), a gap of 8 a2 / (w1² + w2² + 4)²
    system = catalog.get_system(SystemId.DIII_A)
    params = system.bind_params()
    states = [system.sample_state(params, rng) for _ in range(5)]

    mismatch = catalog.transcription_diagnostics(SystemId.DIII_A, None, states)

    assert mismatch is not None
    assert mismatch[3] > 1e-3
    assert mismatch[:3].max() <= settings.rhs_transcription_threshold


@pytest.mark.parametrize("system_id", [SystemId.DIV_B, SystemId.DIV_C])
def test_systems_without_displayed_equations(system_id: SystemId):
    system = catalog.get_system(system_id)
    state = np.array(system.default_state)
    params = system.bind_params()

    assert catalog.transcription_diagnostics(system_id, None, [state]) is None
    np.testing.assert_array_equal(
        system.hamilton_rhs(params, state), system.symplectic_gradient(params, state)
    )


@pytest.mark.parametrize("system_id", list(SystemId))
def test_default_state_inside_domain(system_id: SystemId):
    system = catalog.get_system(system_id)
    params = system.bind_params()

    assert system.guard_margin(params, system.default_state) > settings.window_margin


@pytest.mark.parametrize("seed", [7, 42, 2024])
@pytest.mark.parametrize("system_id", list(SystemId))
def test_hamiltonian_derivatives_match_finite_differences(
    system_id: SystemId, seed: int
):
    rng = np.random.default_rng(seed)
    system = catalog.get_system(system_id)
    params = system.bind_params()

    for _ in range(10):
        state = system.sample_state(params, rng)
        discrepancy = fd_check(lambda s: system.hamiltonian(params, s), state)
        assert discrepancy <= settings.fd_check_threshold
