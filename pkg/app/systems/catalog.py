"""Catalog of the nineteen superintegrable systems"""

from collections.abc import Iterable, Mapping
from functools import cache

import numpy as np

from app.exceptions import NoCyclicMomentumError, UnknownCaseError
from app.jets.jet import value_of

from .base import HamiltonianSystem
from .darboux_i import DarbouxI1, DarbouxI2, DarbouxI3
from .darboux_ii import DarbouxIIA, DarbouxIIB, DarbouxIIC, DarbouxIID
from .darboux_iii import (
    DarbouxIIIA,
    DarbouxIIIB,
    DarbouxIIIC,
    DarbouxIIID,
    DarbouxIIIE,
)
from .darboux_iv import DarbouxIVA, DarbouxIVB, DarbouxIVC, DarbouxIVD
from .enums import SystemId
from .models import State, StateLike
from .perlick import PerlickI, PerlickII, TaubNut

_SYSTEM_CLASSES: tuple[type[HamiltonianSystem], ...] = (
    PerlickI,
    PerlickII,
    TaubNut,
    DarbouxI1,
    DarbouxI2,
    DarbouxI3,
    DarbouxIIA,
    DarbouxIIB,
    DarbouxIIC,
    DarbouxIID,
    DarbouxIIIA,
    DarbouxIIIB,
    DarbouxIIIC,
    DarbouxIIID,
    DarbouxIIIE,
    DarbouxIVA,
    DarbouxIVB,
    DarbouxIVC,
    DarbouxIVD,
)


def list_systems() -> list[SystemId]:
    return list(SystemId)


def parse_system_id(value: str | SystemId) -> SystemId:
    try:
        return SystemId(value)
    except ValueError as error:
        msg = f"Unknown case {value!r}, expected one of {[str(s) for s in SystemId]}"
        raise UnknownCaseError(msg) from error


@cache
def get_system(system_id: str | SystemId) -> HamiltonianSystem:
    system_id = parse_system_id(system_id)
    system_class = next(c for c in _SYSTEM_CLASSES if c.system_id == system_id)
    return system_class()


def hamiltonian(
    system_id: str | SystemId,
    params: Mapping[str, float] | None,
    state: StateLike,
) -> float:
    system = get_system(system_id)
    return system.energy(system.bind_params(params), np.asarray(state, dtype=float))


def hamilton_rhs(
    system_id: str | SystemId,
    params: Mapping[str, float] | None,
    state: StateLike,
) -> np.ndarray:
    system = get_system(system_id)
    return system.hamilton_rhs(
        system.bind_params(params), np.asarray(state, dtype=float)
    )


def symplectic_gradient(
    system_id: str | SystemId,
    params: Mapping[str, float] | None,
    state: StateLike,
) -> np.ndarray:
    system = get_system(system_id)
    return system.symplectic_gradient(
        system.bind_params(params), np.asarray(state, dtype=float)
    )


def cyclic_momentum(system_id: str | SystemId, state: StateLike) -> float:
    system = get_system(system_id)
    momentum = system.cyclic_momentum(state)
    if momentum is None:
        msg = (
            f"{system.system_id} has no plain cyclic momentum, "
            "its reduction goes through a momentum closure"
        )
        raise NoCyclicMomentumError(msg)
    return momentum


def transcription_diagnostics(
    system_id: str | SystemId,
    params: Mapping[str, float] | None,
    states: Iterable[State],
) -> np.ndarray | None:
    """Largest relative mismatch per component between the displayed Hamilton
    equations and the symplectic gradient, None without displayed equations.
    """
    system = get_system(system_id)
    bound = system.bind_params(params)
    worst = np.zeros(4)
    for state in states:
        displayed = system.displayed_rhs(bound, state)
        if displayed is None:
            return None
        exact = system.symplectic_gradient(bound, state)
        shown = np.array([value_of(v) for v in displayed])
        worst = np.maximum(worst, np.abs(shown - exact) / (1.0 + np.abs(exact)))
    return worst


def sample_state(
    system_id: str | SystemId,
    params: Mapping[str, float] | None,
    rng: np.random.Generator,
) -> State:
    system = get_system(system_id)
    return system.sample_state(system.bind_params(params), rng)
