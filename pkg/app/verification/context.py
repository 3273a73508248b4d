"""Inputs of the verification of one case, resolved from the run config"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from app.enums import Provenance, StopReason
from app.integrate.hamiltonian import hamiltonian_trajectory
from app.integrate.trajectory import Trajectory
from app.reduce.base import ReductionCase
from app.reduce.catalog import case_inputs, get_case
from app.systems.base import HamiltonianSystem
from app.systems.enums import SystemId

from .models import CaseOverride, RunConfig, Thresholds


@dataclass(frozen=True)
class CaseContext:
    system_id: SystemId
    params: dict[str, float]
    state: list[float]
    span: tuple[float, float]
    tol: float
    # Run seed shifted by the position of the case in the catalog
    seed: int
    thresholds: Thresholds
    override: CaseOverride
    provenance: dict[str, Provenance] = field(default_factory=dict)
    # Filled by the metrics with every integration they run
    stop_reasons: dict[str, StopReason] = field(default_factory=dict)
    # Reduced integrations which stopped before the end of their window
    early_stops: dict[str, str] = field(default_factory=dict)

    @property
    def case(self) -> ReductionCase:
        return get_case(self.system_id)

    @property
    def system(self) -> HamiltonianSystem:
        return self.case.system

    @cached_property
    def constants(self) -> dict[str, float]:
        return self.case.constants(self.params, self.state)

    @cached_property
    def bound(self) -> dict[str, float]:
        """Parameters merged with the reduction constants"""
        return self.case.bound_constants(self.params, self.state)

    @cached_property
    def flow(self) -> Trajectory:
        """Hamiltonian trajectory through the initial state over the window"""
        trajectory = hamiltonian_trajectory(
            self.system_id, self.params, self.state, self.span, self.tol
        )
        self.stop_reasons["flow"] = trajectory.stop_reason
        return trajectory

    def rng(self, stream: int) -> np.random.Generator:
        """Generator of one metric, independent of the order metrics run in"""
        return np.random.default_rng((self.seed, stream))


def case_context(system_id: SystemId, config: RunConfig) -> CaseContext:
    override = config.override(system_id)
    case = get_case(system_id)
    params, state = case_inputs(
        system_id,
        override.params or None,
        override.initial_state,
        override.preset,
    )
    provenance = dict.fromkeys(params, Provenance.CONFIG)
    if override.preset is not None:
        provenance[case.preset(override.preset).parameter] = Provenance.PRESET
    provenance.update(
        dict.fromkeys(case.constants(params, state), Provenance.DERIVED)
    )
    return CaseContext(
        system_id=system_id,
        params=params,
        state=state,
        span=override.window or case.time_span,
        tol=config.tol,
        seed=config.seed + list(SystemId).index(system_id),
        thresholds=config.thresholds,
        override=override,
        provenance=provenance,
    )
