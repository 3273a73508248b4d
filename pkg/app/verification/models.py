"""Set of pydantic models describing run configurations and verification
reports
"""

from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.config import settings
from app.enums import Provenance, StopReason, Verdict
from app.systems.enums import SystemId


class Thresholds(BaseModel):
    """Threshold of every metric. Values at or below it pass, except for the
    negative control which must reach it.
    """

    model_config = ConfigDict(extra="forbid")

    rhs_transcription: float = settings.rhs_transcription_threshold
    fd_check: float = settings.fd_check_threshold
    energy_drift: float = settings.energy_drift_threshold
    cyclic_drift: float = settings.cyclic_drift_threshold
    reduced_vs_full: float = settings.reduced_vs_full_threshold
    closure_consistency: float = settings.closure_consistency_threshold
    raised_consistency: float = settings.raised_consistency_threshold
    linear_residual: float = settings.linear_residual_threshold
    negative_control: float = settings.negative_control_threshold
    symmetry_max_residual: float = settings.symmetry_residual_threshold
    commutator: float = settings.commutator_threshold
    closure_residual: float = settings.closure_residual_threshold
    closed_form_residual: float = settings.closed_form_threshold
    structure_fit: float = settings.structure_fit_threshold


class CaseOverride(BaseModel):
    model_config = ConfigDict(extra="forbid")

    params: dict[str, float] = Field(
        default_factory=dict,
        description="Parameters replacing the defaults of the family",
    )
    preset: str | None = Field(
        None,
        description="Linearizability preset solved for its parameter",
        examples=["linearizable"],
    )
    window: tuple[float, float] | None = Field(
        None, description="Time window of the Hamiltonian integration"
    )
    initial_state: tuple[float, float, float, float] | None = Field(
        None, description="Initial state (q1, q2, p1, p2)"
    )
    force_second_order: bool = Field(
        False,
        description=(
            "Evaluate conditional linearizations with the parameters of the "
            "case even when their condition does not hold"
        ),
    )


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    seed: int = settings.default_seed
    tol: float = settings.default_tol
    thresholds: Thresholds = Field(default_factory=Thresholds)
    cases: list[SystemId] | None = Field(
        None, description="Cases to verify, all of them when omitted"
    )
    case: dict[SystemId, CaseOverride] = Field(
        default_factory=dict, description="Per case overrides"
    )

    @field_validator("tol")
    @classmethod
    def tolerance_in_range(cls, value: float) -> float:
        if not settings.min_tol <= value <= settings.max_tol:
            msg = (
                f"tol must lie in [{settings.min_tol:g}, {settings.max_tol:g}], "
                f"got {value:g}"
            )
            raise ValueError(msg)
        return value

    @property
    def selected_cases(self) -> list[SystemId]:
        return list(SystemId) if self.cases is None else list(self.cases)

    def override(self, system_id: SystemId) -> CaseOverride:
        return self.case.get(system_id, CaseOverride())


class MetricResult(BaseModel):
    name: str = Field(..., examples=["energy_drift"])
    value: float | None = Field(
        None, description="Worst value over the checked items, null if not applicable"
    )
    threshold: float | None = None
    verdict: Verdict
    diagnostics: list[str] = Field(default_factory=list)


class VerificationReport(BaseModel):
    case_id: SystemId
    params: dict[str, float]
    constants: dict[str, float]
    provenance: dict[str, Provenance]
    metrics: list[MetricResult] = Field(default_factory=list)
    stop_reasons: dict[str, StopReason] = Field(default_factory=dict)
    seed: int
    tol: float
    wall_time: float = Field(0.0, description="Seconds, excluded from comparisons")
    error: str | None = None
    diagnostics: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.error is None and all(
            metric.verdict != Verdict.FAIL for metric in self.metrics
        )

    def metric(self, name: str) -> MetricResult:
        return next(metric for metric in self.metrics if metric.name == name)


class SuiteReport(BaseModel):
    version: str = settings.app_version
    seed: int
    tol: float
    reports: list[VerificationReport]
    passed: bool
