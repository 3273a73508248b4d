import json
from pathlib import Path

import pytest

from app.config import settings
from app.enums import StopReason, Verdict
from app.exceptions import SingularLocusError
from app.systems.enums import SystemId
from app.verification import runner
from app.verification.context import CaseContext
from app.verification.flow_metrics import energy_drift
from app.verification.models import (
    CaseOverride,
    MetricResult,
    RunConfig,
    VerificationReport,
)
from app.verification.runner import (
    METRICS,
    run_case,
    run_suite,
    suite_report,
    write_report,
)
from app.verification.symmetry_metrics import symmetry_max_residual


def _passing(ctx: CaseContext) -> MetricResult:
    return MetricResult(
        name="energy_drift", value=0.0, threshold=1e-8, verdict=Verdict.PASS
    )


def _failing(ctx: CaseContext) -> MetricResult:
    msg = "Left the domain"
    raise SingularLocusError(msg)


def _crashing(ctx: CaseContext) -> MetricResult:
    msg = "Unexpected"
    raise RuntimeError(msg)


def _report(system_id: SystemId, error: str | None = None) -> VerificationReport:
    return VerificationReport(
        case_id=system_id,
        params={},
        constants={},
        provenance={},
        seed=42,
        tol=1e-10,
        error=error,
    )


def test_metrics_order():
    assert [name for name, _ in METRICS] == [
        "rhs_transcription",
        "fd_check",
        "energy_drift",
        "cyclic_drift",
        "reduced_vs_full",
        "closure_consistency",
        "raised_consistency",
        "linear_residual",
        "negative_control",
        "symmetry_max_residual",
        "commutator",
        "closure_residual",
        "closed_form_residual",
        "structure_fit",
    ]


def test_failures_and_crashes_are_recorded(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(
        runner,
        "METRICS",
        (
            ("energy_drift", _passing),
            ("fd_check", _failing),
            ("commutator", _crashing),
        ),
    )

    report = run_case(SystemId.PERLICK_I, RunConfig())

    assert [metric.name for metric in report.metrics] == [
        "energy_drift",
        "fd_check",
        "commutator",
    ]
    assert report.metric("energy_drift").verdict == Verdict.PASS
    failure = report.metric("fd_check")
    assert failure.verdict == Verdict.FAIL
    assert failure.threshold == settings.fd_check_threshold
    assert failure.diagnostics == ["Left the domain"]
    assert report.metric("commutator").verdict == Verdict.FAIL
    assert report.error == "commutator : RuntimeError : Unexpected"
    assert not report.passed


def test_case_outside_its_domain():
    config = RunConfig(
        case={SystemId.PERLICK_I: CaseOverride(initial_state=(0.0, 0.0, 0.1, 1.0))}
    )

    report = run_case(SystemId.PERLICK_I, config)

    assert report.metrics == []
    assert report.error is not None
    assert not report.passed


def test_reports_are_deterministic(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(
        runner,
        "METRICS",
        (
            ("energy_drift", energy_drift),
            ("symmetry_max_residual", symmetry_max_residual),
        ),
    )

    first = run_case(SystemId.PERLICK_I, RunConfig())
    second = run_case(SystemId.PERLICK_I, RunConfig())

    assert first.passed
    assert first.stop_reasons == {"flow": StopReason.SPAN_END}
    assert first.model_dump_json(exclude={"wall_time"}) == second.model_dump_json(
        exclude={"wall_time"}
    )


def test_suite_keeps_the_selected_order(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(
        runner, "run_case", lambda system_id, config: _report(system_id)
    )
    config = RunConfig(cases=[SystemId.TAUB_NUT, SystemId.PERLICK_I])

    reports = run_suite(config)

    assert [report.case_id for report in reports] == [
        SystemId.TAUB_NUT,
        SystemId.PERLICK_I,
    ]


def test_suite_report(tmp_path: Path):
    config = RunConfig(seed=5)
    reports = [_report(SystemId.PERLICK_I), _report(SystemId.TAUB_NUT, "crash")]
    path = tmp_path / "report.json"

    document = write_report(suite_report(config, reports), path)

    data = json.loads(path.read_text(encoding="utf-8"))
    assert json.loads(document) == data
    assert list(data) == ["version", "seed", "tol", "reports", "passed"]
    assert data["seed"] == 5
    assert data["passed"] is False
    assert [report["case_id"] for report in data["reports"]] == [
        "perlick_i",
        "taub_nut",
    ]
