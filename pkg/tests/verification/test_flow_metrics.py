from unittest.mock import patch

import pytest

from app.enums import StopReason, Verdict
from app.systems.enums import SystemId
from app.verification.context import case_context
from app.verification.flow_metrics import (
    cyclic_drift,
    energy_drift,
    fd_check,
    reduced_deviation,
    reduced_vs_full,
    rhs_transcription,
)
from app.verification.models import RunConfig


def test_rhs_transcription(perlick_i_context):
    result = rhs_transcription(perlick_i_context)

    assert result.verdict == Verdict.PASS
    assert result.value <= 1e-10


def test_rhs_transcription_mismatch_is_a_diagnostic():
    ctx = case_context(SystemId.DI_2, RunConfig())

    with patch("app.verification.flow_metrics.logger.warning") as warning:
        result = rhs_transcription(ctx)

    assert result.verdict == Verdict.DIAGNOSTIC
    assert result.value > 1e-3
    assert any("dp_" in diagnostic for diagnostic in result.diagnostics)
    warning.assert_called_once()


def test_rhs_transcription_without_displayed_equations():
    result = rhs_transcription(case_context(SystemId.DIV_B, RunConfig()))

    assert result.verdict == Verdict.NOT_APPLICABLE
    assert result.value is None


def test_fd_check(perlick_i_context):
    result = fd_check(perlick_i_context)

    assert result.verdict == Verdict.PASS
    assert result.value <= 1e-6


def test_energy_drift(perlick_i_context):
    result = energy_drift(perlick_i_context)

    assert result.verdict == Verdict.PASS
    assert result.value <= 1e-8
    assert result.diagnostics == []


def test_cyclic_drift(perlick_i_context):
    result = cyclic_drift(perlick_i_context)

    assert result.verdict == Verdict.PASS
    assert result.value == 0.0


def test_cyclic_drift_without_cyclic_momentum():
    result = cyclic_drift(case_context(SystemId.DI_1, RunConfig()))

    assert result.verdict == Verdict.NOT_APPLICABLE
    assert "cyclic momentum" in result.diagnostics[0]


def test_reduced_deviation(perlick_i_context):
    form = perlick_i_context.case.form("second_order")

    deviation = reduced_deviation(perlick_i_context, form)

    assert deviation == pytest.approx(0.0, abs=1e-6)
    assert "reduced second_order" in perlick_i_context.stop_reasons
    assert perlick_i_context.stop_reasons["flow"] == StopReason.SPAN_END


def test_reduced_vs_full(perlick_i_context):
    result = reduced_vs_full(perlick_i_context)

    assert result.verdict == Verdict.PASS
    assert result.value <= 1e-6


def test_reduced_integration_stopping_early_is_reported():
    ctx = case_context(SystemId.PERLICK_I, RunConfig())
    assert not ctx.flow.truncated

    with patch("app.integrate.solver.settings.max_steps", 3):
        result = reduced_vs_full(ctx)

    assert ctx.stop_reasons["reduced second_order"] == StopReason.MAX_STEPS
    assert any(
        note.startswith("Reduced second_order stopped at y=")
        for note in result.diagnostics
    )
