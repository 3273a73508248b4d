"""Verification of the cases against every metric, one process per case"""

import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from pathlib import Path

from app.config import settings
from app.enums import Verdict
from app.exceptions import LabError
from app.lab_logger import logger
from app.systems.enums import SystemId

from .context import CaseContext, case_context
from .flow_metrics import (
    closure_consistency,
    cyclic_drift,
    energy_drift,
    fd_check,
    raised_consistency,
    reduced_vs_full,
    rhs_transcription,
)
from .linear_metrics import (
    closed_form_metric,
    linear_residual_metric,
    negative_control,
    structure_fit,
)
from .models import MetricResult, RunConfig, SuiteReport, VerificationReport
from .symmetry_metrics import closure_residual_metric, commutator, symmetry_max_residual
from .verdicts import failed

type Metric = Callable[[CaseContext], MetricResult]

# Order of the metrics in every report
METRICS: tuple[tuple[str, Metric], ...] = (
    ("rhs_transcription", rhs_transcription),
    ("fd_check", fd_check),
    ("energy_drift", energy_drift),
    ("cyclic_drift", cyclic_drift),
    ("reduced_vs_full", reduced_vs_full),
    ("closure_consistency", closure_consistency),
    ("raised_consistency", raised_consistency),
    ("linear_residual", linear_residual_metric),
    ("negative_control", negative_control),
    ("symmetry_max_residual", symmetry_max_residual),
    ("commutator", commutator),
    ("closure_residual", closure_residual_metric),
    ("closed_form_residual", closed_form_metric),
    ("structure_fit", structure_fit),
)


def _evaluate(ctx: CaseContext, name: str, metric: Metric) -> MetricResult:
    try:
        result = metric(ctx)
    except LabError as error:
        logger.error("Metric {} of {} failed : {}", name, ctx.system_id, error)
        return failed(name, getattr(ctx.thresholds, name), error)
    logger.debug(
        "{} {} : {} ({})", ctx.system_id, name, result.verdict.value, result.value
    )
    return result


def run_case(system_id: SystemId, config: RunConfig) -> VerificationReport:
    """Report of one case. Crashes are recorded in the report, they never
    abort the rest of the suite.
    """
    logger.info("Verifying {}...", system_id)
    start = time.perf_counter()
    try:
        ctx = case_context(system_id, config)
    except LabError as error:
        logger.error("Cannot set up {} : {}", system_id, error)
        return VerificationReport(
            case_id=system_id,
            params={},
            constants={},
            provenance={},
            seed=config.seed,
            tol=config.tol,
            wall_time=time.perf_counter() - start,
            error=str(error),
        )

    metrics, crashes = [], []
    for name, metric in METRICS:
        try:
            metrics.append(_evaluate(ctx, name, metric))
        except Exception as crash:  # noqa: BLE001
            logger.exception("Metric {} of {} crashed", name, system_id)
            message = f"{name} : {type(crash).__name__} : {crash}"
            crashes.append(message)
            metrics.append(
                MetricResult(
                    name=name,
                    threshold=getattr(ctx.thresholds, name),
                    verdict=Verdict.FAIL,
                    diagnostics=[message],
                )
            )

    report = VerificationReport(
        case_id=system_id,
        params=ctx.params,
        constants=ctx.constants,
        provenance=ctx.provenance,
        metrics=metrics,
        stop_reasons=ctx.stop_reasons,
        seed=ctx.seed,
        tol=ctx.tol,
        wall_time=time.perf_counter() - start,
        error="; ".join(crashes) or None,
    )
    logger.info(
        "{} done in {:.2f}s : {}",
        system_id,
        report.wall_time,
        "passed" if report.passed else "failed",
    )
    return report


def run_suite(
    config: RunConfig, workers: int | None = None
) -> list[VerificationReport]:
    """Reports of the selected cases, in the order of the selection whatever
    the order the workers finish in
    """
    cases = config.selected_cases
    workers = settings.max_workers if workers is None else workers
    logger.info("Running {} cases on {} workers", len(cases), max(workers, 1))
    if workers <= 1 or len(cases) <= 1:
        return [run_case(system_id, config) for system_id in cases]
    with ProcessPoolExecutor(max_workers=min(workers, len(cases))) as executor:
        return list(executor.map(run_case, cases, repeat(config)))


def suite_report(config: RunConfig, reports: list[VerificationReport]) -> SuiteReport:
    return SuiteReport(
        seed=config.seed,
        tol=config.tol,
        reports=reports,
        passed=all(report.passed for report in reports),
    )


def write_report(report: SuiteReport, path: str | Path | None = None) -> str:
    """JSON document of the suite, written to `path` when given"""
    document = report.model_dump_json(indent=2)
    if path is not None:
        Path(path).write_text(document + "\n", encoding="utf-8")
        logger.info("Report written to {}", path)
    return document
