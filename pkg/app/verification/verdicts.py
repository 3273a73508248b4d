"""Verdicts of the metrics. A metric gathers checked items, each one measured
on a displayed formula and, when that fails and a derived rendition exists,
on the derived one. A passing fallback turns the item into a diagnostic.
"""

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from app.enums import Verdict
from app.exceptions import LabError

from .models import MetricResult

type Measure = Callable[[], float]


@dataclass(frozen=True)
class Item:
    label: str
    value: float
    verdict: Verdict
    note: str | None = None


def _measure(label: str, measure: Measure) -> tuple[float, str | None]:
    try:
        return float(measure()), None
    except LabError as error:
        return math.nan, f"{label} : {error}"


def _holds(value: float, threshold: float, reach: bool) -> bool:
    # NaN never holds
    return value >= threshold if reach else value <= threshold


def assess(
    label: str,
    measure: Measure,
    threshold: float,
    fallback: tuple[str, Measure] | None = None,
    reach: bool = False,
) -> Item:
    """Item measured on `measure`, and on the fallback when it fails. With
    `reach`, the value must be at least the threshold instead of at most.
    """
    value, error = _measure(label, measure)
    if _holds(value, threshold, reach):
        return Item(label, value, Verdict.PASS)
    failure = error or f"{label} : {value:.3e} against {threshold:.0e}"
    if fallback is None:
        return Item(label, value, Verdict.FAIL, failure)

    derived_label, derived_measure = fallback
    derived, derived_error = _measure(derived_label, derived_measure)
    if _holds(derived, threshold, reach):
        note = f"{failure}, {derived_label} holds with {derived:.3e}"
        return Item(derived_label, derived, Verdict.DIAGNOSTIC, note)
    note = f"{failure}, {derived_error or f'{derived_label} : {derived:.3e}'}"
    return Item(derived_label, derived, Verdict.FAIL, note)


def not_applicable(name: str, reason: str) -> MetricResult:
    return MetricResult(
        name=name, verdict=Verdict.NOT_APPLICABLE, diagnostics=[reason]
    )


def failed(name: str, threshold: float, error: LabError) -> MetricResult:
    return MetricResult(
        name=name, threshold=threshold, verdict=Verdict.FAIL, diagnostics=[str(error)]
    )


def combine(
    name: str,
    items: Sequence[Item],
    threshold: float,
    reach: bool = False,
    notes: Sequence[str] = (),
) -> MetricResult:
    """Worst item of the metric: the largest value, or the smallest one for
    a metric which must reach its threshold.
    """
    if not items:
        return not_applicable(name, "Nothing to check for this case")
    values = [item.value for item in items]
    if any(math.isnan(v) for v in values):
        worst = None
    else:
        worst = min(values) if reach else max(values)
    verdicts = {item.verdict for item in items}
    if Verdict.FAIL in verdicts:
        verdict = Verdict.FAIL
    elif Verdict.DIAGNOSTIC in verdicts:
        verdict = Verdict.DIAGNOSTIC
    else:
        verdict = Verdict.PASS
    return MetricResult(
        name=name,
        value=worst,
        threshold=threshold,
        verdict=verdict,
        diagnostics=[*(item.note for item in items if item.note), *notes],
    )
