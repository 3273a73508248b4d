import math

import pytest

from app.enums import Verdict
from app.exceptions import RadicandError, SingularLocusError
from app.verification.verdicts import Item, assess, combine, failed, not_applicable


def _raise_radicand() -> float:
    raise RadicandError("w3", -0.5)


def test_assess_pass():
    item = assess("second_order", lambda: 1e-9, 1e-6)

    assert item == Item("second_order", 1e-9, Verdict.PASS)


def test_assess_fail_without_fallback():
    item = assess("second_order", lambda: 1e-3, 1e-6)

    assert item.verdict == Verdict.FAIL
    assert item.value == 1e-3
    assert "second_order" in item.note


def test_assess_fallback_turns_into_diagnostic():
    item = assess(
        "second_order",
        lambda: 1e-3,
        1e-6,
        fallback=("second_order_derived", lambda: 1e-12),
    )

    assert item.verdict == Verdict.DIAGNOSTIC
    assert item.label == "second_order_derived"
    assert item.value == 1e-12
    assert "second_order_derived holds" in item.note


def test_assess_fallback_failing_too():
    item = assess(
        "second_order",
        lambda: 1e-3,
        1e-6,
        fallback=("second_order_derived", lambda: 1e-2),
    )

    assert item.verdict == Verdict.FAIL
    assert item.value == 1e-2


def test_assess_measure_raising():
    item = assess("w3", _raise_radicand, 1e-6)

    assert item.verdict == Verdict.FAIL
    assert math.isnan(item.value)
    assert "w3" in item.note


@pytest.mark.parametrize(
    ("value", "verdict"),
    [(1e-2, Verdict.PASS), (1e-3, Verdict.PASS), (1e-5, Verdict.FAIL)],
)
def test_assess_reach(value: float, verdict: Verdict):
    assert assess("control", lambda: value, 1e-3, reach=True).verdict == verdict


def test_combine_nothing_to_check():
    result = combine("closed_form_residual", [], 1e-7)

    assert result.verdict == Verdict.NOT_APPLICABLE
    assert result.value is None


def test_combine_worst_item():
    items = [
        Item("a", 1e-9, Verdict.PASS),
        Item("b", 1e-7, Verdict.DIAGNOSTIC, "b from its derived form"),
    ]

    result = combine("linear_residual", items, 1e-6, notes=["extra"])

    assert result.value == 1e-7
    assert result.threshold == 1e-6
    assert result.verdict == Verdict.DIAGNOSTIC
    assert result.diagnostics == ["b from its derived form", "extra"]


def test_combine_reach_takes_the_smallest_value():
    items = [Item("a", 0.5, Verdict.PASS), Item("b", 2e-3, Verdict.PASS)]

    assert combine("negative_control", items, 1e-3, reach=True).value == 2e-3


def test_combine_failure_wins():
    items = [
        Item("a", math.nan, Verdict.FAIL, "a failed"),
        Item("b", 1e-3, Verdict.DIAGNOSTIC),
    ]

    result = combine("fd_check", items, 1e-6)

    assert result.verdict == Verdict.FAIL
    assert result.value is None


def test_not_applicable_and_failed():
    assert not_applicable("cyclic_drift", "no cyclic momentum").diagnostics == [
        "no cyclic momentum"
    ]
    result = failed("energy_drift", 1e-8, SingularLocusError("left the domain"))
    assert result.verdict == Verdict.FAIL
    assert result.diagnostics == ["left the domain"]
