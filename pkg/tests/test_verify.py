"""Tests for the verification checks."""

import pytest

from app.verify import (
    SUITES,
    CheckResult,
    ClassChoiceCheck,
    ClosedFormCheck,
    ConstantWidthCheck,
    CounterexampleCheck,
    OracleCheck,
    SubdivisionCheck,
    TightnessCheck,
    UpperBoundCheck,
    run_suites,
)
from app.verify.base import Check, Instance

SMALL = {"trials": 6, "seed": 11, "max_n": 6}


@pytest.mark.parametrize(
    "check_class,expected_instances",
    [
        (ClosedFormCheck, 27),
        (CounterexampleCheck, 1),
        (TightnessCheck, 3),
        (ConstantWidthCheck, 6),
    ],
)
def test_fixed_suites_pass(check_class, expected_instances):
    """Test the suites over the named constructions."""
    results = check_class({}, silent=True).run()
    assert len(results) == expected_instances
    failures = [r.report_line() for r in results if not r.passed]
    assert failures == []


@pytest.mark.parametrize(
    "check_class", [SubdivisionCheck, UpperBoundCheck, ClassChoiceCheck, OracleCheck]
)
def test_random_suites_pass(check_class):
    results = check_class(SMALL, silent=True).run()
    assert len(results) == SMALL["trials"]
    assert all(r.passed for r in results), [r.report_line() for r in results]
    assert [r.seed for r in results] == list(range(11, 17))


def test_random_instances_are_reproducible():
    first = [i.label for i in UpperBoundCheck(SMALL, silent=True).instances()]
    second = [i.label for i in UpperBoundCheck(SMALL, silent=True).instances()]
    assert first == second


def test_suite_registry():
    assert sorted(SUITES) == [
        "claim1",
        "claim2",
        "fig1",
        "oracle",
        "prop1",
        "prop2",
        "prop3",
        "thm1",
    ]
    for name, check_class in SUITES.items():
        assert check_class({}, silent=True).name == name


def test_run_suites_sorts_results():
    settings = {"prop2": {}, "fig1": {}}
    results = run_suites(["prop2", "fig1"], settings, silent=True)
    assert [r.check for r in results] == ["fig1", "prop2", "prop2", "prop2"]


class _ExplodingCheck(Check):
    def __init__(self):
        super().__init__("boom", {}, silent=True)

    def instances(self):
        yield Instance("only", None, seed=5)

    def evaluate(self, payload):
        raise RuntimeError("kaboom")


def test_exceptions_become_failures():
    """Test that an error while evaluating is reported as a failure."""
    (result,) = _ExplodingCheck().run()
    assert not result.passed
    assert result.report_line() == "FAIL boom only seed 5 (RuntimeError: kaboom)"


def test_report_lines():
    assert CheckResult("claim2", "x=2 y=3", True, None, "cutwidth 6").report_line() == (
        "PASS claim2 x=2 y=3"
    )
    assert CheckResult("prop1", "trial=3", False, 10).report_line() == "FAIL prop1 trial=3 seed 10"
