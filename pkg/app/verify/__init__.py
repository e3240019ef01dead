"""Verification checks package."""

from typing import Any

from .base import Check, CheckResult, Instance
from .lower import ClosedFormCheck, ConstantWidthCheck, CounterexampleCheck, TightnessCheck
from .oracle import OracleCheck
from .subdivision import SubdivisionCheck
from .upper import ClassChoiceCheck, UpperBoundCheck

SUITES: dict[str, type[Check]] = {
    "claim1": ClassChoiceCheck,
    "claim2": ClosedFormCheck,
    "fig1": CounterexampleCheck,
    "oracle": OracleCheck,
    "prop1": SubdivisionCheck,
    "prop2": TightnessCheck,
    "prop3": ConstantWidthCheck,
    "thm1": UpperBoundCheck,
}


def run_suites(
    names: list[str], settings: dict[str, dict[str, Any]], silent: bool = False
) -> list[CheckResult]:
    """Run the named suites ("all" expands to every suite), sorted by check then seed.

    Args:
        names: Suite names
        settings: Per-suite check configuration keyed by suite name
        silent: If True, suppress per-check logging
    """
    if "all" in names:
        names = list(SUITES)
    results: list[CheckResult] = []
    for name in sorted(set(names)):
        check = SUITES[name](settings.get(name, {}), silent=silent)
        results.extend(check.run())
    return sorted(results, key=CheckResult.sort_key)


__all__ = [
    "SUITES",
    "Check",
    "CheckResult",
    "ClassChoiceCheck",
    "ClosedFormCheck",
    "ConstantWidthCheck",
    "CounterexampleCheck",
    "Instance",
    "OracleCheck",
    "SubdivisionCheck",
    "TightnessCheck",
    "UpperBoundCheck",
    "run_suites",
]
