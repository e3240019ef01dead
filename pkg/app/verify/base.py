"""Base verification check class."""

from abc import ABC, abstractmethod
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Any, Optional

import structlog

from app.core.solver import DEFAULT_BUDGET

logger = structlog.get_logger()


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check on one instance."""

    check: str
    label: str
    passed: bool
    seed: Optional[int] = None
    detail: str = ""

    @property
    def state(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def sort_key(self) -> tuple:
        return (self.check, -1 if self.seed is None else self.seed, self.label)

    def report_line(self) -> str:
        line = f"{self.state} {self.check} {self.label}"
        if not self.passed:
            if self.seed is not None:
                line += f" seed {self.seed}"
            if self.detail:
                line += f" ({self.detail})"
        return line


@dataclass(frozen=True)
class Instance:
    """One unit of work for a check; ``seed`` is reported on failure."""

    label: str
    payload: Any
    seed: Optional[int] = None


class Check(ABC):
    """Base class for all verification checks."""

    def __init__(self, name: str, config: dict[str, Any], silent: bool = False):
        """Initialize the check.

        Args:
            name: Name of the check as used by ``cwb verify``
            config: Settings for the check (trials, seed, max_n, budget)
            silent: If True, suppress all logging from this check
        """
        self.name = name
        self.trials = config.get("trials", 1)
        self.seed = config.get("seed", 7)
        self.max_n = config.get("max_n")
        self.budget = config.get("budget", DEFAULT_BUDGET)
        self.config = config
        self.logger = logger.bind(check=name)
        self.silent = silent

        if not self.silent:
            self.logger.debug(
                "Check initialized",
                trials=self.trials,
                seed=self.seed,
                max_n=self.max_n,
                budget=self.budget,
            )

    @abstractmethod
    def instances(self) -> Iterator[Instance]:
        """Yield the instances this check runs on."""
        pass

    @abstractmethod
    def evaluate(self, payload: Any) -> tuple[bool, str]:
        """Check one instance.

        Returns:
            Whether the instance passed, and a short detail for the report
        """
        pass

    def run(self) -> list[CheckResult]:
        results = []
        for instance in self.instances():
            try:
                passed, detail = self.evaluate(instance.payload)
            except Exception as e:
                if not self.silent:
                    self.logger.error(
                        "Error evaluating instance",
                        label=instance.label,
                        seed=instance.seed,
                        error=str(e),
                        exc_info=True,
                    )
                passed, detail = False, f"{type(e).__name__}: {e}"

            if not passed and not self.silent:
                self.logger.warning(
                    "Check failed", label=instance.label, seed=instance.seed, detail=detail
                )
            results.append(CheckResult(self.name, instance.label, passed, instance.seed, detail))

        if not self.silent:
            self.logger.info(
                "Check completed",
                instances=len(results),
                failed=sum(not r.passed for r in results),
            )
        return results
