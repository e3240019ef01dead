"""The subset DP agrees with exhaustive search on small graphs."""

from collections.abc import Iterator
from typing import Any

import numpy as np

from app.core.solver import brute_force_cutwidth, exact_cutwidth, ordering_cutwidth
from app.families import gen_random

from .base import Check, Instance


class OracleCheck(Check):
    def __init__(self, config: dict[str, Any], silent: bool = False):
        super().__init__("oracle", config, silent)

    def instances(self) -> Iterator[Instance]:
        max_n = self.max_n or 7
        for trial in range(self.trials):
            seed = self.seed + trial
            rng = np.random.default_rng([seed, 3])
            n = int(rng.integers(1, max_n + 1))
            max_multiplicity = int(rng.integers(1, 4))
            density = float(rng.choice([0.3, 0.5, 0.7]))
            g, _ = gen_random(seed, n, max_multiplicity, density, 1)
            yield Instance(f"trial={trial} n={n}", g, seed)

    def evaluate(self, payload: Any) -> tuple[bool, str]:
        g = payload
        exact = exact_cutwidth(g, self.budget)
        oracle = brute_force_cutwidth(g)
        if exact.value != oracle.value:
            return False, f"dp {exact.value} != brute force {oracle.value}"
        if ordering_cutwidth(g, exact.witness) != exact.value:
            return False, "dp witness does not achieve its value"
        return True, f"cutwidth {exact.value}"
