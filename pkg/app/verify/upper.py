"""Upper bounds from compatible orderings on random partitioned multigraphs."""

from collections.abc import Iterator
from typing import Any

import numpy as np

from app.core.composer import (
    block_bounds_hold,
    claim1_cases,
    compose_simple,
    compose_theorem,
    optimal_class_orderings,
    optimal_quotient_ordering,
)
from app.core.partition import quotient_multigraph
from app.core.solver import exact_cutwidth, ordering_cutwidth
from app.families import gen_random

from .base import Check, Instance


def random_partitioned_instances(seed: int, trials: int, max_n: int) -> Iterator[Instance]:
    """Seeded (graph, partition) pairs with 1..max_n vertices."""
    for trial in range(trials):
        instance_seed = seed + trial
        rng = np.random.default_rng([instance_seed, 2])
        n = int(rng.integers(1, max_n + 1))
        classes = int(rng.integers(1, n + 1))
        max_multiplicity = int(rng.integers(1, 4))
        density = float(rng.choice([0.2, 0.3, 0.4, 0.5, 0.6]))
        g, p = gen_random(instance_seed, n, max_multiplicity, density, classes)
        yield Instance(f"trial={trial} n={n} classes={classes}", (g, p), instance_seed)


class UpperBoundCheck(Check):
    """Both composers stay within their bound and never beat the exact cutwidth."""

    def __init__(self, config: dict[str, Any], silent: bool = False):
        super().__init__("thm1", config, silent)

    def instances(self) -> Iterator[Instance]:
        return random_partitioned_instances(self.seed, self.trials, self.max_n or 12)

    def evaluate(self, payload: Any) -> tuple[bool, str]:
        g, p = payload
        exact = exact_cutwidth(g, self.budget).value
        theorem = compose_theorem(g, p, budget=self.budget)
        simple = compose_simple(g, p, budget=self.budget)
        detail = (
            f"x={theorem.x} y={theorem.y} exact={exact} "
            f"theorem={theorem.achieved} simple={simple.achieved}"
        )
        if not theorem.holds:
            return False, f"1.5x + y violated: {detail}"
        if not simple.holds:
            return False, f"2x + y violated: {detail}"
        if theorem.achieved < exact or simple.achieved < exact:
            return False, f"ordering below exact cutwidth: {detail}"
        return True, detail


class ClassChoiceCheck(Check):
    """Every class admits a direction within 1.5x, and the before/after cuts hold.

    Runs once with the exact quotient ordering and once with the identity
    quotient ordering, x being the cutwidth of whichever ordering is used.
    """

    def __init__(self, config: dict[str, Any], silent: bool = False):
        super().__init__("claim1", config, silent)

    def instances(self) -> Iterator[Instance]:
        return random_partitioned_instances(self.seed, self.trials, self.max_n or 12)

    def evaluate(self, payload: Any) -> tuple[bool, str]:
        g, p = payload
        quotient = quotient_multigraph(g, p)
        class_ords = optimal_class_orderings(g, p, self.budget)
        candidates = {
            "optimal": optimal_quotient_ordering(g, p, self.budget),
            "identity": tuple(range(1, len(p) + 1)),
        }
        for name, quotient_ord in candidates.items():
            x = ordering_cutwidth(quotient, quotient_ord)
            for index, class_ord in enumerate(class_ords):
                forward_ok, reverse_ok = claim1_cases(g, p, quotient_ord, index, class_ord, x)
                if not (forward_ok or reverse_ok):
                    return False, f"{name} quotient ordering: class {index} fits neither direction"
                if not block_bounds_hold(g, p, quotient_ord, index, class_ord, x):
                    return False, f"{name} quotient ordering: class {index} breaks a block bound"
        return True, f"classes={len(p)}"
