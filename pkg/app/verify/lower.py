"""Checks on the lower-bound constructions and the G_n family."""

from collections.abc import Iterator
from typing import Any

from app.core.composer import compose_theorem
from app.core.multigraph import induced_subgraph, underlying_undirected
from app.core.partition import condensation
from app.core.solver import exact_cutwidth, ordering_cutwidth
from app.families import (
    claim2_cutwidth,
    claim2_orderings,
    gen_lower_G,
    gen_lower_H,
    gen_lower_K,
    gen_nolow_Gn,
    interleaved_ordering,
)

from .base import Check, Instance

CLAIM2_GRID = [(x, y) for x in (2, 4, 6) for y in range(1, 10)]
TIGHT_PARAMS = [(2, 3), (2, 4), (4, 6)]


def _max_scc_cutwidth(h, partition, budget) -> int:
    undirected = underlying_undirected(h)
    return max(
        exact_cutwidth(induced_subgraph(undirected, members)[0], budget).value
        for members in partition.classes
    )


class ClosedFormCheck(Check):
    """Exact cutwidth of K(x, y) and G(x, y) equals min(1.5x + y, max(2y, x))."""

    def __init__(self, config: dict[str, Any], silent: bool = False):
        super().__init__("claim2", config, silent)

    def instances(self) -> Iterator[Instance]:
        for x, y in CLAIM2_GRID:
            yield Instance(f"x={x} y={y}", (x, y))

    def evaluate(self, payload: Any) -> tuple[bool, str]:
        x, y = payload
        expected = claim2_cutwidth(x, y)
        k = gen_lower_K(x, y)
        g, _ = gen_lower_G(x, y)
        k_value = exact_cutwidth(k, self.budget).value
        g_value = exact_cutwidth(g, self.budget).value
        if k_value != expected or g_value != expected:
            return False, f"expected {expected}, K gives {k_value}, G gives {g_value}"

        monotone, non_monotone = claim2_orderings(x, y)
        if ordering_cutwidth(k, monotone) != (3 * x + 2 * y) // 2:
            return False, "monotone ordering does not reach 1.5x + y"
        if ordering_cutwidth(k, non_monotone) != max(2 * y, x):
            return False, "non-monotone ordering does not reach max(2y, x)"
        return True, f"cutwidth {expected}"


class CounterexampleCheck(Check):
    """H(2, 3) has cutwidth 6 although its SCCs have cutwidth 3 and its condensation 2."""

    def __init__(self, config: dict[str, Any], silent: bool = False):
        super().__init__("fig1", config, silent)

    def instances(self) -> Iterator[Instance]:
        yield Instance("x=2 y=3", (2, 3))

    def evaluate(self, payload: Any) -> tuple[bool, str]:
        x, y = payload
        h = gen_lower_H(x, y)
        dag, partition = condensation(h)
        value = exact_cutwidth(underlying_undirected(h), self.budget).value
        scc_width = _max_scc_cutwidth(h, partition, self.budget)
        dag_width = exact_cutwidth(underlying_undirected(dag), self.budget).value
        sizes = sorted(len(members) for members in partition.classes)
        detail = f"cutwidth={value} scc={scc_width} condensation={dag_width}"
        passed = (
            value == (3 * x + 2 * y) // 2
            and scc_width == y
            and dag_width == x
            and sizes[-1] == 2 * y + 3
            and sizes[:-1] == [1] * (len(sizes) - 1)
        )
        return passed, detail


class TightnessCheck(Check):
    """The 1.5x + y ordering on G(x, y) is optimal, so the constant 1.5 is tight."""

    def __init__(self, config: dict[str, Any], silent: bool = False):
        super().__init__("prop2", config, silent)

    def instances(self) -> Iterator[Instance]:
        for x, y in TIGHT_PARAMS:
            yield Instance(f"x={x} y={y}", (x, y))

    def evaluate(self, payload: Any) -> tuple[bool, str]:
        x, y = payload
        g, p = gen_lower_G(x, y)
        certificate = compose_theorem(g, p, budget=self.budget)
        exact = exact_cutwidth(g, self.budget).value
        target = (3 * x + 2 * y) // 2
        detail = f"achieved={certificate.achieved} exact={exact} target={target}"
        passed = (
            certificate.x == x
            and certificate.y == y
            and certificate.achieved == target
            and exact == target
        )
        return passed, detail


class ConstantWidthCheck(Check):
    """G_n: condensation cutwidth n, SCC cutwidth 2, own cutwidth at most 5."""

    def __init__(self, config: dict[str, Any], silent: bool = False):
        super().__init__("prop3", config, silent)

    def instances(self) -> Iterator[Instance]:
        for n in range(3, 9):
            yield Instance(f"n={n}", n)

    def evaluate(self, payload: Any) -> tuple[bool, str]:
        n = payload
        graph = gen_nolow_Gn(n)
        undirected = underlying_undirected(graph)
        dag, partition = condensation(graph)
        dag_width = exact_cutwidth(underlying_undirected(dag), self.budget).value
        scc_width = _max_scc_cutwidth(graph, partition, self.budget)
        interleaved = ordering_cutwidth(undirected, interleaved_ordering(n))
        exact = exact_cutwidth(undirected, self.budget).value
        detail = (
            f"condensation={dag_width} scc={scc_width} "
            f"interleaved={interleaved} exact={exact}"
        )
        passed = (
            dag_width == n
            and scc_width == 2
            and len(partition) == 2
            and interleaved <= 5
            and exact <= 5
        )
        return passed, detail
