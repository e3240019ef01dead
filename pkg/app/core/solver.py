"""Ordering evaluation and exact cutwidth by dynamic programming over vertex subsets."""

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Union

import networkx as nx
import numpy as np
import structlog

from app.core.exceptions import BudgetExceededError, GraphError
from app.core.multigraph import (
    Multigraph,
    Ordering,
    adjacency_matrix,
    induced_subgraph,
    to_networkx,
    validate_ordering,
)

logger = structlog.get_logger()

DEFAULT_BUDGET = 20


@dataclass(frozen=True)
class CutwidthResult:
    """Minimum cutwidth together with an ordering achieving it."""

    value: int
    witness: Ordering


@dataclass(frozen=True)
class ThresholdExceeded:
    """Every ordering has a prefix cut above ``threshold``."""

    threshold: int


def _require_undirected(g: Multigraph) -> None:
    if g.directed:
        raise GraphError("cutwidth is defined on undirected multigraphs; use underlying_undirected")


def prefix_cuts(g: Multigraph, ordering: Iterable[int]) -> list[int]:
    """Values of the |V| - 1 proper prefix cuts of ``ordering``, in order."""
    _require_undirected(g)
    sequence = validate_ordering(g, ordering)
    if g.vertex_count <= 1:
        return []
    position = np.empty(g.vertex_count + 1, dtype=np.int64)
    position[list(sequence)] = np.arange(g.vertex_count)
    # An edge crosses the prefix cuts between its two endpoints' positions.
    delta = np.zeros(g.vertex_count, dtype=np.int64)
    for u, v, m in g.edges:
        first, last = sorted((position[u], position[v]))
        delta[first] += m
        delta[last] -= m
    return [int(c) for c in np.cumsum(delta)[:-1]]


def ordering_cutwidth(g: Multigraph, ordering: Iterable[int]) -> int:
    """Largest prefix cut of ``ordering``; 0 for graphs with at most one vertex."""
    return max(prefix_cuts(g, ordering), default=0)


def _subset_cuts(adj: np.ndarray) -> np.ndarray:
    """cut[S] for every subset S of range(n), encoded as a bitmask."""
    n = adj.shape[0]
    degree = adj.sum(axis=1)
    cut = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        # weight[T] = multiplicity between v and the subset T of range(v)
        weight = np.zeros(1, dtype=np.int64)
        for u in range(v):
            weight = np.concatenate([weight, weight + adj[v, u]])
        low = 1 << v
        cut[low : low << 1] = cut[:low] + degree[v] - 2 * weight
    return cut


def _table_dtype(total: int) -> np.dtype:
    for dtype in (np.uint8, np.uint16, np.uint32):
        if total < np.iinfo(dtype).max:
            return np.dtype(dtype)
    return np.dtype(np.int64)


def _solve_connected(g: Multigraph, threshold: Optional[int]) -> Optional[CutwidthResult]:
    """Subset DP on a graph small enough to tabulate; None if pruned by threshold."""
    n = g.vertex_count
    if n <= 1:
        return CutwidthResult(0, tuple(g.vertices))

    cut = _subset_cuts(adjacency_matrix(g))
    dtype = _table_dtype(g.total_multiplicity)
    unreachable = np.iinfo(dtype).max

    popcount = np.zeros(1 << n, dtype=np.int8)
    for v in range(n):
        low = 1 << v
        popcount[low : low << 1] = popcount[:low] + 1

    # best[S]: cutwidth of the best ordering of S placed first
    best = np.full(1 << n, unreachable, dtype=dtype)
    best[0] = 0
    for size in range(1, n + 1):
        masks = np.flatnonzero(popcount == size)
        smallest = np.full(masks.shape, unreachable, dtype=dtype)
        for v in range(n):
            bit = 1 << v
            has_v = (masks & bit) != 0
            smallest[has_v] = np.minimum(smallest[has_v], best[masks[has_v] ^ bit])
        value = np.maximum(smallest.astype(np.int64), cut[masks])
        if threshold is not None:
            value[value > threshold] = unreachable
        best[masks] = np.minimum(value, unreachable).astype(dtype)

    full = (1 << n) - 1
    if best[full] == unreachable:
        return None

    reversed_order = []
    remaining = full
    while remaining:
        chosen = min(
            (v for v in range(n) if remaining >> v & 1),
            key=lambda v: (int(best[remaining ^ (1 << v)]), v),
        )
        reversed_order.append(chosen + 1)
        remaining ^= 1 << chosen
    return CutwidthResult(int(best[full]), tuple(reversed(reversed_order)))


def exact_cutwidth(
    g: Multigraph,
    budget: Optional[int] = DEFAULT_BUDGET,
    threshold: Optional[int] = None,
) -> Union[CutwidthResult, ThresholdExceeded]:
    """Exact minimum cutwidth of an undirected multigraph with a witness ordering.

    Connected components are solved separately and their witnesses are
    concatenated by smallest vertex id. Among optimal last vertices the DP
    backtracking picks the smallest id, so witnesses are deterministic.

    Args:
        g: Undirected multigraph
        budget: Largest vertex count accepted; None disables the check
        threshold: If set, orderings with a prefix cut above it are pruned and
            ThresholdExceeded is returned when nothing remains

    Raises:
        GraphError: If g is directed
        BudgetExceededError: If g has more than ``budget`` vertices
    """
    _require_undirected(g)
    if budget is not None and g.vertex_count > budget:
        raise BudgetExceededError(g.vertex_count, budget)

    components = sorted(
        (sorted(c) for c in nx.connected_components(to_networkx(g))),
        key=lambda c: c[0],
    )
    value = 0
    witness: list[int] = []
    for component in components:
        sub, id_map = induced_subgraph(g, component)
        result = _solve_connected(sub, threshold)
        if result is None:
            logger.debug("Component exceeds threshold", size=len(component), threshold=threshold)
            return ThresholdExceeded(threshold)
        value = max(value, result.value)
        witness.extend(id_map[v - 1] for v in result.witness)

    logger.debug(
        "Exact cutwidth computed",
        vertices=g.vertex_count,
        components=len(components),
        value=value,
    )
    return CutwidthResult(value, tuple(witness))


def brute_force_cutwidth(g: Multigraph) -> CutwidthResult:
    """Minimum over all |V|! orderings; the first optimal permutation is the witness."""
    _require_undirected(g)
    best: Optional[CutwidthResult] = None
    for candidate in permutations(g.vertices):
        value = ordering_cutwidth(g, candidate)
        if best is None or value < best.value:
            best = CutwidthResult(value, candidate)
    return best
