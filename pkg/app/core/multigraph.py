"""Immutable multigraphs with multiset edge semantics."""

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from numbers import Integral
from typing import Union

import networkx as nx
import numpy as np

from app.core.exceptions import GraphError, OrderingError


# (u, v, multiplicity); undirected edges always have u < v
Edge = tuple[int, int, int]
Ordering = tuple[int, ...]


class Orientation(str, Enum):
    """Flavor of a multigraph."""

    DIRECTED = "directed"
    UNDIRECTED = "undirected"


@dataclass(frozen=True)
class Multigraph:
    """A multigraph over the dense vertex ids 1..vertex_count.

    Build instances with :func:`from_edge_list`; the constructor does not
    canonicalize. ``edges`` is sorted, each pair appears once, and every
    multiplicity is at least 1.
    """

    orientation: Orientation
    vertex_count: int
    edges: tuple[Edge, ...]

    @property
    def directed(self) -> bool:
        return self.orientation is Orientation.DIRECTED

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, _, m in self.edges)

    def multiplicity(self, u: int, v: int) -> int:
        """Multiplicity of the pair (u, v); unordered for undirected graphs."""
        if not self.directed and u > v:
            u, v = v, u
        for a, b, m in self.edges:
            if a == u and b == v:
                return m
        return 0

    def degree(self, v: int) -> int:
        """Number of edge occurrences incident to v, ignoring direction."""
        return sum(m for a, b, m in self.edges if v in (a, b))


def _as_id(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise GraphError(f"{what} must be an integer, got {value!r}")
    return int(value)


def _check_vertex(v: int, vertex_count: int) -> None:
    if not 1 <= v <= vertex_count:
        raise GraphError(f"vertex {v} is outside 1..{vertex_count}")


def from_edge_list(
    orientation: Union[Orientation, str],
    vertex_count: int,
    entries: Iterable[Sequence[int]],
) -> Multigraph:
    """Build a canonical multigraph from (u, v, multiplicity) entries.

    Entries may omit the multiplicity, in which case it is 1. Repeated
    entries for the same pair are summed; for undirected graphs (u, v) and
    (v, u) are the same pair.

    Raises:
        GraphError: On self-loops, out-of-range ids or non-positive multiplicities
    """
    try:
        orientation = Orientation(orientation)
    except ValueError as e:
        raise GraphError(f"unknown orientation {orientation!r}") from e
    vertex_count = _as_id(vertex_count, "vertex count")
    if vertex_count < 0:
        raise GraphError(f"vertex count must be non-negative, got {vertex_count}")

    counts: Counter = Counter()
    for entry in entries:
        if len(entry) == 2:
            u, v = entry
            m = 1
        elif len(entry) == 3:
            u, v, m = entry
        else:
            raise GraphError(f"edge entry must be (u, v) or (u, v, m), got {entry!r}")
        u, v, m = _as_id(u, "vertex"), _as_id(v, "vertex"), _as_id(m, "multiplicity")
        _check_vertex(u, vertex_count)
        _check_vertex(v, vertex_count)
        if u == v:
            raise GraphError(f"self-loop on vertex {u} is not allowed")
        if m < 1:
            raise GraphError(f"multiplicity of ({u}, {v}) must be at least 1, got {m}")
        if orientation is Orientation.UNDIRECTED and u > v:
            u, v = v, u
        counts[(u, v)] += m

    edges = tuple(sorted((u, v, m) for (u, v), m in counts.items()))
    return Multigraph(orientation, vertex_count, edges)


def underlying_undirected(g: Multigraph) -> Multigraph:
    """Forget edge directions, keeping every occurrence."""
    if not g.directed:
        raise GraphError("underlying_undirected expects a directed multigraph")
    return from_edge_list(Orientation.UNDIRECTED, g.vertex_count, g.edges)


def induced_subgraph(g: Multigraph, c: Iterable[int]) -> tuple[Multigraph, Ordering]:
    """Restrict g to the vertex subset c.

    Returns:
        The induced multigraph over 1..|c| and the id-map: new vertex i is
        original vertex ``id_map[i - 1]``. Ids keep their relative order.
    """
    kept = sorted({_as_id(v, "vertex") for v in c})
    for v in kept:
        _check_vertex(v, g.vertex_count)
    new_id = {old: i for i, old in enumerate(kept, start=1)}
    edges = [(new_id[u], new_id[v], m) for u, v, m in g.edges if u in new_id and v in new_id]
    return from_edge_list(g.orientation, len(kept), edges), tuple(kept)


def cut_value(g: Multigraph, left: Iterable[int]) -> int:
    """Number of edge occurrences with exactly one endpoint in ``left``."""
    if g.directed:
        raise GraphError("cut_value expects an undirected multigraph; use underlying_undirected")
    side = set()
    for v in left:
        v = _as_id(v, "vertex")
        _check_vertex(v, g.vertex_count)
        side.add(v)
    return sum(m for u, v, m in g.edges if (u in side) != (v in side))


def adjacency_matrix(g: Multigraph) -> np.ndarray:
    """Dense symmetric multiplicity matrix, 0-based."""
    if g.directed:
        raise GraphError("adjacency_matrix expects an undirected multigraph")
    adj = np.zeros((g.vertex_count, g.vertex_count), dtype=np.int64)
    for u, v, m in g.edges:
        adj[u - 1, v - 1] = m
        adj[v - 1, u - 1] = m
    return adj


def to_networkx(g: Multigraph) -> Union[nx.Graph, nx.DiGraph]:
    """Simple networkx view with one edge per pair carrying ``multiplicity``."""
    graph = nx.DiGraph() if g.directed else nx.Graph()
    graph.add_nodes_from(g.vertices)
    graph.add_edges_from((u, v, {"multiplicity": m}) for u, v, m in g.edges)
    return graph


def validate_ordering(g: Multigraph, ordering: Iterable[int]) -> Ordering:
    """Return ``ordering`` as a tuple after checking it permutes the vertices of g."""
    try:
        sequence = tuple(_as_id(v, "vertex") for v in ordering)
    except GraphError as e:
        raise OrderingError(str(e)) from e
    if sorted(sequence) != list(g.vertices):
        missing = sorted(set(g.vertices) - set(sequence))
        duplicated = sorted(v for v, k in Counter(sequence).items() if k > 1)
        extra = sorted(set(sequence) - set(g.vertices))
        raise OrderingError(
            f"ordering is not a permutation of 1..{g.vertex_count} "
            f"(missing={missing}, duplicated={duplicated}, unknown={extra})"
        )
    return sequence


def reverse_ordering(ordering: Sequence[int]) -> Ordering:
    return tuple(reversed(ordering))
