"""Vertex partitions, quotient multigraphs and SCC condensation."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
import structlog

from app.core.exceptions import GraphError, PartitionError
from app.core.multigraph import Edge, Multigraph, from_edge_list, to_networkx

logger = structlog.get_logger()


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint nonempty classes covering 1..vertex_count.

    Classes are indexed from 0 in list order; in a quotient multigraph class
    ``i`` becomes vertex ``i + 1``.
    """

    vertex_count: int
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for index, members in enumerate(self.classes):
            if not members:
                raise PartitionError(f"class {index} is empty")
            for v in members:
                if not 1 <= v <= self.vertex_count:
                    raise PartitionError(f"class {index} contains unknown vertex {v}")
                if v in seen:
                    raise PartitionError(f"vertex {v} appears in more than one class")
                seen.add(v)
        if len(seen) != self.vertex_count:
            missing = sorted(set(range(1, self.vertex_count + 1)) - seen)
            raise PartitionError(f"vertices {missing} are not covered by any class")

    @classmethod
    def from_classes(cls, vertex_count: int, classes: Iterable[Iterable[int]]) -> "VertexPartition":
        """Build a partition, keeping class order and sorting members."""
        normalized = []
        for members in classes:
            members = list(members)
            if len(set(members)) != len(members):
                raise PartitionError(f"class {sorted(members)} lists a vertex twice")
            normalized.append(tuple(sorted(members)))
        return cls(vertex_count, tuple(normalized))

    @classmethod
    def singletons(cls, vertex_count: int) -> "VertexPartition":
        return cls(vertex_count, tuple((v,) for v in range(1, vertex_count + 1)))

    @classmethod
    def whole(cls, vertex_count: int) -> "VertexPartition":
        if vertex_count == 0:
            return cls(0, ())
        return cls(vertex_count, (tuple(range(1, vertex_count + 1)),))

    @cached_property
    def class_of(self) -> dict[int, int]:
        """Map each vertex to the index of its class."""
        return {v: index for index, members in enumerate(self.classes) for v in members}

    def __len__(self) -> int:
        return len(self.classes)

    def check_graph(self, g: Multigraph) -> None:
        if g.vertex_count != self.vertex_count:
            raise PartitionError(
                f"partition covers {self.vertex_count} vertices but the graph has {g.vertex_count}"
            )


@dataclass(frozen=True)
class EdgeClassification:
    """Edges split into those inside one class and those across classes."""

    internal: tuple[Edge, ...]
    external: tuple[Edge, ...]

    @property
    def internal_multiplicity(self) -> int:
        return sum(m for _, _, m in self.internal)

    @property
    def external_multiplicity(self) -> int:
        return sum(m for _, _, m in self.external)


def classify_edges(g: Multigraph, p: VertexPartition) -> EdgeClassification:
    p.check_graph(g)
    internal, external = [], []
    for edge in g.edges:
        u, v, _ = edge
        (internal if p.class_of[u] == p.class_of[v] else external).append(edge)
    return EdgeClassification(tuple(internal), tuple(external))


def quotient_multigraph(g: Multigraph, p: VertexPartition) -> Multigraph:
    """Merge every class into one vertex, dropping internal edges.

    Parallel edges are never collapsed: each external occurrence adds one to
    the multiplicity of its class pair.
    """
    p.check_graph(g)
    entries = [
        (p.class_of[u] + 1, p.class_of[v] + 1, m)
        for u, v, m in g.edges
        if p.class_of[u] != p.class_of[v]
    ]
    return from_edge_list(g.orientation, len(p), entries)


def scc_partition(g: Multigraph) -> VertexPartition:
    """Strongly connected components, sinks of the condensation first.

    Ties in the reverse topological order are broken by smallest member so
    the class list is reproducible.
    """
    if not g.directed:
        raise GraphError("scc_partition expects a directed multigraph")
    dag = nx.condensation(to_networkx(g))
    members = {node: sorted(data["members"]) for node, data in dag.nodes(data=True)}
    topological = list(nx.lexicographical_topological_sort(dag, key=lambda node: members[node][0]))
    partition = VertexPartition(
        g.vertex_count, tuple(tuple(members[node]) for node in reversed(topological))
    )
    logger.debug(
        "Strongly connected components computed",
        vertices=g.vertex_count,
        components=len(partition),
        largest=max((len(c) for c in partition.classes), default=0),
    )
    return partition


def condensation(g: Multigraph) -> tuple[Multigraph, VertexPartition]:
    """Quotient of a directed multigraph by its SCC partition; always acyclic."""
    p = scc_partition(g)
    return quotient_multigraph(g, p), p


def is_acyclic(g: Multigraph) -> bool:
    if not g.directed:
        raise GraphError("is_acyclic expects a directed multigraph")
    return nx.is_directed_acyclic_graph(to_networkx(g))


def check_class_orderings(p: VertexPartition, class_ords: Sequence[Sequence[int]]) -> None:
    """Raise PartitionError unless ``class_ords[i]`` permutes class ``i``."""
    if len(class_ords) != len(p):
        raise PartitionError(f"expected {len(p)} class orderings, got {len(class_ords)}")
    for index, (members, ordering) in enumerate(zip(p.classes, class_ords)):
        if sorted(ordering) != list(members):
            raise PartitionError(f"ordering {list(ordering)} does not permute class {index}")
