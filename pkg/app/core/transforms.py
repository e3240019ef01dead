"""Subdivision and multiedge-subdivision of undirected multigraphs.

Both operations preserve cutwidth. Fresh vertices take the next dense ids
(|V| + 1, |V| + 2, ...) in canonical edge order so outputs are reproducible.
"""

from collections.abc import Sequence
from dataclasses import dataclass

import structlog

from app.core.exceptions import GraphError, OrderingError
from app.core.multigraph import Multigraph, Ordering, from_edge_list

logger = structlog.get_logger()


@dataclass(frozen=True)
class SubdivisionStep:
    """Which edge was subdivided, how many occurrences, and through which vertex."""

    edge: tuple[int, int]
    m: int
    fresh_vertex: int


def _require_undirected(g: Multigraph) -> None:
    if g.directed:
        raise GraphError("subdivision is defined on undirected multigraphs")


def multiedge_subdivide(
    g: Multigraph, e: Sequence[int], m: int
) -> tuple[Multigraph, SubdivisionStep]:
    """Route m occurrences of edge e={u,v} through one fresh vertex w.

    The remaining M - m occurrences of e stay in place; {u,w} and {w,v} each
    get multiplicity m.

    Raises:
        GraphError: If e is not an edge of g or m is outside 1..M
    """
    _require_undirected(g)
    u, v = sorted(e)
    total = g.multiplicity(u, v)
    if total == 0:
        raise GraphError(f"edge {{{u}, {v}}} is not in the graph")
    if not 1 <= m <= total:
        raise GraphError(f"cannot subdivide {m} of the {total} occurrences of {{{u}, {v}}}")

    w = g.vertex_count + 1
    entries = [(a, b, k) for a, b, k in g.edges if (a, b) != (u, v)]
    if m < total:
        entries.append((u, v, total - m))
    entries += [(u, w, m), (v, w, m)]
    step = SubdivisionStep((u, v), m, w)
    logger.debug("Multiedge subdivided", edge=step.edge, m=m, of=total, fresh_vertex=w)
    return from_edge_list(g.orientation, w, entries), step


def subdivision_vertices(g: Multigraph) -> list[tuple[int, int, int, int]]:
    """Fresh vertex of every edge occurrence as (u, v, occurrence, w), canonical order."""
    _require_undirected(g)
    assignments = []
    w = g.vertex_count
    for u, v, m in g.edges:
        for occurrence in range(m):
            w += 1
            assignments.append((u, v, occurrence, w))
    return assignments


def full_subdivision(g: Multigraph) -> Multigraph:
    """Replace every edge occurrence by a path of length two; the result is simple."""
    assignments = subdivision_vertices(g)
    entries = []
    for u, v, _, w in assignments:
        entries += [(u, w, 1), (w, v, 1)]
    return from_edge_list(g.orientation, g.vertex_count + len(assignments), entries)


def insert_between(ordering: Sequence[int], u: int, v: int, w: int, offset: int) -> Ordering:
    """Place w strictly between u and v, ``offset`` slots after the earlier one.

    Valid offsets run from 1 to the distance between u and v in ``ordering``.
    """
    sequence = list(ordering)
    if w in sequence:
        raise OrderingError(f"vertex {w} is already in the ordering")
    try:
        first, last = sorted((sequence.index(u), sequence.index(v)))
    except ValueError as e:
        raise OrderingError(f"ordering does not contain both {u} and {v}") from e
    if not 1 <= offset <= last - first:
        raise OrderingError(f"offset {offset} is not between {u} and {v}")
    sequence.insert(first + offset, w)
    return tuple(sequence)


def omit_vertex(ordering: Sequence[int], w: int) -> Ordering:
    """Drop w and shift larger ids down by one so the result stays dense."""
    if w not in ordering:
        raise OrderingError(f"vertex {w} is not in the ordering")
    return tuple(v - 1 if v > w else v for v in ordering if v != w)
