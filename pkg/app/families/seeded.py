"""Seeded random multigraphs and partitions.

Randomness comes from numpy's PCG64 generator seeded through
``numpy.random.default_rng``, so a seed reproduces the same instance on
every platform.
"""

from typing import Any

import numpy as np

from app.core.exceptions import FamilyParameterError
from app.core.multigraph import Multigraph, Orientation, from_edge_list
from app.core.partition import VertexPartition

from .base import Family, GeneratedInstance, require_int


def _check_density(edge_density: Any) -> float:
    if isinstance(edge_density, bool) or not isinstance(edge_density, (int, float)):
        raise FamilyParameterError(f"edge density must be a number, got {edge_density!r}")
    if not 0.0 <= edge_density <= 1.0:
        raise FamilyParameterError(f"edge density must be within [0, 1], got {edge_density}")
    return float(edge_density)


def gen_random(
    seed: int,
    vertex_count: int,
    max_multiplicity: int,
    edge_density: float,
    class_count: int,
) -> tuple[Multigraph, VertexPartition]:
    """Random undirected multigraph with a random partition into nonempty classes.

    Each vertex pair becomes an edge with probability ``edge_density`` and a
    multiplicity drawn uniformly from 1..max_multiplicity.
    """
    seed = require_int(seed, "seed", 0)
    vertex_count = require_int(vertex_count, "vertex count", 1)
    max_multiplicity = require_int(max_multiplicity, "max multiplicity", 1)
    edge_density = _check_density(edge_density)
    class_count = require_int(class_count, "class count", 1)
    if class_count > vertex_count:
        raise FamilyParameterError(
            f"class count {class_count} exceeds vertex count {vertex_count}"
        )

    rng = np.random.default_rng(seed)
    entries = []
    for u in range(1, vertex_count + 1):
        for v in range(u + 1, vertex_count + 1):
            if rng.random() < edge_density:
                entries.append((u, v, int(rng.integers(1, max_multiplicity + 1))))

    # the first class_count vertices of a random permutation seed one class each
    order = rng.permutation(vertex_count) + 1
    labels = np.empty(vertex_count + 1, dtype=np.int64)
    labels[order[:class_count]] = np.arange(class_count)
    labels[order[class_count:]] = rng.integers(0, class_count, size=vertex_count - class_count)
    classes = [
        [v for v in range(1, vertex_count + 1) if labels[v] == c] for c in range(class_count)
    ]
    return (
        from_edge_list(Orientation.UNDIRECTED, vertex_count, entries),
        VertexPartition.from_classes(vertex_count, classes),
    )


def gen_random_multigraph(
    seed: int, max_vertices: int = 8, max_total_multiplicity: int = 14
) -> Multigraph:
    """Random undirected multigraph with 2..max_vertices vertices and at least one edge."""
    seed = require_int(seed, "seed", 0)
    max_vertices = require_int(max_vertices, "max vertices", 2)
    max_total_multiplicity = require_int(max_total_multiplicity, "max total multiplicity", 1)

    rng = np.random.default_rng(seed)
    vertex_count = int(rng.integers(2, max_vertices + 1))
    occurrences = int(rng.integers(1, max_total_multiplicity + 1))
    entries = []
    for _ in range(occurrences):
        u, v = rng.choice(vertex_count, size=2, replace=False) + 1
        entries.append((int(u), int(v), 1))
    return from_edge_list(Orientation.UNDIRECTED, vertex_count, entries)


class RandomFamily(Family):
    """Seeded random multigraph with a partition."""

    def __init__(self, params: dict[str, Any], silent: bool = False):
        super().__init__("random", params, silent)

    def build(self) -> GeneratedInstance:
        g, p = gen_random(
            self.params.get("seed"),
            self.params.get("n"),
            self.params.get("max_multiplicity", 3),
            self.params.get("density", 0.4),
            self.params.get("classes", 1),
        )
        return GeneratedInstance(g, p)
