"""Cutwidth is unchanged by multiedge-subdivision."""

from collections.abc import Iterator
from typing import Any

import numpy as np

from app.core.solver import exact_cutwidth, ordering_cutwidth
from app.core.transforms import insert_between, multiedge_subdivide, omit_vertex
from app.families import gen_random_multigraph

from .base import Check, Instance


class SubdivisionCheck(Check):
    """Random multiedge-subdivisions, compared with the exact solver.

    Besides equal cutwidth, the two witness transfers are checked: putting
    the fresh vertex anywhere between the subdivided edge's endpoints in an
    optimal ordering of G, and deleting it from an optimal ordering of G'.
    """

    def __init__(self, config: dict[str, Any], silent: bool = False):
        super().__init__("prop1", config, silent)
        self.max_total_multiplicity = config.get("max_multiplicity", 14)

    def instances(self) -> Iterator[Instance]:
        max_vertices = self.max_n or 8
        for trial in range(self.trials):
            seed = self.seed + trial
            g = gen_random_multigraph(seed, max_vertices, self.max_total_multiplicity)
            rng = np.random.default_rng([seed, 1])
            u, v, multiplicity = g.edges[int(rng.integers(len(g.edges)))]
            m = int(rng.integers(1, multiplicity + 1))
            yield Instance(f"trial={trial}", (g, (u, v), m), seed)

    def evaluate(self, payload: Any) -> tuple[bool, str]:
        g, edge, m = payload
        subdivided, step = multiedge_subdivide(g, edge, m)
        before = exact_cutwidth(g, self.budget)
        after = exact_cutwidth(subdivided, self.budget)
        if before.value != after.value:
            return False, f"cutwidth {before.value} became {after.value}"

        u, v = step.edge
        order = list(before.witness)
        distance = abs(order.index(u) - order.index(v))
        for offset in range(1, distance + 1):
            extended = insert_between(before.witness, u, v, step.fresh_vertex, offset)
            if ordering_cutwidth(subdivided, extended) > before.value:
                return False, f"inserting w at offset {offset} exceeds {before.value}"

        reduced = omit_vertex(after.witness, step.fresh_vertex)
        if ordering_cutwidth(g, reduced) > after.value:
            return False, f"omitting w exceeds {after.value}"
        return True, f"cutwidth {before.value}"
