"""Directed graphs G_n whose condensation cutwidth grows while their own stays at most 5.

Vertices u_1..u_n are ids 1..n and v_1..v_n are ids n+1..2n. Both groups
form a directed cycle and every u_i points to v_i.
"""

from itertools import chain
from typing import Any

from app.core.multigraph import Multigraph, Ordering, Orientation, from_edge_list

from .base import Family, GeneratedInstance, require_int


def gen_nolow_Gn(n: int) -> Multigraph:
    n = require_int(n, "n", 3)
    arcs = []
    for i in range(1, n + 1):
        following = i % n + 1
        arcs.append((i, following))
        arcs.append((n + i, n + following))
        arcs.append((i, n + i))
    return from_edge_list(Orientation.DIRECTED, 2 * n, arcs)


def interleaved_ordering(n: int) -> Ordering:
    """u_1, v_1, u_2, v_2, ..., u_n, v_n."""
    n = require_int(n, "n", 3)
    return tuple(chain.from_iterable((i, n + i) for i in range(1, n + 1)))


class NoLowFamily(Family):
    """The directed graph G_n."""

    def __init__(self, params: dict[str, Any], silent: bool = False):
        super().__init__("nolow", params, silent)

    def build(self) -> GeneratedInstance:
        return GeneratedInstance(gen_nolow_Gn(self.params.get("n")))
