"""Lower-bound constructions showing the 1.5 constant cannot be improved.

G(x, y) is the undirected multigraph on {1..5} with edges {1,3}*x,
{2,5}*(x/2), {4,5}*(x/2), {2,3}*y and {3,4}*y, partitioned as
{{1}, {5}, {2,3,4}}. K(x, y) drops vertex 5 in favor of {2,4}*(x/2) and has
the same cutwidth, min(1.5x + y, max(2y, x)). H(x, y) is the full
subdivision of G oriented so that {2,3,4} and the midpoints between them
form the only nontrivial SCC.
"""

from typing import Any

from app.core.exceptions import FamilyParameterError
from app.core.multigraph import Multigraph, Ordering, Orientation, from_edge_list
from app.core.partition import VertexPartition
from app.core.transforms import subdivision_vertices

from .base import Family, GeneratedInstance, require_int


def _check_params(x: Any, y: Any, min_y: int = 1) -> tuple[int, int]:
    x = require_int(x, "x", 2)
    y = require_int(y, "y", min_y)
    if x % 2:
        raise FamilyParameterError(f"x must be even, got {x}")
    return x, y


def gen_lower_G(x: int, y: int) -> tuple[Multigraph, VertexPartition]:
    x, y = _check_params(x, y)
    g = from_edge_list(
        Orientation.UNDIRECTED,
        5,
        [(1, 3, x), (2, 5, x // 2), (4, 5, x // 2), (2, 3, y), (3, 4, y)],
    )
    return g, VertexPartition.from_classes(5, [[1], [5], [2, 3, 4]])


def gen_lower_K(x: int, y: int) -> Multigraph:
    x, y = _check_params(x, y)
    return from_edge_list(
        Orientation.UNDIRECTED,
        4,
        [(1, 3, x), (2, 3, y), (3, 4, y), (2, 4, x // 2)],
    )


def gen_lower_H(x: int, y: int) -> Multigraph:
    """Simple directed graph whose cutwidth is 1.5x + y when 2y >= 3x.

    Needs y >= 2: of the y two-paths between 2 and 3, the first y - 1 run
    3 -> w -> 2 and the last runs 2 -> w -> 3, and likewise between 3 and 4,
    which makes {2,3,4} strongly connected. Every other path follows the
    topological order 1, its midpoints, the SCC, the midpoints towards 5, 5.
    """
    x, y = _check_params(x, y, min_y=2)
    g, _ = gen_lower_G(x, y)
    arcs = []
    for u, v, occurrence, w in subdivision_vertices(g):
        last = occurrence == y - 1
        if (u, v) == (2, 3):
            arcs += [(2, w), (w, 3)] if last else [(3, w), (w, 2)]
        elif (u, v) == (3, 4):
            arcs += [(4, w), (w, 3)] if last else [(3, w), (w, 4)]
        else:
            # {1,3}, {2,5} and {4,5} all point away from the smaller id
            arcs += [(u, w), (w, v)]
    return from_edge_list(Orientation.DIRECTED, g.vertex_count + len(arcs) // 2, arcs)


def claim2_cutwidth(x: int, y: int) -> int:
    """Cutwidth of G(x, y) and K(x, y): min(1.5x + y, max(2y, x))."""
    x, y = _check_params(x, y)
    return min((3 * x + 2 * y) // 2, max(2 * y, x))


def claim2_orderings(x: int, y: int) -> tuple[Ordering, Ordering]:
    """The two orderings of K(x, y) that together reach its cutwidth.

    The first keeps 2, 3, 4 monotone and has cutwidth 1.5x + y; the second
    puts 3 after 4 and has cutwidth max(2y, x).
    """
    _check_params(x, y)
    return (2, 3, 1, 4), (2, 4, 3, 1)


class LowerGFamily(Family):
    """The multigraph G(x, y) with its three-class partition."""

    def __init__(self, params: dict[str, Any], silent: bool = False):
        super().__init__("lower-g", params, silent)

    def build(self) -> GeneratedInstance:
        g, p = gen_lower_G(self.params.get("x"), self.params.get("y"))
        return GeneratedInstance(g, p)


class LowerKFamily(Family):
    """The four-vertex multigraph K(x, y)."""

    def __init__(self, params: dict[str, Any], silent: bool = False):
        super().__init__("lower-k", params, silent)

    def build(self) -> GeneratedInstance:
        return GeneratedInstance(gen_lower_K(self.params.get("x"), self.params.get("y")))


class LowerHFamily(Family):
    """The directed graph H(x, y)."""

    def __init__(self, params: dict[str, Any], silent: bool = False):
        super().__init__("lower-h", params, silent)

    def build(self) -> GeneratedInstance:
        return GeneratedInstance(gen_lower_H(self.params.get("x"), self.params.get("y")))
