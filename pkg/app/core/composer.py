"""Orderings compatible with a vertex partition and the bounds they certify.

A compatible ordering lists the classes in the order of a quotient ordering
and the vertices of each class in the order of a class ordering, possibly
reversed. With x the cutwidth of the quotient ordering and y the largest
class ordering cutwidth, keeping every class forward gives cutwidth at most
2x + y; choosing each class direction as in :func:`choose_orientation` gives
at most 1.5x + y. All 1.5x comparisons are done as ``2 * lhs <= 3 * x``.
"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

import structlog

from app.core.exceptions import ConsistencyError, OrderingError, PartitionError
from app.core.multigraph import Multigraph, Ordering, induced_subgraph
from app.core.partition import VertexPartition, check_class_orderings, quotient_multigraph
from app.core.solver import DEFAULT_BUDGET, exact_cutwidth, ordering_cutwidth

logger = structlog.get_logger()

# Regions of the vertex set relative to a class C and a split (C-, C+) of it.
_BEFORE, _C_MINUS, _C_PLUS, _AFTER = range(4)

_BLOCKS = {
    (_BEFORE, _BEFORE): "e_mm",
    (_AFTER, _AFTER): "e_pp",
    (_C_MINUS, _C_MINUS): "e_cc",
    (_C_MINUS, _C_PLUS): "e_cc",
    (_C_PLUS, _C_PLUS): "e_cc",
    (_BEFORE, _C_MINUS): "e_m_cm",
    (_C_PLUS, _AFTER): "e_cp_p",
    (_BEFORE, _C_PLUS): "e_m_cp",
    (_C_MINUS, _AFTER): "e_cm_p",
    (_BEFORE, _AFTER): "e_m_p",
}


class ClassDirection(str, Enum):
    """Whether a class is laid out in its class ordering or the reverse."""

    FORWARD = "forward"
    REVERSE = "reverse"


class BoundKind(str, Enum):
    SIMPLE = "simple_2x_plus_y"
    THEOREM = "theorem_1_5x_plus_y"


@dataclass(frozen=True)
class EdgeDecomposition:
    """Edge multiplicities of the eight blocks for one class and one split.

    ``m`` stands for the classes before C, ``p`` for the classes after C,
    ``cm``/``cp`` for the two sides of the split of C.
    """

    e_mm: int = 0
    e_pp: int = 0
    e_cc: int = 0
    e_m_cm: int = 0
    e_cp_p: int = 0
    e_m_cp: int = 0
    e_cm_p: int = 0
    e_m_p: int = 0

    @property
    def total(self) -> int:
        return (
            self.e_mm
            + self.e_pp
            + self.e_cc
            + self.e_m_cm
            + self.e_cp_p
            + self.e_m_cp
            + self.e_cm_p
            + self.e_m_p
        )

    @property
    def forward_external(self) -> int:
        """External edges crossing the split when C keeps its ordering."""
        return self.e_m_cp + self.e_cm_p + self.e_m_p

    @property
    def reverse_external(self) -> int:
        """External edges crossing the same split when C is reversed."""
        return self.e_m_cm + self.e_cp_p + self.e_m_p


@dataclass(frozen=True)
class OrientationChoice:
    class_index: int
    direction: ClassDirection
    n: int
    x: int

    def __post_init__(self):
        if self.direction is ClassDirection.FORWARD and 2 * self.n > 3 * self.x:
            raise ConsistencyError(
                f"class {self.class_index} kept forward with n={self.n} above 1.5x for x={self.x}"
            )


@dataclass(frozen=True)
class BoundCertificate:
    """An ordering of G with its cutwidth and the (x, y) pair it is measured against."""

    ordering: Ordering
    achieved: int
    x: int
    y: int
    bound_kind: BoundKind
    directions: tuple[ClassDirection, ...] = ()
    choices: tuple[OrientationChoice, ...] = field(default=())

    @property
    def bound(self) -> int:
        """Largest integer cutwidth the certificate allows."""
        if self.bound_kind is BoundKind.SIMPLE:
            return 2 * self.x + self.y
        return (3 * self.x + 2 * self.y) // 2

    @property
    def holds(self) -> bool:
        if self.bound_kind is BoundKind.SIMPLE:
            return self.achieved <= 2 * self.x + self.y
        return 2 * self.achieved <= 3 * self.x + 2 * self.y


def _class_positions(p: VertexPartition, quotient_ord: Sequence[int]) -> dict[int, int]:
    """Position of each class index in the quotient ordering (1-based class vertices)."""
    if sorted(quotient_ord) != list(range(1, len(p) + 1)):
        raise OrderingError(
            f"quotient ordering {list(quotient_ord)} does not permute the {len(p)} classes"
        )
    return {q - 1: position for position, q in enumerate(quotient_ord)}


def _check_class_index(p: VertexPartition, class_index: int) -> None:
    if not 0 <= class_index < len(p):
        raise PartitionError(f"class index {class_index} is outside 0..{len(p) - 1}")


def _check_class_ordering(
    p: VertexPartition, class_index: int, class_ord: Sequence[int]
) -> None:
    if sorted(class_ord) != list(p.classes[class_index]):
        raise PartitionError(
            f"ordering {list(class_ord)} does not permute class {class_index}"
        )


def _decompose(
    g: Multigraph,
    p: VertexPartition,
    positions: dict[int, int],
    class_index: int,
    c_minus: set[int],
) -> EdgeDecomposition:
    here = positions[class_index]

    def region(v: int) -> int:
        other = positions[p.class_of[v]]
        if other < here:
            return _BEFORE
        if other > here:
            return _AFTER
        return _C_MINUS if v in c_minus else _C_PLUS

    counts = dict.fromkeys(EdgeDecomposition.__dataclass_fields__, 0)
    for u, v, m in g.edges:
        pair = tuple(sorted((region(u), region(v))))
        counts[_BLOCKS[pair]] += m
    return EdgeDecomposition(**counts)


def _splits(class_ord: Sequence[int], plus_nonempty: bool) -> Iterator[set[int]]:
    """Left sides C- of the prefix splits of a class ordering."""
    stop = len(class_ord) if plus_nonempty else len(class_ord) + 1
    for k in range(stop):
        yield set(class_ord[:k])


def class_edge_decomposition(
    g: Multigraph,
    p: VertexPartition,
    quotient_ord: Sequence[int],
    class_index: int,
    cut: tuple[Sequence[int], Sequence[int]],
) -> EdgeDecomposition:
    """Split every edge of g into the eight blocks defined by class C and the split ``cut``."""
    p.check_graph(g)
    _check_class_index(p, class_index)
    positions = _class_positions(p, quotient_ord)
    c_minus, c_plus = set(cut[0]), set(cut[1])
    members = set(p.classes[class_index])
    if c_minus & c_plus or (c_minus | c_plus) != members:
        raise PartitionError(
            f"({sorted(c_minus)}, {sorted(c_plus)}) is not a split of class {class_index}"
        )
    return _decompose(g, p, positions, class_index, c_minus)


def choose_orientation(
    g: Multigraph,
    p: VertexPartition,
    quotient_ord: Sequence[int],
    class_index: int,
    class_ord: Sequence[int],
    x: int,
) -> OrientationChoice:
    """Pick the direction of one class so its external crossings stay within 1.5x.

    n is the largest forward external crossing over splits with C+ nonempty.
    The class stays forward when 2n <= 3x; otherwise the reversed class must
    satisfy the bound at every split, and ConsistencyError is raised if it
    does not.
    """
    p.check_graph(g)
    _check_class_index(p, class_index)
    _check_class_ordering(p, class_index, class_ord)
    positions = _class_positions(p, quotient_ord)

    n = max(
        _decompose(g, p, positions, class_index, c_minus).forward_external
        for c_minus in _splits(class_ord, plus_nonempty=True)
    )
    if 2 * n <= 3 * x:
        return OrientationChoice(class_index, ClassDirection.FORWARD, n, x)

    for c_minus in _splits(class_ord, plus_nonempty=False):
        reverse = _decompose(g, p, positions, class_index, c_minus).reverse_external
        if 2 * reverse > 3 * x:
            logger.error(
                "Neither class direction stays within 1.5x",
                class_index=class_index,
                n=n,
                reverse=reverse,
                x=x,
            )
            raise ConsistencyError(
                f"class {class_index}: forward crossing {n} and reverse crossing {reverse} "
                f"both exceed 1.5x for x={x}"
            )
    return OrientationChoice(class_index, ClassDirection.REVERSE, n, x)


def claim1_cases(
    g: Multigraph,
    p: VertexPartition,
    quotient_ord: Sequence[int],
    class_index: int,
    class_ord: Sequence[int],
    x: int,
) -> tuple[bool, bool]:
    """Whether the forward and the reverse 1.5x inequalities hold at every split."""
    p.check_graph(g)
    _check_class_index(p, class_index)
    _check_class_ordering(p, class_index, class_ord)
    positions = _class_positions(p, quotient_ord)
    forward_ok = reverse_ok = True
    for c_minus in _splits(class_ord, plus_nonempty=False):
        blocks = _decompose(g, p, positions, class_index, c_minus)
        forward_ok &= 2 * blocks.forward_external <= 3 * x
        reverse_ok &= 2 * blocks.reverse_external <= 3 * x
    return forward_ok, reverse_ok


def block_bounds_hold(
    g: Multigraph,
    p: VertexPartition,
    quotient_ord: Sequence[int],
    class_index: int,
    class_ord: Sequence[int],
    x: int,
) -> bool:
    """The cuts right before and right after C each carry at most x external edges."""
    p.check_graph(g)
    _check_class_index(p, class_index)
    _check_class_ordering(p, class_index, class_ord)
    positions = _class_positions(p, quotient_ord)
    for c_minus in _splits(class_ord, plus_nonempty=False):
        b = _decompose(g, p, positions, class_index, c_minus)
        if b.e_m_cm + b.e_m_cp + b.e_m_p > x or b.e_cm_p + b.e_cp_p + b.e_m_p > x:
            return False
    return True


def compose_compatible(
    g: Multigraph,
    p: VertexPartition,
    quotient_ord: Sequence[int],
    class_ords: Sequence[Sequence[int]],
    orientations: Optional[Sequence[ClassDirection]] = None,
) -> Ordering:
    """Concatenate the classes in quotient order, each forward or reversed."""
    p.check_graph(g)
    _class_positions(p, quotient_ord)
    check_class_orderings(p, class_ords)
    if orientations is None:
        orientations = [ClassDirection.FORWARD] * len(p)
    if len(orientations) != len(p):
        raise PartitionError(f"expected {len(p)} orientations, got {len(orientations)}")

    ordering: list[int] = []
    for q in quotient_ord:
        members = list(class_ords[q - 1])
        if ClassDirection(orientations[q - 1]) is ClassDirection.REVERSE:
            members.reverse()
        ordering.extend(members)
    return tuple(ordering)


def optimal_quotient_ordering(
    g: Multigraph, p: VertexPartition, budget: Optional[int] = DEFAULT_BUDGET
) -> Ordering:
    return exact_cutwidth(quotient_multigraph(g, p), budget).witness


def optimal_class_orderings(
    g: Multigraph, p: VertexPartition, budget: Optional[int] = DEFAULT_BUDGET
) -> tuple[Ordering, ...]:
    """Exact-solver ordering of every class, in original vertex ids."""
    p.check_graph(g)
    orderings = []
    for members in p.classes:
        sub, id_map = induced_subgraph(g, members)
        witness = exact_cutwidth(sub, budget).witness
        orderings.append(tuple(id_map[v - 1] for v in witness))
    return tuple(orderings)


def _class_width(g: Multigraph, p: VertexPartition, class_ords: Sequence[Sequence[int]]) -> int:
    width = 0
    for members, ordering in zip(p.classes, class_ords):
        sub, id_map = induced_subgraph(g, members)
        local = {old: new for new, old in enumerate(id_map, start=1)}
        width = max(width, ordering_cutwidth(sub, [local[v] for v in ordering]))
    return width


def _prepare(g, p, quotient_ord, class_ords, budget):
    p.check_graph(g)
    if quotient_ord is None:
        quotient_ord = optimal_quotient_ordering(g, p, budget)
    if class_ords is None:
        class_ords = optimal_class_orderings(g, p, budget)
    _class_positions(p, quotient_ord)
    check_class_orderings(p, class_ords)
    x = ordering_cutwidth(quotient_multigraph(g, p), quotient_ord)
    y = _class_width(g, p, class_ords)
    return tuple(quotient_ord), tuple(tuple(o) for o in class_ords), x, y


def compose_simple(
    g: Multigraph,
    p: VertexPartition,
    quotient_ord: Optional[Sequence[int]] = None,
    class_ords: Optional[Sequence[Sequence[int]]] = None,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> BoundCertificate:
    """Keep every class forward; certifies cutwidth at most 2x + y.

    Orderings left as None are computed with the exact solver.
    """
    quotient_ord, class_ords, x, y = _prepare(g, p, quotient_ord, class_ords, budget)
    directions = (ClassDirection.FORWARD,) * len(p)
    ordering = compose_compatible(g, p, quotient_ord, class_ords, directions)
    certificate = BoundCertificate(
        ordering=ordering,
        achieved=ordering_cutwidth(g, ordering),
        x=x,
        y=y,
        bound_kind=BoundKind.SIMPLE,
        directions=directions,
    )
    if not certificate.holds:
        raise ConsistencyError(
            f"compatible ordering reaches {certificate.achieved} > 2x + y = {certificate.bound}"
        )
    logger.debug("Simple bound composed", x=x, y=y, achieved=certificate.achieved)
    return certificate


def compose_theorem(
    g: Multigraph,
    p: VertexPartition,
    quotient_ord: Optional[Sequence[int]] = None,
    class_ords: Optional[Sequence[Sequence[int]]] = None,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> BoundCertificate:
    """Choose each class direction; certifies cutwidth at most 1.5x + y.

    x is the cutwidth of the given quotient ordering, which need not be
    optimal. Orderings left as None are computed with the exact solver.

    Raises:
        ConsistencyError: If some class admits neither direction, or the
            composed ordering exceeds 1.5x + y
    """
    quotient_ord, class_ords, x, y = _prepare(g, p, quotient_ord, class_ords, budget)
    choices = tuple(
        choose_orientation(g, p, quotient_ord, index, class_ords[index], x)
        for index in range(len(p))
    )
    directions = tuple(choice.direction for choice in choices)
    ordering = compose_compatible(g, p, quotient_ord, class_ords, directions)
    certificate = BoundCertificate(
        ordering=ordering,
        achieved=ordering_cutwidth(g, ordering),
        x=x,
        y=y,
        bound_kind=BoundKind.THEOREM,
        directions=directions,
        choices=choices,
    )
    if not certificate.holds:
        logger.error("Composed ordering exceeds 1.5x + y", x=x, y=y, achieved=certificate.achieved)
        raise ConsistencyError(
            f"compatible ordering reaches {certificate.achieved} > 1.5x + y for x={x}, y={y}"
        )
    logger.debug(
        "Theorem bound composed",
        x=x,
        y=y,
        achieved=certificate.achieved,
        reversed_classes=sum(d is ClassDirection.REVERSE for d in directions),
    )
    return certificate


def certify(
    g: Multigraph,
    p: VertexPartition,
    method: Union[BoundKind, str] = BoundKind.THEOREM,
    quotient_ord: Optional[Sequence[int]] = None,
    class_ords: Optional[Sequence[Sequence[int]]] = None,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> BoundCertificate:
    """Dispatch to compose_simple or compose_theorem; accepts "simple" and "theorem"."""
    aliases = {"simple": BoundKind.SIMPLE, "theorem": BoundKind.THEOREM}
    kind = aliases.get(method, method) if isinstance(method, str) else method
    if BoundKind(kind) is BoundKind.SIMPLE:
        return compose_simple(g, p, quotient_ord, class_ords, budget)
    return compose_theorem(g, p, quotient_ord, class_ords, budget)
