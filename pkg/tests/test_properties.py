"""Property-based tests for cutwidth invariants."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from app.core.composer import compose_simple, compose_theorem
from app.core.graph_file import parse_graph, serialize_graph
from app.core.multigraph import (
    Orientation,
    cut_value,
    from_edge_list,
    induced_subgraph,
    reverse_ordering,
    underlying_undirected,
)
from app.core.partition import VertexPartition, condensation, is_acyclic
from app.core.solver import brute_force_cutwidth, exact_cutwidth, ordering_cutwidth
from app.core.transforms import insert_between, multiedge_subdivide, omit_vertex

PROPERTY_SETTINGS = settings(
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def multigraphs(draw: st.DrawFn, min_vertices: int = 1, max_vertices: int = 7):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    if not pairs:
        return from_edge_list(Orientation.UNDIRECTED, n, [])
    entries = draw(
        st.lists(
            st.tuples(st.sampled_from(pairs), st.integers(1, 3)),
            max_size=12,
        )
    )
    return from_edge_list(Orientation.UNDIRECTED, n, [(u, v, m) for (u, v), m in entries])


@st.composite
def digraphs(draw: st.DrawFn, max_vertices: int = 7):
    n = draw(st.integers(1, max_vertices))
    arcs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
    if not arcs:
        return from_edge_list(Orientation.DIRECTED, n, [])
    entries = draw(
        st.lists(st.tuples(st.sampled_from(arcs), st.integers(1, 2)), max_size=14)
    )
    return from_edge_list(Orientation.DIRECTED, n, [(u, v, m) for (u, v), m in entries])


@st.composite
def graphs_with_orderings(draw: st.DrawFn):
    g = draw(multigraphs())
    ordering = draw(st.permutations(list(g.vertices)))
    return g, tuple(ordering)


@st.composite
def partitioned_graphs(draw: st.DrawFn):
    g = draw(multigraphs(max_vertices=8))
    labels = draw(st.lists(st.integers(0, 3), min_size=g.vertex_count, max_size=g.vertex_count))
    classes: dict[int, list[int]] = {}
    for v, label in zip(g.vertices, labels):
        classes.setdefault(label, []).append(v)
    p = VertexPartition.from_classes(g.vertex_count, [classes[k] for k in sorted(classes)])
    return g, p


@PROPERTY_SETTINGS
@given(graphs_with_orderings())
def test_reversal_preserves_ordering_cutwidth(case):
    g, ordering = case
    assert ordering_cutwidth(g, ordering) == ordering_cutwidth(g, reverse_ordering(ordering))


@PROPERTY_SETTINGS
@given(graphs_with_orderings())
def test_cut_symmetry(case):
    g, ordering = case
    left = ordering[: len(ordering) // 2]
    right = ordering[len(ordering) // 2 :]
    assert cut_value(g, left) == cut_value(g, right)


@PROPERTY_SETTINGS
@given(graphs_with_orderings())
def test_exact_is_a_lower_bound_and_witness_achieves_it(case):
    g, ordering = case
    result = exact_cutwidth(g)
    assert result.value <= ordering_cutwidth(g, ordering)
    assert ordering_cutwidth(g, result.witness) == result.value


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_vertices=6))
def test_exact_matches_brute_force(g):
    assert exact_cutwidth(g).value == brute_force_cutwidth(g).value


@PROPERTY_SETTINGS
@given(multigraphs(), st.data())
def test_subgraphs_are_not_wider(g, data):
    """Test monotonicity of cutwidth under taking induced subgraphs."""
    subset = data.draw(st.sets(st.sampled_from(list(g.vertices)), min_size=1))
    sub, _ = induced_subgraph(g, subset)
    assert exact_cutwidth(sub).value <= exact_cutwidth(g).value


@PROPERTY_SETTINGS
@given(multigraphs(min_vertices=2, max_vertices=6), st.data())
def test_multiedge_subdivision_invariance(g, data):
    """Test that subdividing any m occurrences of an edge keeps the cutwidth."""
    if not g.edges:
        return
    u, v, total = data.draw(st.sampled_from(g.edges))
    m = data.draw(st.integers(1, total))
    subdivided, step = multiedge_subdivide(g, (u, v), m)
    before = exact_cutwidth(g)
    after = exact_cutwidth(subdivided)
    assert before.value == after.value

    order = list(before.witness)
    distance = abs(order.index(u) - order.index(v))
    offset = data.draw(st.integers(1, distance))
    extended = insert_between(before.witness, u, v, step.fresh_vertex, offset)
    assert ordering_cutwidth(subdivided, extended) <= before.value
    assert ordering_cutwidth(g, omit_vertex(after.witness, step.fresh_vertex)) <= after.value


@PROPERTY_SETTINGS
@given(partitioned_graphs())
def test_certificates_hold(case):
    """Test 2x + y and 1.5x + y on random partitions."""
    g, p = case
    exact = exact_cutwidth(g).value
    simple = compose_simple(g, p)
    theorem = compose_theorem(g, p)
    assert simple.achieved <= 2 * simple.x + simple.y
    assert 2 * theorem.achieved <= 3 * theorem.x + 2 * theorem.y
    assert min(simple.achieved, theorem.achieved) >= exact


@PROPERTY_SETTINGS
@given(multigraphs())
def test_graph_text_round_trip(g):
    assert parse_graph(serialize_graph(g)) == g


@PROPERTY_SETTINGS
@given(digraphs())
def test_condensation_arcs_point_to_earlier_classes(g):
    """Test that SCC classes come in reverse topological order."""
    dag, p = condensation(g)
    assert is_acyclic(dag)
    assert dag.vertex_count == len(p)
    assert all(u > v for u, v, _ in dag.edges)


@PROPERTY_SETTINGS
@given(digraphs())
def test_condensation_is_idempotent(g):
    dag, _ = condensation(g)
    again, p = condensation(dag)
    assert all(len(members) == 1 for members in p.classes)
    assert again.vertex_count == dag.vertex_count
    assert again.total_multiplicity == dag.total_multiplicity


@PROPERTY_SETTINGS
@given(digraphs())
def test_components_are_not_wider_than_the_graph(g):
    """Test that no SCC is wider than the whole graph."""
    undirected = underlying_undirected(g)
    _, p = condensation(g)
    whole = exact_cutwidth(undirected).value
    for members in p.classes:
        sub, _ = induced_subgraph(undirected, members)
        assert exact_cutwidth(sub).value <= whole
