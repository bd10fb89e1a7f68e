import pytest
from hypothesis import given, strategies as st

from cyclestar.graph import (CycleStarSpec, Graph, GraphFormatError, VertexLabeling,
                             build_cycle_star, max_degree, parse_graph, parse_labeling,
                             serialize_graph, serialize_labeling, to_dot)


def test_cs31_shape():
    g = build_cycle_star(CycleStarSpec(3, 1))
    assert (g.num_vertices, g.num_edges) == (4, 4)
    assert g.degrees() == [3, 1, 2, 2]


@pytest.mark.parametrize("k,l,hub", [(3, 4, 6), (5, 2, 4), (4, 3, 5)])
def test_small_cycle_star_shapes(k, l, hub):
    g = build_cycle_star((k, l))
    assert g.num_vertices == g.num_edges == k + l
    assert g.degrees()[0] == hub


def test_rejects_short_cycle():
    with pytest.raises(ValueError):
        build_cycle_star((2, 1))
    with pytest.raises(ValueError):
        CycleStarSpec(3, -1)


@pytest.mark.parametrize("g,expected", [
    (build_cycle_star((3, 1)), 3),
    (build_cycle_star((7, 4)), 6),
    (Graph(2, ((0, 1),)), 1),
])
def test_max_degree(g, expected):
    assert max_degree(g) == expected


@given(st.integers(3, 30), st.integers(0, 30))
def test_cycle_star_invariants(k, l):
    g = build_cycle_star((k, l))
    deg = g.degrees()
    assert g.num_vertices == g.num_edges == k + l
    assert g.is_connected()
    assert deg.count(1) == l
    assert max_degree(g) == max(2, l + 2)
    if l >= 1:
        assert [d for d in deg if d == l + 2] == [l + 2]
    # leaves hang on the hub only
    for u, v in g.edges:
        if 1 <= v <= l:
            assert u == 0


def test_graph_invariants_enforced():
    with pytest.raises(ValueError, match="self-loop"):
        Graph(2, ((1, 1),))
    with pytest.raises(ValueError, match="duplicate"):
        Graph(3, ((0, 1), (0, 1)))
    with pytest.raises(ValueError, match="out of range"):
        Graph(2, ((0, 2),))
    with pytest.raises(ValueError, match="normalized"):
        Graph(2, ((1, 0),))
    assert Graph.from_edges(3, [(2, 0), (1, 0)]).edges == ((0, 2), (0, 1))


def test_parse_k2():
    assert parse_graph("2 1\n0 1\n") == Graph(2, ((0, 1),))


def test_serialize_cs31():
    assert serialize_graph(build_cycle_star((3, 1))) == "4 4\n0 1\n0 2\n0 3\n2 3\n"


def test_parse_normalizes_and_ignores_comments():
    text = "# a triangle\n3   3\n2 1\n# middle\n1 0\n0\t2"
    g = parse_graph(text)
    assert g.edges == ((0, 1), (0, 2), (1, 2))


@pytest.mark.parametrize("text,line,fragment", [
    ("3 1\n0 3\n", 2, "out of range"),
    ("3 1\n1 1\n", 2, "self-loop"),
    ("3 2\n0 1\n1 0\n", 3, "duplicate"),
    ("3\n0 1\n", 1, "header"),
    ("3 2\n0 1\n", 2, "declares 2 edges"),
    ("3 1\n0 x\n", 2, "not an integer"),
    ("", 1, "missing header"),
])
def test_parse_errors_carry_line(text, line, fragment):
    with pytest.raises(GraphFormatError, match=fragment) as info:
        parse_graph(text)
    assert info.value.line == line


@given(st.integers(3, 12), st.integers(0, 12))
def test_graph_round_trip(k, l):
    g = build_cycle_star((k, l))
    text = serialize_graph(g)
    assert parse_graph(text) == g.normalized()
    assert serialize_graph(parse_graph(text)) == text


def test_parse_labeling():
    assert parse_labeling("1 1 2 3", 4).labels == (1, 1, 2, 3)
    with pytest.raises(GraphFormatError, match="non-positive"):
        parse_labeling("1 0 2")
    with pytest.raises(GraphFormatError, match="wrong length"):
        parse_labeling("1 2", 3)
    with pytest.raises(GraphFormatError, match="not an integer"):
        parse_labeling("1 2.5")


@given(st.lists(st.integers(1, 10**6), min_size=1, max_size=40))
def test_labeling_round_trip(labels):
    phi = VertexLabeling(tuple(labels))
    assert parse_labeling(serialize_labeling(phi), len(labels)) == phi
    assert phi.span == max(labels)


def test_labeling_rejects_zero():
    with pytest.raises(ValueError):
        VertexLabeling((1, 0))


def test_dot_output():
    g = build_cycle_star((3, 1))
    dot = to_dot(g, VertexLabeling((1, 1, 2, 3)))
    assert dot.startswith("graph G {")
    assert '2 -- 3 [label="5"];' in dot
