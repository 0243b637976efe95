import dataclasses
from itertools import combinations

import pytest
from hypothesis import given

from halin.graph import (
    DuplicateEdgeError,
    Graph,
    GraphParseError,
    SelfLoopError,
    complete_graph,
    cycle_graph,
    degree,
    graph_from_edge_list,
    is_induced_cycle,
    is_tree,
    path_graph,
    to_edge_list,
)

from conftest import graphs, load


def test_parse_triangle():
    g = graph_from_edge_list(b"0 1\n1 2\n0 2\n")
    assert g.vertex_count == 3
    assert g.sorted_edges() == [(0, 1), (0, 2), (1, 2)]


def test_parse_k4_with_comments():
    text = "# K4\n# every pair of a 4-set\n" + "".join(f"{u} {v}\n" for u, v in combinations(range(4), 2))
    assert len(text.splitlines()) == 8
    g = graph_from_edge_list(text)
    assert g.vertex_count == 4 and g.edge_count == 6
    assert all(degree(g, v) == 3 for v in g.vertices())


def test_parse_tabs_blank_lines_and_isolated_vertices():
    g = graph_from_edge_list("\n  # note\n0\t\t3\n\n")
    assert g.vertex_count == 4
    assert [degree(g, v) for v in g.vertices()] == [1, 0, 0, 1]


def test_duplicate_edge_reports_line():
    with pytest.raises(DuplicateEdgeError) as exc:
        graph_from_edge_list("0 1\n0 1\n")
    assert exc.value.line == 2


def test_reversed_duplicate_is_duplicate():
    with pytest.raises(DuplicateEdgeError):
        graph_from_edge_list("0 1\n1 0\n")


@pytest.mark.parametrize("text,line", [
    ("0 1\n1 x\n", 2),
    ("0 -1\n", 1),
    ("0 1 2\n", 1),
    ("7\n", 1),
    ("0 1.5\n", 1),
])
def test_malformed_lines(text, line):
    with pytest.raises(GraphParseError) as exc:
        graph_from_edge_list(text)
    assert exc.value.line == line


def test_self_loop():
    with pytest.raises(SelfLoopError):
        graph_from_edge_list("0 1\n2 2\n")


def test_fixture_files_parse():
    with pytest.raises(DuplicateEdgeError):
        load("bad_duplicate.edges")
    assert load("k4.edges") == complete_graph(4)


def test_graph_is_immutable():
    g = complete_graph(3)
    with pytest.raises(dataclasses.FrozenInstanceError):
        g.vertex_count = 5


@pytest.mark.parametrize("g,v,expected", [
    (complete_graph(4), 0, 3),
    (path_graph(3), 1, 2),
    (graph_from_edge_list("0 2\n"), 1, 0),
])
def test_degree(g, v, expected):
    assert degree(g, v) == expected


def test_degree_out_of_range():
    with pytest.raises(IndexError):
        degree(complete_graph(3), 3)


def test_is_tree_examples():
    assert is_tree(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert not is_tree(cycle_graph(3))
    assert not is_tree(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_tree(Graph.from_edges(1, []))


def test_is_induced_cycle_examples():
    assert is_induced_cycle(cycle_graph(5), range(5))
    assert is_induced_cycle(complete_graph(4), {0, 1, 2})
    assert not is_induced_cycle(complete_graph(4), range(4))
    # two disjoint triangles: 2-regular but not one cycle
    two = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_induced_cycle(two, range(6))
    # C_6 with a chord
    assert not is_induced_cycle(cycle_graph(6).with_edges(add=[(0, 3)]), range(6))


@given(graphs())
def test_round_trip(g):
    back = graph_from_edge_list(to_edge_list(g))
    # trailing isolated vertices are not representable in an edge list
    top = max((v for e in g.edges for v in e), default=-1)
    assert back.vertex_count == top + 1
    assert back.edges == g.edges
    assert to_edge_list(back) == to_edge_list(g)


@given(graphs())
def test_serialization_is_sorted_and_ascending(g):
    pairs = [tuple(map(int, line.split())) for line in to_edge_list(g).splitlines()]
    assert pairs == sorted(pairs)
    assert all(u < v for u, v in pairs)


@given(graphs())
def test_adjacency_is_canonical(g):
    for v in g.vertices():
        ns = g.adjacency[v]
        assert list(ns) == sorted(set(ns))
        assert all(v in g.adjacency[w] for w in ns)
        assert degree(g, v) == len(ns) == sum(1 for e in g.edges if v in e)


@given(graphs(max_n=7))
def test_induced_cycle_needs_three(g):
    for k in (1, 2):
        for s in combinations(g.vertices(), k):
            assert not is_induced_cycle(g, s)


def _union_find_connected(g):
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in g.edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in g.vertices()}) == 1


@given(graphs())
def test_is_tree_against_union_find(g):
    expected = _union_find_connected(g) and g.edge_count == g.vertex_count - 1
    assert is_tree(g) == expected
    if is_tree(g):
        assert g.edge_count == g.vertex_count - 1
