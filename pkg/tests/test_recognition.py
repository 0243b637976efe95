from collections import deque

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from halin.graph import Graph, complete_bipartite, complete_graph, cube_graph, cycle_graph, path_graph, prism_graph
from halin.recognition import (
    HalinCertificate,
    OracleBoundExceeded,
    Reason,
    SpanningTree,
    Verdict,
    bfs_tree,
    check_certificate,
    recognize_oracle,
    recognize_paper,
    shortest_path_certificate,
    verify_certificate,
)

from conftest import FIXTURES, load

STAR4 = HalinCertificate(SpanningTree.from_parent(0, {1: 0, 2: 0, 3: 0}), (1, 2, 3))
PRISM = HalinCertificate(SpanningTree.from_parent(0, {1: 0, 2: 0, 3: 0, 4: 1, 5: 1}), (2, 3, 4, 5))


def test_bfs_tree_k4_is_star():
    t = bfs_tree(complete_graph(4), 0)
    assert dict(t.parent) == {1: 0, 2: 0, 3: 0}
    assert t.leaves() == [1, 2, 3]


def test_bfs_tree_path():
    t = bfs_tree(path_graph(3), 0)
    assert dict(t.parent) == {1: 0, 2: 1}
    assert t.leaves() == [2]
    assert dict(t.depth) == {0: 0, 1: 1, 2: 2}


def test_bfs_tree_c4_ascending_rule():
    t = bfs_tree(cycle_graph(4), 0)
    assert dict(t.parent) == {1: 0, 2: 1, 3: 0}
    assert t.leaves() == [2, 3]


def test_bfs_tree_disconnected():
    with pytest.raises(ValueError):
        bfs_tree(Graph.from_edges(4, [(0, 1), (2, 3)]), 0)


def test_verify_examples():
    k4 = complete_graph(4)
    assert verify_certificate(k4, STAR4)
    assert verify_certificate(k4, HalinCertificate(STAR4.tree, (1, 3, 2)))
    assert verify_certificate(prism_graph(), PRISM)


@pytest.mark.parametrize("g,cert,reason", [
    # vertex 3 missing from the tree
    (complete_graph(4), HalinCertificate(SpanningTree.from_parent(0, {1: 0, 2: 0}), (1, 2)), Reason.NOT_SPANNING),
    # the path 2-0-1-3 gives 0 and 1 tree-degree 2
    (complete_graph(4), HalinCertificate(SpanningTree.from_parent(2, {0: 2, 1: 0, 3: 1}), (2, 3)),
     Reason.DEGREE_TWO_IN_TREE),
    # leaf order that skips the real cycle edges
    (prism_graph(), HalinCertificate(PRISM.tree, (2, 4, 3, 5)), Reason.NON_TREE_EDGE_SET_MISMATCH),
    (prism_graph(), HalinCertificate(PRISM.tree, (2, 3, 4)), Reason.LEAF_SET_MISMATCH),
])
def test_verify_reason_codes(g, cert, reason):
    assert check_certificate(g, cert) is reason
    assert not verify_certificate(g, cert)


def test_tree_edge_absent_from_graph():
    cert = HalinCertificate(SpanningTree.from_parent(0, {1: 0, 2: 0, 3: 0, 4: 0, 5: 1}), (2, 3, 4, 5))
    assert check_certificate(prism_graph(), cert) is Reason.NOT_SPANNING


def test_k33_fails_only_on_plane_order():
    # star at 0 over {3,4,5}, with 3 also parent of 1 and 2: every other invariant holds
    cert = HalinCertificate(SpanningTree.from_parent(0, {3: 0, 4: 0, 5: 0, 1: 3, 2: 3}), (1, 4, 2, 5))
    assert check_certificate(complete_bipartite(3, 3), cert) is Reason.NOT_PLANE_ORDER


def test_two_leaf_triangles_are_not_one_cycle():
    star = [(0, i) for i in range(1, 7)]
    g = Graph.from_edges(7, star + [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
    report = recognize_paper(g)
    assert not report.is_halin
    assert report.roots_tried[0] == (0, Reason.NOT_INDUCED_CYCLE)


def test_recognize_paper_k4():
    report = recognize_paper(complete_graph(4))
    assert report.verdict is Verdict.HALIN
    assert report.certificate.tree.root == 0
    assert dict(report.certificate.tree.parent) == {1: 0, 2: 0, 3: 0}
    assert report.certificate.leaf_cycle == (1, 2, 3)
    assert report.roots_tried == []


def test_recognize_paper_c6_prefilter():
    report = recognize_paper(cycle_graph(6))
    assert report.verdict is Verdict.NOT_HALIN
    assert report.roots_tried == [(None, Reason.LOW_DEGREE)]


def test_recognize_q3_both_paths():
    g = cube_graph()
    assert not recognize_paper(g).is_halin
    assert not recognize_oracle(g).is_halin
    assert not recognize_oracle(g, prune=False).is_halin


def test_recognize_k33_both_paths():
    g = complete_bipartite(3, 3)
    report = recognize_paper(g)
    assert not report.is_halin
    assert (0, Reason.NOT_PLANE_ORDER) in report.roots_tried
    assert not recognize_oracle(g).is_halin
    assert not recognize_oracle(g, prune=False).is_halin


def test_oracle_k4_and_prism():
    assert recognize_oracle(complete_graph(4)).is_halin
    report = recognize_oracle(prism_graph())
    assert report.oracle_used
    assert report.certificate.tree.edges() == PRISM.tree.edges()
    assert verify_certificate(prism_graph(), report.certificate)


def test_oracle_bound():
    with pytest.raises(OracleBoundExceeded):
        recognize_oracle(cycle_graph(15))
    assert not recognize_oracle(cycle_graph(15), bound=15).is_halin


def test_oracle_disconnected():
    g = Graph.from_edges(8, [(u, v) for u in range(4) for v in range(u + 1, 4)] +
                         [(u, v) for u in range(4, 8) for v in range(u + 1, 8)])
    assert not recognize_oracle(g).is_halin
    assert recognize_paper(g).roots_tried == [(None, Reason.DISCONNECTED)]


def test_small_inputs():
    assert recognize_paper(complete_graph(3)).roots_tried == [(None, Reason.TOO_SMALL)]


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_certificate_rotation_and_reflection(small_halin, data):
    inst = data.draw(st.sampled_from(small_halin))
    k = data.draw(st.integers(0, len(inst.cert.leaf_cycle) - 1))
    cyc = inst.cert.leaf_cycle[k:] + inst.cert.leaf_cycle[:k]
    if data.draw(st.booleans()):
        cyc = cyc[::-1]
    assert verify_certificate(inst.graph, HalinCertificate(inst.cert.tree, cyc))


def test_paper_soundness(small_halin, negatives):
    for inst in small_halin + negatives:
        report = recognize_paper(inst.graph)
        if report.is_halin:
            assert verify_certificate(inst.graph, report.certificate), inst.name


def test_oracle_dominance_and_generator_positives(small_halin, negatives):
    for inst in small_halin + negatives:
        oracle = recognize_oracle(inst.graph)
        if recognize_paper(inst.graph).is_halin:
            assert oracle.is_halin, inst.name
        if inst.cert is not None:
            assert oracle.is_halin, inst.name
        if oracle.is_halin:
            assert verify_certificate(inst.graph, oracle.certificate)


def test_pruned_oracle_matches_plain_enumeration(small_halin, negatives):
    for inst in small_halin[:40] + negatives[:60]:
        fast = recognize_oracle(inst.graph)
        slow = recognize_oracle(inst.graph, prune=False)
        assert fast.verdict == slow.verdict, inst.name


def test_halin_verdicts_are_planar(small_halin, negatives):
    # independent cross-check of the plane-order condition
    for inst in small_halin + negatives:
        g = inst.graph
        if recognize_oracle(g).is_halin:
            assert nx.check_planarity(nx.Graph(list(g.edges)))[0], inst.name


def test_reports_are_deterministic(small_halin):
    for inst in small_halin[:30]:
        a, b = recognize_paper(inst.graph), recognize_paper(inst.graph)
        assert a.to_dict() == b.to_dict()
        assert a.to_text() == b.to_text()


def test_report_serialization():
    report = recognize_paper(complete_graph(4))
    d = report.to_dict()
    assert d == {
        "verdict": "Halin",
        "method": "paper",
        "certificate": {"root": 0, "tree_edges": [[0, 1], [0, 2], [0, 3]], "leaf_cycle": [1, 2, 3]},
        "roots_tried": [],
    }
    assert "leaf cycle: 1 2 3" in report.to_text()
    assert HalinCertificate.from_dict(d["certificate"]) == report.certificate


# documented false negatives of the BFS test (see fixtures/paper_false_negatives/NOTES.md)

def test_documented_false_negatives():
    files = sorted((FIXTURES / "paper_false_negatives").glob("*.edges"))
    assert len(files) == 2
    for path in files:
        g = load(f"paper_false_negatives/{path.name}")
        report = recognize_paper(g)
        assert not report.is_halin
        assert [why for _, why in report.roots_tried] == [Reason.LEAF_SET_MISMATCH] * g.vertex_count
        assert recognize_oracle(g).is_halin


def _bfs_with_order(g, root, rank):
    """BFS whose queue discipline is FIFO but whose neighbour scan follows ``rank``."""
    parent = {}
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(g.adjacency[u], key=rank.__getitem__):
            if w not in seen:
                seen.add(w)
                parent[w] = u
                queue.append(w)
    return SpanningTree.from_parent(root, parent)


def test_order_dependent_miss_is_found_with_another_order():
    g = load("paper_false_negatives/halin_k3_d3_s7.edges")
    rank = {v: v for v in g.vertices()}
    rank[2], rank[3] = rank[3], rank[2]  # scan 3 before 2
    tree = _bfs_with_order(g, 0, rank)
    cert = HalinCertificate(tree, (4, 5, 2, 6, 7))
    assert verify_certificate(g, cert)
    assert shortest_path_certificate(g) is not None


def test_order_independent_miss():
    g = load("paper_false_negatives/halin_k4_d3_s18.edges")
    assert shortest_path_certificate(g) is None
