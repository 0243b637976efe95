"""Halin recognition: the BFS-per-root test and an exhaustive oracle.

Both paths return a :class:`RecognitionReport`; a positive report always
carries a :class:`HalinCertificate` that :func:`verify_certificate` accepts.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from .graph import Edge, Graph, components, is_induced_cycle, min_degree, walk_cycle
from .spanning import spanning_trees

DEFAULT_ORACLE_BOUND = 14


class OracleBoundExceeded(ValueError):
    def __init__(self, n: int, bound: int):
        super().__init__(f"graph has {n} vertices; oracle bound is {bound}")
        self.n = n
        self.bound = bound


class Reason(str, enum.Enum):
    """Why a certificate (or a root of the BFS test) was rejected."""

    NOT_SPANNING = "NotSpanning"
    DEGREE_TWO_IN_TREE = "DegreeTwoInTree"
    NON_TREE_EDGE_SET_MISMATCH = "NonTreeEdgeSetMismatch"
    LEAF_SET_MISMATCH = "LeafSetMismatch"
    NOT_INDUCED_CYCLE = "NotInducedCycle"
    NOT_PLANE_ORDER = "LeafCycleNotPlaneOrder"
    # pre-filter outcomes, reported instead of per-root traces
    DISCONNECTED = "Disconnected"
    LOW_DEGREE = "MinDegreeBelow3"
    TOO_SMALL = "TooSmall"


class Verdict(str, enum.Enum):
    HALIN = "Halin"
    NOT_HALIN = "NotHalin"


@dataclass(frozen=True)
class SpanningTree:
    root: int
    parent: Mapping[int, int]
    depth: Mapping[int, int]

    @classmethod
    def from_parent(cls, root: int, parent: Mapping[int, int]) -> "SpanningTree":
        """Raises ValueError if following parents from some vertex never reaches ``root``."""
        depth = {root: 0}
        for start in parent:
            chain = []
            v = start
            while v not in depth:
                if v not in parent or len(chain) > len(parent):
                    raise ValueError(f"vertex {start} does not reach root {root}")
                chain.append(v)
                v = parent[v]
            d = depth[v]
            for w in reversed(chain):
                d += 1
                depth[w] = d
        return cls(root, dict(parent), depth)

    @classmethod
    def from_edges(cls, root: int, edges: Sequence[Edge]) -> "SpanningTree":
        nbrs: dict[int, list[int]] = {root: []}
        for u, v in edges:
            nbrs.setdefault(u, []).append(v)
            nbrs.setdefault(v, []).append(u)
        parent: dict[int, int] = {}
        queue = deque([root])
        seen = {root}
        while queue:
            u = queue.popleft()
            for w in sorted(nbrs[u]):
                if w not in seen:
                    seen.add(w)
                    parent[w] = u
                    queue.append(w)
        return cls.from_parent(root, parent)

    def vertices(self) -> list[int]:
        return sorted({self.root, *self.parent})

    def edges(self) -> list[Edge]:
        return sorted((min(v, p), max(v, p)) for v, p in self.parent.items())

    def children(self) -> dict[int, list[int]]:
        kids: dict[int, list[int]] = {v: [] for v in self.vertices()}
        for v in sorted(self.parent):
            kids[self.parent[v]].append(v)
        return kids

    def leaves(self) -> list[int]:
        """Vertices that are nobody's parent."""
        parents = set(self.parent.values())
        return [v for v in self.vertices() if v not in parents]

    def tree_degree(self, v: int) -> int:
        d = sum(1 for p in self.parent.values() if p == v)
        return d + (1 if v in self.parent else 0)


@dataclass(frozen=True)
class HalinCertificate:
    tree: SpanningTree
    leaf_cycle: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "root": self.tree.root,
            "tree_edges": [list(e) for e in self.tree.edges()],
            "leaf_cycle": list(self.leaf_cycle),
        }

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "HalinCertificate":
        tree = SpanningTree.from_edges(d["root"], [tuple(e) for e in d["tree_edges"]])
        return cls(tree, tuple(d["leaf_cycle"]))


@dataclass
class RecognitionReport:
    verdict: Verdict
    certificate: HalinCertificate | None = None
    roots_tried: list[tuple[int | None, Reason]] = field(default_factory=list)
    oracle_used: bool = False

    @property
    def is_halin(self) -> bool:
        return self.verdict is Verdict.HALIN

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "method": "oracle" if self.oracle_used else "paper",
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "roots_tried": [{"root": r, "reason": why.value} for r, why in self.roots_tried],
        }

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [f"verdict: {d['verdict']}", f"method: {d['method']}"]
        cert = d["certificate"]
        if cert:
            lines.append(f"root: {cert['root']}")
            lines.append("tree edges: " + " ".join(f"{u}-{v}" for u, v in cert["tree_edges"]))
            lines.append("leaf cycle: " + " ".join(map(str, cert["leaf_cycle"])))
        for entry in d["roots_tried"]:
            who = "-" if entry["root"] is None else entry["root"]
            lines.append(f"rejected root {who}: {entry['reason']}")
        return "\n".join(lines) + "\n"


def _bfs_arrays(g: Graph, root: int) -> tuple[list[int], list[int]]:
    """Parent and depth lists of the ascending-order BFS tree; -1 marks unreached."""
    n = g.vertex_count
    parent = [-1] * n
    depth = [-1] * n
    depth[root] = 0
    queue = deque([root])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = depth[u] + 1
        for w in adj[u]:
            if depth[w] < 0:
                depth[w] = du
                parent[w] = u
                queue.append(w)
    return parent, depth


def bfs_tree(g: Graph, root: int) -> SpanningTree:
    """Breadth-first spanning tree, neighbours scanned in ascending order."""
    g._check(root)
    parent, depth = _bfs_arrays(g, root)
    if min(depth) < 0:
        raise ValueError("graph is disconnected")
    return SpanningTree(
        root,
        {v: p for v, p in enumerate(parent) if v != root},
        dict(enumerate(depth)),
    )


def check_certificate(g: Graph, cert: HalinCertificate) -> Reason | None:
    """First violated certificate invariant, or None if ``cert`` is valid."""
    tree = cert.tree
    n = g.vertex_count
    if tree.vertices() != list(range(n)) or len(tree.parent) != n - 1:
        return Reason.NOT_SPANNING
    if any(not g.has_edge(v, p) for v, p in tree.parent.items()):
        return Reason.NOT_SPANNING
    try:
        SpanningTree.from_parent(tree.root, tree.parent)
    except ValueError:
        return Reason.NOT_SPANNING

    kids = tree.children()
    for v in range(n):
        if len(kids[v]) + (v != tree.root) == 2:
            return Reason.DEGREE_TWO_IN_TREE

    tree_edges = set(tree.edges())
    non_tree = g.edges - tree_edges
    touched = {x for e in non_tree for x in e}
    leaves = set(tree.leaves())
    if touched != leaves:
        return Reason.LEAF_SET_MISMATCH
    cycle = cert.leaf_cycle
    if len(cycle) < 3 or len(set(cycle)) != len(cycle) or set(cycle) != leaves:
        return Reason.LEAF_SET_MISMATCH
    cycle_edges = {tuple(sorted((cycle[i], cycle[(i + 1) % len(cycle)]))) for i in range(len(cycle))}
    if cycle_edges != non_tree:
        return Reason.NON_TREE_EDGE_SET_MISMATCH
    if not is_induced_cycle(g, leaves):
        return Reason.NOT_INDUCED_CYCLE
    if not _subtrees_contiguous(tree, cycle):
        return Reason.NOT_PLANE_ORDER
    return None


def _subtrees_contiguous(tree: SpanningTree, cycle: Sequence[int]) -> bool:
    """Every subtree's leaves occupy one arc of ``cycle``.

    A leaf set is an arc iff at most two cycle edges leave it. The number of
    cycle edges leaving subtree(v) is the subtree sum of +1 at both ends of
    each edge and -2 at their lowest common ancestor.
    """
    parent, depth = tree.parent, tree.depth
    cut = dict.fromkeys(depth, 0)
    for i, a in enumerate(cycle):
        b = cycle[(i + 1) % len(cycle)]
        cut[a] += 1
        cut[b] += 1
        x, y = a, b
        while depth[x] > depth[y]:
            x = parent[x]
        while depth[y] > depth[x]:
            y = parent[y]
        while x != y:
            x, y = parent[x], parent[y]
        cut[x] -= 2
    for v in sorted(depth, key=depth.__getitem__, reverse=True):
        if v == tree.root:
            continue
        if cut[v] > 2:
            return False
        cut[parent[v]] += cut[v]
    return True


def verify_certificate(g: Graph, cert: HalinCertificate) -> bool:
    return check_certificate(g, cert) is None


def _prefilter(g: Graph) -> Reason | None:
    if g.vertex_count < 4:
        return Reason.TOO_SMALL
    if len(components(g)) != 1:
        return Reason.DISCONNECTED
    if min_degree(g) < 3:
        return Reason.LOW_DEGREE
    return None


def _try_root(g: Graph, root: int) -> tuple[HalinCertificate | None, Reason | None]:
    parent, _ = _bfs_arrays(g, root)
    is_parent = [False] * g.vertex_count
    for v, p in enumerate(parent):
        if v != root:
            is_parent[p] = True
    s_v: set[int] = set()
    non_tree = 0
    for u, v in g.edges:
        if parent[u] != v and parent[v] != u:
            non_tree += 1
            s_v.add(u)
            s_v.add(v)
    leaves = {v for v in range(g.vertex_count) if not is_parent[v]}
    if s_v != leaves:
        return None, Reason.LEAF_SET_MISMATCH
    if non_tree != len(s_v):
        return None, Reason.NON_TREE_EDGE_SET_MISMATCH
    if not is_induced_cycle(g, s_v):
        return None, Reason.NOT_INDUCED_CYCLE
    cert = HalinCertificate(bfs_tree(g, root), walk_cycle(g, s_v))
    why = check_certificate(g, cert)
    if why is not None:
        return None, why
    return cert, None


def recognize_paper(g: Graph) -> RecognitionReport:
    """BFS from every root in ascending order; accept the first tree whose
    non-tree edges form an induced cycle on exactly its leaves."""
    why = _prefilter(g)
    if why is not None:
        return RecognitionReport(Verdict.NOT_HALIN, roots_tried=[(None, why)])
    tried: list[tuple[int | None, Reason]] = []
    for root in range(g.vertex_count):
        cert, why = _try_root(g, root)
        if cert is not None:
            return RecognitionReport(Verdict.HALIN, cert, tried)
        tried.append((root, why))
    return RecognitionReport(Verdict.NOT_HALIN, roots_tried=tried)


def _leaf_cycle_from_tree(g: Graph, tree_edges: list[Edge]) -> HalinCertificate | None:
    deg = [0] * g.vertex_count
    for u, v in tree_edges:
        deg[u] += 1
        deg[v] += 1
    leaves = [v for v in range(g.vertex_count) if deg[v] == 1]
    non_tree = g.edges - set(tree_edges)
    if len(non_tree) != len(leaves) or not is_induced_cycle(g, leaves):
        return None
    # root at an internal vertex so "leaf" means both tree-degree 1 and childless
    root = next((v for v in range(g.vertex_count) if deg[v] >= 3), None)
    if root is None:
        return None
    cert = HalinCertificate(SpanningTree.from_edges(root, tree_edges), walk_cycle(g, leaves))
    return cert if verify_certificate(g, cert) else None


def _halin_admissible(n: int):
    """Partial-state filter: a deleted edge joins two leaves, and a leaf lies
    on exactly two cycle edges and one tree edge."""

    def ok(tree: list[Edge], deleted: list[Edge]) -> bool:
        cyc = [0] * n
        for u, v in deleted:
            cyc[u] += 1
            cyc[v] += 1
        if max(cyc) > 2:
            return False
        tdeg = [0] * n
        for u, v in tree:
            tdeg[u] += 1
            tdeg[v] += 1
        return all(not (c and t > 1) for c, t in zip(cyc, tdeg))

    return ok


def recognize_oracle(g: Graph, bound: int = DEFAULT_ORACLE_BOUND, prune: bool = True) -> RecognitionReport:
    """Try every spanning tree of ``g`` as the tree part of a Halin graph.

    ``prune`` skips partial trees that already contradict the leaf/cycle
    degree pattern; it never changes the verdict, only the running time.
    """
    if g.vertex_count > bound:
        raise OracleBoundExceeded(g.vertex_count, bound)
    admissible = _halin_admissible(g.vertex_count) if prune and g.vertex_count else None
    for tree_edges in spanning_trees(g, admissible):
        cert = _leaf_cycle_from_tree(g, tree_edges)
        if cert is not None:
            return RecognitionReport(Verdict.HALIN, cert, oracle_used=True)
    return RecognitionReport(Verdict.NOT_HALIN, oracle_used=True)


def shortest_path_certificate(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> HalinCertificate | None:
    """A Halin certificate whose tree is a shortest-path tree from its root.

    Every BFS tree, under any neighbour order, is a shortest-path tree, so
    None here means the BFS test rejects ``g`` whatever order it scans in.
    """
    if g.vertex_count > bound:
        raise OracleBoundExceeded(g.vertex_count, bound)
    if g.vertex_count == 0 or len(components(g)) != 1:
        return None
    dist = [_bfs_arrays(g, v)[1] for v in range(g.vertex_count)]
    for tree_edges in spanning_trees(g, _halin_admissible(g.vertex_count)):
        if _leaf_cycle_from_tree(g, tree_edges) is None:
            continue
        for root in range(g.vertex_count):
            tree = SpanningTree.from_edges(root, tree_edges)
            if all(tree.depth[v] == dist[root][v] for v in range(g.vertex_count)):
                cert = HalinCertificate(tree, walk_cycle(g, tree.leaves()))
                if verify_certificate(g, cert):
                    return cert
    return None
