"""Immutable simple undirected graphs over dense integer vertex ids.

Edge-list text is the single ingestion format: one ``u v`` pair per line,
``#`` comments and blank lines ignored.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable


class GraphError(ValueError):
    """Base class for malformed graph input."""


class GraphParseError(GraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SelfLoopError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Canonical simple graph.

    ``edges`` holds each unordered pair once as ``(min, max)``;
    ``adjacency[v]`` is the ascending tuple of neighbours of ``v``.
    Build instances with :meth:`from_edges`.
    """

    vertex_count: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        seen: set[Edge] = set()
        nbrs: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            e = _norm(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            nbrs[u].append(v)
            nbrs[v].append(u)
        adjacency = tuple(tuple(sorted(ns)) for ns in nbrs)
        return cls(vertex_count, frozenset(seen), adjacency)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def induced_edges(self, vertices: Iterable[int]) -> list[Edge]:
        vs = set(vertices)
        return sorted((u, v) for u in vs for v in self.adjacency[u] if u < v and v in vs)

    def with_edges(self, add: Iterable[Edge] = (), remove: Iterable[Edge] = ()) -> "Graph":
        """Return a new graph with ``remove`` dropped and ``add`` inserted."""
        drop = {_norm(*e) for e in remove}
        missing = drop - self.edges
        if missing:
            raise GraphError(f"cannot remove absent edges {sorted(missing)}")
        return Graph.from_edges(self.vertex_count, [e for e in self.sorted_edges() if e not in drop] + list(add))

    def _check(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise IndexError(f"vertex {v} out of range for {self.vertex_count} vertices")


def graph_from_edge_list(text: str | bytes) -> Graph:
    """Parse edge-list text into a canonical :class:`Graph`.

    ``vertex_count`` is one more than the largest id mentioned; ids below it
    that never appear become isolated vertices.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    pairs: list[Edge] = []
    seen: dict[Edge, int] = {}
    top = -1
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(lineno, f"expected two vertex ids, got {len(tokens)} tokens")
        ids = []
        for tok in tokens:
            if not tok.isascii() or not tok.isdigit():
                raise GraphParseError(lineno, f"malformed vertex id {tok!r}")
            ids.append(int(tok))
        u, v = ids
        if u == v:
            raise SelfLoopError(lineno, f"self-loop at vertex {u}")
        e = _norm(u, v)
        if e in seen:
            raise DuplicateEdgeError(lineno, f"duplicate edge {u} {v} (first seen on line {seen[e]})")
        seen[e] = lineno
        pairs.append(e)
        top = max(top, v, u)
    return Graph.from_edges(top + 1, pairs)


def to_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.sorted_edges())


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def min_degree(g: Graph) -> int:
    return min((len(ns) for ns in g.adjacency), default=0)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest member."""
    seen = [False] * g.vertex_count
    out = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.vertex_count >= 1 and g.edge_count == g.vertex_count - 1 and is_connected(g)


def is_induced_cycle(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``s`` has at least 3 vertices and ``g[s]`` is a single cycle."""
    members = set(s)
    if len(members) < 3:
        return False
    deg = dict.fromkeys(members, 0)
    for u, v in g.induced_edges(members):
        deg[u] += 1
        deg[v] += 1
    if any(d != 2 for d in deg.values()):
        return False
    # 2-regular: a single cycle iff connected
    start = min(members)
    prev, cur, steps = None, start, 0
    while True:
        nxt = next(w for w in g.adjacency[cur] if w in members and w != prev)
        prev, cur = cur, nxt
        steps += 1
        if cur == start:
            break
    return steps == len(members)


def walk_cycle(g: Graph, s: Iterable[int]) -> tuple[int, ...]:
    """Vertices of the induced cycle on ``s`` in walking order.

    Starts at the smallest member and steps first to its smaller cycle
    neighbour. Caller guarantees :func:`is_induced_cycle`.
    """
    members = set(s)
    start = min(members)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = next(w for w in g.adjacency[cur] if w in members and w != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


# Small named families, shared by tests, the CLI and scripts.

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def wheel_graph(rim: int) -> Graph:
    """Hub 0 joined to the cycle 1..rim; ``wheel_graph(5)`` is W_6."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, edges)


def prism_graph() -> Graph:
    """Triangular prism laid out as a Halin graph: internal 0, 1; leaves 2..5."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5), (2, 5)])


def cube_graph() -> Graph:
    return Graph.from_edges(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])
