"""Induced odd wheels and chromatic number of Halin graphs.

A vertex ``v`` is the hub of an induced odd wheel exactly when its
neighbourhood ``G[N(v)]`` contains an odd cycle: a shortest odd cycle there is
chordless, so it is induced in ``G[N(v)]`` and hence in ``G``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, is_induced_cycle
from .recognition import HalinCertificate, check_certificate

WHEEL_ORACLE_BOUND = 10
CHROMATIC_ORACLE_BOUND = 14


class BoundExceeded(ValueError):
    pass


class InvalidCertificate(ValueError):
    pass


@dataclass(frozen=True)
class WheelWitness:
    hub: int
    rim: tuple[int, ...]

    def is_valid(self, g: Graph) -> bool:
        rim = self.rim
        return (
            len(rim) >= 3
            and len(rim) % 2 == 1
            and self.hub not in rim
            and all(g.has_edge(self.hub, v) for v in rim)
            and is_induced_cycle(g, rim)
            and all(g.has_edge(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim)))
        )

    def to_text(self) -> str:
        return f"hub {self.hub}; rim " + " ".join(map(str, self.rim))

    def to_dict(self) -> dict:
        return {"hub": self.hub, "rim": list(self.rim)}


def shortest_odd_cycle(g: Graph, vertices: set[int]) -> tuple[int, ...] | None:
    """Shortest odd cycle of ``g[vertices]``, or None if that subgraph is bipartite.

    BFS from every start ``s``; an edge between two vertices at equal distance
    ``d`` closes an odd walk of length ``2d + 1``. At the global minimum the two
    BFS paths share only ``s``, so the walk is a simple cycle.
    """
    best: tuple[int, ...] | None = None
    for s in sorted(vertices):
        dist = {s: 0}
        parent = {s: s}
        queue = deque([s])
        found = None
        while queue and found is None:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= len(best):
                break
            for w in g.adjacency[u]:
                if w not in vertices:
                    continue
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif dist[w] == dist[u] and u < w:
                    found = (u, w)
                    break
        if found is None:
            continue
        x, y = found
        left = [x]
        while left[-1] != s:
            left.append(parent[left[-1]])
        right = [y]
        while right[-1] != s:
            right.append(parent[right[-1]])
        cycle = tuple(reversed(left)) + tuple(right[:-1])
        if best is None or len(cycle) < len(best):
            best = cycle
    return best


def find_odd_wheel(g: Graph) -> WheelWitness | None:
    """Induced odd wheel with the smallest hub; shortest rim for that hub."""
    for v in g.vertices():
        nbrs = set(g.adjacency[v])
        if len(nbrs) < 3:
            continue
        rim = shortest_odd_cycle(g, nbrs)
        if rim is not None:
            return WheelWitness(v, rim)
    return None


def has_even_wheel(g: Graph) -> bool:
    """Byproduct flag: some vertex sees an induced even cycle of length >= 4
    in its neighbourhood. Exhaustive; only meant for small graphs."""
    for v in g.vertices():
        nbrs = g.adjacency[v]
        for k in range(4, len(nbrs) + 1, 2):
            if any(is_induced_cycle(g, rim) for rim in combinations(nbrs, k)):
                return True
    return False


def oracle_find_odd_wheel(g: Graph, bound: int = WHEEL_ORACLE_BOUND) -> WheelWitness | None:
    """Check every odd subset of every neighbourhood for an induced cycle."""
    if g.vertex_count > bound:
        raise BoundExceeded(f"wheel oracle limited to {bound} vertices, got {g.vertex_count}")
    for v in g.vertices():
        nbrs = g.adjacency[v]
        for k in range(3, len(nbrs) + 1, 2):
            for subset in combinations(nbrs, k):
                if is_induced_cycle(g, subset):
                    return WheelWitness(v, _cycle_order(g, subset))
    return None


def _cycle_order(g: Graph, members) -> tuple[int, ...]:
    ms = set(members)
    order = [min(ms)]
    prev = None
    while True:
        nxt = next(w for w in g.adjacency[order[-1]] if w in ms and w != prev)
        if nxt == order[0]:
            return tuple(order)
        prev = order[-1]
        order.append(nxt)


def find_triangle_in_certificate(g: Graph, cert: HalinCertificate) -> tuple[int, int, int] | None:
    """Two cycle-consecutive leaves with a common tree parent, plus that parent."""
    cycle = cert.leaf_cycle
    parent = cert.tree.parent
    for i, a in enumerate(cycle):
        b = cycle[(i + 1) % len(cycle)]
        if parent[a] == parent[b]:
            return (parent[a], a, b)
    return None


def chromatic_number_halin(g: Graph, cert: HalinCertificate) -> int:
    """3 if ``g`` has no induced odd wheel, otherwise 4."""
    why = check_certificate(g, cert)
    if why is not None:
        raise InvalidCertificate(f"certificate rejected: {why.value}")
    assert find_triangle_in_certificate(g, cert) is not None, "Halin graph without a sibling-leaf triangle"
    return 4 if find_odd_wheel(g) is not None else 3


def brute_force_chromatic(g: Graph, bound: int = CHROMATIC_ORACLE_BOUND) -> int:
    """Smallest k admitting a proper k-colouring, by plain backtracking."""
    n = g.vertex_count
    if n > bound:
        raise BoundExceeded(f"chromatic oracle limited to {bound} vertices, got {n}")
    if n == 0:
        return 0
    order = sorted(g.vertices(), key=lambda v: (-len(g.adjacency[v]), v))
    k = 1
    while not k_colorable(g, k, order):
        k += 1
    return k


def k_colorable(g: Graph, k: int, order: list[int] | None = None) -> bool:
    if order is None:
        order = list(g.vertices())
    color = [0] * g.vertex_count

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {color[w] for w in g.adjacency[v]}
        # colours are interchangeable: the next vertex may open at most one new colour
        for c in range(1, min(k, used + 1) + 1):
            if c not in taken:
                color[v] = c
                if place(i + 1, max(used, c)):
                    return True
                color[v] = 0
        return False

    return place(0, 0)
