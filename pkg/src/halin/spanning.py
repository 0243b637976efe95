"""Exhaustive spanning-tree enumeration.

Each edge, in ascending order, is either contracted into the tree or
deleted from the graph. Contraction is skipped when it would close a cycle;
deletion is skipped when the edge is a bridge of what remains. Every leaf
of the recursion is therefore a distinct spanning tree, with no dead ends.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .graph import Edge, Graph


def _spans(n: int, live: list[Edge]) -> bool:
    dsu = list(range(n))

    def find(x: int) -> int:
        while dsu[x] != x:
            dsu[x] = dsu[dsu[x]]
            x = dsu[x]
        return x

    parts = n
    for u, v in live:
        ru, rv = find(u), find(v)
        if ru != rv:
            dsu[ru] = rv
            parts -= 1
            if parts == 1:
                return True
    return parts <= 1


def spanning_trees(
    g: Graph,
    admissible: Callable[[list[Edge], list[Edge]], bool] | None = None,
) -> Iterator[list[Edge]]:
    """Yield every spanning tree of ``g`` as a sorted edge list.

    ``admissible(tree_edges, deleted_edges)`` may prune partial states; it is
    called after each decision and must only reject states that cannot extend
    to a tree the caller wants. Disconnected graphs yield nothing.
    """
    n = g.vertex_count
    edges = g.sorted_edges()
    if n == 0:
        return
    if not _spans(n, edges):
        return

    tree: list[Edge] = []
    deleted: list[Edge] = []
    decided = [False] * len(edges)

    def live_edges() -> list[Edge]:
        return [e for e, d in zip(edges, decided) if not d] + tree

    def rec(i: int, dsu_parent: list[int]) -> Iterator[list[Edge]]:
        if len(tree) == n - 1:
            yield sorted(tree)
            return
        if i == len(edges):
            return
        u, v = edges[i]
        ru, rv = _find(dsu_parent, u), _find(dsu_parent, v)
        decided[i] = True
        if ru != rv:
            tree.append(edges[i])
            if admissible is None or admissible(tree, deleted):
                child = dsu_parent.copy()
                child[ru] = rv
                yield from rec(i + 1, child)
            tree.pop()
        # deleting edges[i]: allowed unless it is a bridge of the remaining graph
        if ru == rv or _spans(n, live_edges()):
            deleted.append(edges[i])
            if admissible is None or admissible(tree, deleted):
                yield from rec(i + 1, dsu_parent)
            deleted.pop()
        decided[i] = False

    yield from rec(0, list(range(n)))


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        x = parent[x]
    return x


def count_spanning_trees(g: Graph) -> int:
    return sum(1 for _ in spanning_trees(g))
