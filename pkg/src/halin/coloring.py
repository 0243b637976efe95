"""Three-colouring of odd-wheel-free Halin graphs, plus an exact fallback.

The three-colouring works on a plane-oriented tree: children are ordered so
that a depth-first walk meets the leaves in leaf-cycle order. Leftmost leaf
``p`` and the parent of the rightmost leaf ``q`` are precoloured 3, the two
root paths towards them alternate 1/2 by depth, and a depth-first sweep gives
every other vertex the smallest colour its coloured neighbours leave free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .graph import Graph
from .recognition import HalinCertificate, check_certificate
from .wheels import WheelWitness, find_odd_wheel

PALETTE = {1: "#e41a1c", 2: "#377eb8", 3: "#4daf4a", 4: "#984ea3"}


class OrientationError(ValueError):
    pass


class ColoringGap(RuntimeError):
    """The three-colouring procedure got stuck; ``partial`` holds what it had."""

    def __init__(self, message: str, partial: Mapping[int, int]):
        super().__init__(message)
        self.partial = dict(partial)


class EmptyCandidateSet(ColoringGap):
    def __init__(self, vertex: int, seen: set[int], partial: Mapping[int, int]):
        super().__init__(f"vertex {vertex}: coloured neighbours already use {sorted(seen)}", partial)
        self.vertex = vertex
        self.seen = seen


class PrecolorConflict(ColoringGap):
    def __init__(self, edge: tuple[int, int], partial: Mapping[int, int]):
        super().__init__(f"precoloured edge {edge} is monochromatic", partial)
        self.edge = edge


class PreconditionViolated(ValueError):
    def __init__(self, witness: WheelWitness):
        super().__init__(f"graph contains an induced odd wheel ({witness.to_text()})")
        self.witness = witness


class SearchExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class OrientedRepresentation:
    cert: HalinCertificate
    children: Mapping[int, tuple[int, ...]]
    leaf_order: tuple[int, ...]

    @property
    def root(self) -> int:
        return self.cert.tree.root

    @property
    def parent(self) -> Mapping[int, int]:
        return self.cert.tree.parent

    def preorder(self) -> list[int]:
        out = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children[v]))
        return out

    def is_star(self) -> bool:
        return all(not self.children[c] for c in self.children[self.root])


@dataclass(frozen=True)
class Coloring:
    """``assignment[v]`` is the colour index of vertex ``v``."""

    assignment: tuple[int, ...]
    trace: tuple[tuple[int, tuple[int, ...], int], ...] = field(default=(), compare=False, repr=False)

    @classmethod
    def from_mapping(cls, colors: Mapping[int, int], n: int, trace=()) -> "Coloring":
        return cls(tuple(colors[v] for v in range(n)), tuple(trace))

    @property
    def num_colors(self) -> int:
        return len(set(self.assignment))

    def to_text(self) -> str:
        return "".join(f"{v} {c}\n" for v, c in enumerate(self.assignment))

    def to_dot(self, g: Graph) -> str:
        lines = ["graph G {"]
        for v, c in enumerate(self.assignment):
            lines.append(f'  {v} [style=filled, fillcolor="{PALETTE[c]}", label="{v}:{c}"];')
        for u, v in g.sorted_edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def verify_proper(g: Graph, c: Coloring) -> bool:
    a = c.assignment
    if len(a) != g.vertex_count or any(x < 1 for x in a):
        return False
    return all(a[u] != a[v] for u, v in g.edges)


def _root_arcs(cert: HalinCertificate) -> dict[int, list[int]]:
    """Leaves under each root child, keyed by child."""
    tree = cert.tree
    top: dict[int, int] = {}
    for leaf in cert.leaf_cycle:
        v = leaf
        while tree.parent.get(v, tree.root) != tree.root:
            v = tree.parent[v]
        top[leaf] = v
    arcs: dict[int, list[int]] = {}
    for leaf in cert.leaf_cycle:
        arcs.setdefault(top[leaf], []).append(leaf)
    return arcs


def orient_representation(g: Graph, cert: HalinCertificate, start: int | None = None) -> OrientedRepresentation:
    """Order children so depth-first traversal emits the leaf cycle in order.

    The cycle keeps the certificate's direction and is rotated to begin at the
    first leaf of some root child's arc. Unless ``start`` names that leaf, the
    smallest such leaf is taken among rotations where the first and last root
    children are not both leaves (with both leaves, the leftmost leaf and the
    rightmost leaf's parent would share a parent and both receive colour 3).
    """
    why = check_certificate(g, cert)
    if why is not None:
        raise OrientationError(f"certificate rejected: {why.value}")
    tree = cert.tree
    cycle = cert.leaf_cycle
    r = len(cycle)
    pos = {leaf: i for i, leaf in enumerate(cycle)}
    kids = tree.children()

    top_of = {}
    for child, leaves in _root_arcs(cert).items():
        for leaf in leaves:
            top_of[leaf] = child
    starts = sorted(leaf for leaf in cycle if top_of[cycle[pos[leaf] - 1]] != top_of[leaf])
    if not starts:
        starts = [min(cycle)]  # root has a single child: cannot happen for a valid certificate

    def both_ends_leaves(first_leaf: int) -> bool:
        first = top_of[first_leaf]
        last = top_of[cycle[pos[first_leaf] - 1]]
        return not kids[first] and not kids[last]

    if start is not None:
        if start not in starts:
            raise OrientationError(f"leaf {start} does not begin a root child's arc")
        l1 = start
    else:
        good = [leaf for leaf in starts if not both_ends_leaves(leaf)]
        l1 = (good or starts)[0]

    lin = {leaf: (pos[leaf] - pos[l1]) % r for leaf in cycle}
    first_leaf: dict[int, int] = {}
    for v in sorted(tree.depth, key=tree.depth.__getitem__, reverse=True):
        if not kids[v]:
            first_leaf[v] = lin[v]
        else:
            first_leaf[v] = min(first_leaf[c] for c in kids[v])
    children = {v: tuple(sorted(cs, key=first_leaf.__getitem__)) for v, cs in kids.items()}
    leaf_order = tuple(sorted(cycle, key=lin.__getitem__))
    rep = OrientedRepresentation(cert, children, leaf_order)

    emitted = tuple(v for v in rep.preorder() if not children[v])
    if emitted != leaf_order:
        raise OrientationError("subtree leaves are not contiguous in the leaf cycle")
    return rep


def three_color_wheel_free(g: Graph, rep: OrientedRepresentation) -> Coloring:
    """Colour an odd-wheel-free Halin graph with colours 1, 2, 3.

    Raises PreconditionViolated when an odd wheel is present, and a
    ColoringGap subclass if the procedure cannot finish properly.
    """
    witness = find_odd_wheel(g)
    if witness is not None:
        raise PreconditionViolated(witness)

    color: dict[int, int] = {}
    trace = []
    root, parent, depth = rep.root, rep.parent, rep.cert.tree.depth

    if rep.is_star():
        # wheel with even rim: no grandparent for q, so colour it directly
        for i, leaf in enumerate(rep.leaf_order):
            color[leaf] = 1 if i % 2 == 0 else 2
        color[root] = 3
        return Coloring.from_mapping(color, g.vertex_count)

    p, q = rep.leaf_order[0], rep.leaf_order[-1]
    color[p] = 3
    color[parent[q]] = 3

    def paint_path(end: int) -> None:
        v = end
        while True:
            if v not in color:
                color[v] = 1 if depth[v] % 2 == 0 else 2
            if v == root:
                return
            v = parent[v]

    paint_path(parent[p])
    if parent[q] != root:
        paint_path(parent[parent[q]])

    for u in color:
        for w in g.adjacency[u]:
            if w in color and color[w] == color[u]:
                raise PrecolorConflict((min(u, w), max(u, w)), color)

    for u in rep.preorder():
        if u in color:
            continue
        seen = {color[w] for w in g.adjacency[u] if w in color}
        free = [c for c in (1, 2, 3) if c not in seen]
        if len(seen) > 2 or not free:
            raise EmptyCandidateSet(u, seen, color)
        color[u] = free[0]
        trace.append((u, tuple(sorted(seen)), free[0]))

    return Coloring.from_mapping(color, g.vertex_count, trace)


def four_color_exact(g: Graph, rep: OrientedRepresentation, max_colors: int = 4) -> Coloring:
    """Exact colouring with the fewest colours up to ``max_colors``.

    Backtracks over vertices in depth-first tree order with the root fixed to
    colour 1 and its first child to colour 2.
    """
    order = rep.preorder()
    n = g.vertex_count
    fixed = {rep.root: 1}
    if rep.children[rep.root]:
        fixed[rep.children[rep.root][0]] = 2
    for k in range(1, max_colors + 1):
        if any(c > k for c in fixed.values()):
            continue
        color = [0] * n
        i = 0
        while 0 <= i < len(order):
            v = order[i]
            lo, hi = (fixed[v], fixed[v]) if v in fixed else (1, k)
            taken = {color[w] for w in g.adjacency[v]}
            c = max(color[v] + 1, lo)
            while c <= hi and c in taken:
                c += 1
            if c <= hi:
                color[v] = c
                i += 1
            else:
                color[v] = 0
                i -= 1
        if i == len(order):
            return Coloring(tuple(color))
    raise SearchExhausted(f"no proper colouring with {max_colors} colours; input is not a valid Halin graph")
