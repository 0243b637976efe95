"""Seeded random Halin graphs and near-miss perturbations.

Randomness comes from SplitMix64 (Steele, Lea & Flood), chosen because its
three constants pin the stream down exactly and it is a few lines in any
language, so corpora regenerate identically elsewhere:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)                        (all arithmetic mod 2**64)

Integers in ``[lo, hi]`` are drawn as ``lo + next() % (hi - lo + 1)``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .graph import Edge, Graph
from .recognition import HalinCertificate, SpanningTree, verify_certificate
from .wheels import find_odd_wheel

MASK64 = (1 << 64) - 1
DEFAULT_RETRIES = 64


class RetryBudgetExhausted(RuntimeError):
    pass


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.next() % (hi - lo + 1)


@dataclass(frozen=True)
class GeneratorParams:
    target_internal: int
    max_children: int = 4
    seed: int = 0
    require_odd_wheel_free: bool = False

    def __post_init__(self):
        if self.target_internal < 1:
            raise ValueError("target_internal must be at least 1")
        if self.max_children < 3:
            raise ValueError("max_children must be at least 3")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def to_dict(self) -> dict:
        return asdict(self)


def _grow(target_internal: int, max_children: int, seed: int) -> tuple[Graph, HalinCertificate]:
    rng = SplitMix64(seed)
    parent: dict[int, int] = {}
    next_id = 1
    leaves: list[int] = []
    for _ in range(rng.randint(3, max_children)):
        parent[next_id] = 0
        leaves.append(next_id)
        next_id += 1
    internal = 1
    while internal < target_internal:
        i = rng.randint(0, len(leaves) - 1)
        v = leaves[i]
        kids = list(range(next_id, next_id + rng.randint(2, max_children)))
        next_id += len(kids)
        for c in kids:
            parent[c] = v
        leaves[i:i + 1] = kids
        internal += 1
    edges: list[Edge] = [(p, c) for c, p in parent.items()]
    edges += [(leaves[i], leaves[(i + 1) % len(leaves)]) for i in range(len(leaves))]
    g = Graph.from_edges(next_id, edges)
    cert = HalinCertificate(SpanningTree.from_parent(0, parent), tuple(leaves))
    return g, cert


def generate_halin(params: GeneratorParams, retries: int = DEFAULT_RETRIES) -> tuple[Graph, HalinCertificate]:
    """Grow a random plane tree and close its leaves into a cycle.

    The root gets 3..max_children children; each later expansion turns a
    uniformly chosen leaf into a vertex with 2..max_children children, placed
    where the leaf was so the leaf list stays in plane order. With
    ``require_odd_wheel_free``, seeds ``seed, seed + 1, ...`` are tried in turn.
    """
    attempts = retries if params.require_odd_wheel_free else 1
    for attempt in range(attempts):
        g, cert = _grow(params.target_internal, params.max_children, (params.seed + attempt) & MASK64)
        assert verify_certificate(g, cert)
        if not params.require_odd_wheel_free or find_odd_wheel(g) is None:
            return g, cert
    raise RetryBudgetExhausted(
        f"no odd-wheel-free Halin graph after {attempts} seeds "
        f"(target_internal={params.target_internal}, max_children={params.max_children})"
    )


def perturb_non_halin(g: Graph, cert: HalinCertificate, seed: int) -> tuple[Graph, str]:
    """Apply one random mutation that breaks the given tree-cycle structure.

    Mutations: delete a cycle edge, delete a tree edge, or add a chord between
    two non-adjacent leaves. The result is usually not Halin, but callers
    should label it with a recogniser rather than assume so.
    """
    rng = SplitMix64(seed)
    cycle = cert.leaf_cycle
    cycle_edges = sorted(tuple(sorted((cycle[i], cycle[(i + 1) % len(cycle)]))) for i in range(len(cycle)))
    tree_edges = cert.tree.edges()
    chords = [(a, b) for i, a in enumerate(sorted(cycle)) for b in sorted(cycle)[i + 1:] if not g.has_edge(a, b)]
    kinds = [("delete cycle edge", cycle_edges), ("delete tree edge", tree_edges), ("add leaf chord", chords)]
    kinds = [(name, pool) for name, pool in kinds if pool]
    name, pool = kinds[rng.randint(0, len(kinds) - 1)]
    u, v = pool[rng.randint(0, len(pool) - 1)]
    if name == "add leaf chord":
        return g.with_edges(add=[(u, v)]), f"{name} {u} {v}"
    return g.with_edges(remove=[(u, v)]), f"{name} {u} {v}"
