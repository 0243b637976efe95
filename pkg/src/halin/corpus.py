"""Reproducible instance collections for the test suite and scripts."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .generator import GeneratorParams, generate_halin, perturb_non_halin
from .graph import Graph, complete_bipartite, complete_graph, cube_graph, cycle_graph, prism_graph, wheel_graph
from .recognition import HalinCertificate


@dataclass(frozen=True)
class Instance:
    name: str
    graph: Graph
    cert: HalinCertificate | None = None
    note: str = ""


def named_graphs() -> list[Instance]:
    """Hand-picked positives and negatives with known answers."""
    out = [
        Instance("k4", complete_graph(4)),
        Instance("prism", prism_graph()),
        Instance("q3", cube_graph()),
        Instance("k33", complete_bipartite(3, 3)),
        Instance("c5", cycle_graph(5)),
        Instance("c6", cycle_graph(6)),
        Instance("k5", complete_graph(5)),
    ]
    out += [Instance(f"w{r + 1}", wheel_graph(r)) for r in range(3, 10)]
    return out


def halin_corpus(count: int, max_n: int, *, seed: int = 1, odd_wheel_free: bool = False,
                 internal: range = range(1, 12), max_children: tuple[int, ...] = (3, 4, 5)) -> list[Instance]:
    """First ``count`` generated Halin graphs with at most ``max_n`` vertices.

    Parameters cycle through ``internal`` x ``max_children`` while the seed
    advances, so the collection mixes wheels with deeper trees.
    """
    out: list[Instance] = []
    shapes = list(product(internal, max_children))
    s = seed
    while len(out) < count:
        for k, d in shapes:
            params = GeneratorParams(k, d, s, odd_wheel_free)
            try:
                g, cert = generate_halin(params)
            except RuntimeError:
                continue
            if g.vertex_count <= max_n:
                out.append(Instance(f"halin_k{k}_d{d}_s{s}", g, cert))
                if len(out) == count:
                    break
        s += 1
    return out


def negative_corpus(positives: list[Instance], count: int, *, seed: int = 1) -> list[Instance]:
    """``count`` single-mutation perturbations of the given positives."""
    out = []
    for i in range(count):
        base = positives[i % len(positives)]
        g, what = perturb_non_halin(base.graph, base.cert, seed + i)
        out.append(Instance(f"{base.name}_p{seed + i}", g, None, what))
    return out
