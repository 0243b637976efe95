from pathlib import Path

import pytest
from hypothesis import strategies as st

from halin.corpus import halin_corpus, named_graphs, negative_corpus
from halin.graph import Graph, graph_from_edge_list

FIXTURES = Path(__file__).parent / "fixtures"


def load(name: str) -> Graph:
    return graph_from_edge_list((FIXTURES / name).read_bytes())


@st.composite
def graphs(draw, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@pytest.fixture(scope="session")
def small_halin():
    """>= 100 generated Halin graphs with n <= 12."""
    return halin_corpus(120, 12)


@pytest.fixture(scope="session")
def wheel_free_30():
    """>= 100 generated odd-wheel-free Halin graphs with n <= 30."""
    return halin_corpus(120, 30, odd_wheel_free=True, internal=range(1, 14))


@pytest.fixture(scope="session")
def negatives(small_halin):
    return negative_corpus(small_halin, 120)


@pytest.fixture(scope="session")
def named():
    return {inst.name: inst.graph for inst in named_graphs()}
