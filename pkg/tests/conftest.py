import random

import pytest

from branchwise.corpus import (
    connected_graphs_upto,
    random_cograph,
    random_connected_graph,
    random_costs,
)
from branchwise.graph import Graph, WeightedGraph

CORPUS_SEED = 20250809


@pytest.fixture(scope="session")
def small_corpus():
    """Every labeled connected graph on at most 6 vertices."""
    return list(connected_graphs_upto(6))


@pytest.fixture(scope="session")
def random_corpus_7_10():
    """500 seeded random connected graphs, 7 <= n <= 10, mixed density."""
    rng = random.Random(CORPUS_SEED)
    graphs = []
    for i in range(500):
        n = rng.randint(7, 10)
        if i % 3 == 0:
            g = random_connected_graph(rng, n)  # any density
        elif i % 3 == 1:
            g = random_connected_graph(rng, n, extra_edges=rng.randint(0, 4))
        else:
            g = random_connected_graph(rng, n, extra_edges=rng.randint(5, 12))
        graphs.append(g)
    return graphs


@pytest.fixture(scope="session")
def weighted_corpus():
    """200 seeded random connected weighted graphs, n <= 8, costs in [1, 10]."""
    rng = random.Random(CORPUS_SEED + 1)
    out = []
    for _ in range(200):
        n = rng.randint(2, 8)
        g = random_connected_graph(rng, n)
        out.append(WeightedGraph(g, random_costs(rng, n, 10)))
    return out


@pytest.fixture(scope="session")
def roundtrip_corpus():
    """1000 seeded random graphs (connectivity not required), n <= 12."""
    rng = random.Random(CORPUS_SEED + 2)
    out = []
    for _ in range(1000):
        n = rng.randint(1, 12)
        pairs = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < rng.choice((0.15, 0.35, 0.6, 0.85))
        ]
        out.append(Graph(n, pairs))
    return out


@pytest.fixture(scope="session")
def cograph_corpus():
    rng = random.Random(CORPUS_SEED + 3)
    return [random_cograph(rng, rng.randint(1, 12)) for _ in range(300)]


@pytest.fixture(scope="session")
def shared_results():
    """Memo space so acceptance criteria can reuse expensive solves."""
    return {}
