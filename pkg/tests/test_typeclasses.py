import random

from branchwise.corpus import random_connected_graph, random_costs
from branchwise.graph import Graph, WeightedGraph, from_edge_list
from branchwise.typeclasses import (
    CLIQUE,
    INDEPENDENT,
    min_cost_representatives,
    type_partition,
)


def same_type(g, u, v):
    return (g.adj[u] - {v}) == (g.adj[v] - {u})


def test_star_has_two_classes():
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    tp = type_partition(star)
    assert tp.classes == ((0,), (1, 2, 3))
    assert tp.class_kind == (CLIQUE, INDEPENDENT)
    assert tp.type_graph.edges == frozenset({(0, 1)})
    assert tp.representative == (0, 1)


def test_clique_is_one_class():
    k4 = from_edge_list(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    tp = type_partition(k4)
    assert tp.nd == 1 and tp.class_kind == (CLIQUE,)


def test_independent_set_is_one_class():
    tp = type_partition(Graph(5))
    assert tp.nd == 1 and tp.class_kind == (INDEPENDENT,)


def test_p4_all_singletons():
    p4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    # Check the pairwise relation directly: no two vertices share a type.
    for u in range(4):
        for v in range(u + 1, 4):
            assert not same_type(p4, u, v)
    tp = type_partition(p4)
    assert tp.nd == 4
    assert tp.type_graph == p4


def test_partition_is_coarsest_and_consistent():
    rng = random.Random(3)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(1, 9))
        tp = type_partition(g)
        assert sorted(v for cls in tp.classes for v in cls) == list(range(g.n))
        for cls in tp.classes:
            for a in cls:
                for b in cls:
                    if a < b:
                        assert same_type(g, a, b)
        # merging any two classes must break the relation for some pair
        for i in range(tp.nd):
            for j in range(i + 1, tp.nd):
                assert not all(
                    same_type(g, a, b)
                    for a in tp.classes[i]
                    for b in tp.classes[j]
                )
        assert tp.nd <= g.n


def test_cross_class_edges_all_or_nothing():
    rng = random.Random(4)
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(2, 9))
        tp = type_partition(g)
        for i in range(tp.nd):
            for j in range(i + 1, tp.nd):
                links = sum(
                    1
                    for u in tp.classes[i]
                    for v in tp.classes[j]
                    if g.has_edge(u, v)
                )
                full = len(tp.classes[i]) * len(tp.classes[j])
                assert links in (0, full)
                assert (links == full) == tp.type_graph.has_edge(i, j)


def test_min_cost_representatives():
    g = from_edge_list(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)])
    tp = type_partition(g)
    uniform = WeightedGraph(g, [1] * 6)
    assert min_cost_representatives(tp, uniform) == tp.representative

    costs = [9, 7, 3, 7, 2, 8]
    weighted = WeightedGraph(g, costs)
    reps = min_cost_representatives(tp, weighted)
    for idx, cls in enumerate(tp.classes):
        best = min(cls, key=lambda v: (costs[v], v))
        assert reps[idx] == best


def test_min_cost_representatives_random_vs_scan():
    rng = random.Random(5)
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(2, 8))
        wg = WeightedGraph(g, random_costs(rng, g.n))
        tp = type_partition(g)
        reps = min_cost_representatives(tp, wg)
        for idx, cls in enumerate(tp.classes):
            assert reps[idx] == min(cls, key=lambda v: (wg.cost[v], v))
