import random
from itertools import combinations

import pytest

from branchwise.corpus import random_cograph, random_connected_graph
from branchwise.decomposition import (
    KIND_JOIN,
    KIND_PRIME,
    KIND_UNION,
    ParseNode,
    decompose,
    evaluate,
    maximal_modules,
    width,
)
from branchwise.errors import MalformedTreeError
from branchwise.graph import Graph, from_edge_list


def is_module(g, mod):
    mod = set(mod)
    outside = [w for w in range(g.n) if w not in mod]
    for w in outside:
        hits = len(g.adj[w] & mod)
        if 0 < hits < len(mod):
            return False
    return True


def brute_force_nontrivial_modules(g):
    found = []
    for size in range(2, g.n):
        for mod in combinations(range(g.n), size):
            if is_module(g, mod):
                found.append(mod)
    return found


def p4():
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3)])


def test_single_vertex_is_leaf():
    t = decompose(Graph(1))
    assert t.is_leaf and t.vertex == 0
    assert width(t) == 0


def test_triangle_is_a_join_of_leaves():
    t = decompose(from_edge_list(3, [(0, 1), (1, 2), (0, 2)]))
    assert t.kind == KIND_JOIN
    assert len(t.children) == 3
    assert all(c.is_leaf for c in t.children)
    assert width(t) == 0


def test_p4_is_prime():
    # Independent check first: the path on four vertices has no nontrivial
    # module, so its decomposition must be a prime node over four leaves.
    assert brute_force_nontrivial_modules(p4()) == []
    t = decompose(p4())
    assert t.kind == KIND_PRIME
    assert len(t.children) == 4
    assert width(t) == 4


def test_maximal_modules_p4_singletons():
    assert maximal_modules(p4()) == [(0,), (1,), (2,), (3,)]


def test_maximal_modules_star_needs_splitting():
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(ValueError):
        maximal_modules(star)
    t = decompose(star)
    assert t.kind == KIND_JOIN
    assert sorted((frozenset(c.vertex_set) for c in t.children), key=min) \
        == [frozenset({0}), frozenset({1, 2, 3})]
    leaf_side = t.children[1]
    assert leaf_side.kind == KIND_UNION
    assert is_module(star, leaf_side.vertex_set)


def test_true_twins_share_a_class():
    # 1 and 4 are true twins; a maximal strong module must contain both.
    g = from_edge_list(5, [(0, 1), (0, 4), (1, 4), (1, 2), (4, 2), (2, 3)])
    classes = maximal_modules(g)
    twin_class = [c for c in classes if 1 in c]
    assert twin_class and 4 in twin_class[0]


def test_evaluate_leaf_and_cliques():
    assert evaluate(ParseNode("leaf", vertex=0)) == Graph(1)
    k4 = from_edge_list(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert evaluate(decompose(k4)) == k4


def test_evaluate_rejects_malformed_trees():
    only_child = ParseNode("union", Graph(1), [ParseNode("leaf", vertex=0)])
    with pytest.raises(MalformedTreeError):
        evaluate(only_child)
    wrong_quotient = ParseNode(
        "union", Graph(3),
        [ParseNode("leaf", vertex=0), ParseNode("leaf", vertex=1)],
    )
    with pytest.raises(MalformedTreeError):
        evaluate(wrong_quotient)


def test_round_trip_small_random():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 12)
        g = random_connected_graph(rng, n)
        assert evaluate(decompose(g)) == g


def test_round_trip_disconnected():
    g = from_edge_list(5, [(0, 1), (2, 3)])
    t = decompose(g)
    assert t.kind == KIND_UNION
    assert evaluate(t) == g


def test_cographs_have_no_prime_node():
    rng = random.Random(6)
    for _ in range(50):
        g = random_cograph(rng, rng.randint(1, 10))
        t = decompose(g)
        assert width(t) == 0
        stack = [t]
        while stack:
            node = stack.pop()
            assert node.kind != KIND_PRIME
            stack.extend(node.children)


def all_internal_nodes(t):
    stack = [t]
    while stack:
        node = stack.pop()
        if not node.is_leaf:
            yield node
            stack.extend(node.children)


def test_cross_edges_are_all_or_nothing():
    rng = random.Random(7)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(2, 10))
        t = decompose(g)
        for node in all_internal_nodes(t):
            kids = node.children
            for a in range(len(kids)):
                for b in range(a + 1, len(kids)):
                    crossings = sum(
                        1
                        for u in kids[a].vertex_set
                        for v in kids[b].vertex_set
                        if g.has_edge(u, v)
                    )
                    full = len(kids[a].vertex_set) * len(kids[b].vertex_set)
                    assert crossings in (0, full)
                    linked = node.quotient.has_edge(a, b)
                    assert (crossings == full) == linked


def test_children_partition_and_width_bound():
    rng = random.Random(8)
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(2, 10))
        t = decompose(g)
        for node in all_internal_nodes(t):
            union = set()
            total = 0
            for c in node.children:
                union |= c.vertex_set
                total += len(c.vertex_set)
            assert union == node.vertex_set and total == len(union)
            assert width(node) <= len(node.vertex_set)
