"""Seeded graph corpora for tests and cross-validation.

Everything here is driven by a caller-supplied random.Random, so a seed
fully determines the corpus.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph


def all_connected_graphs(n: int):
    """Every labeled connected graph on n vertices, by edge-subset filtering."""
    if n == 1:
        yield Graph(1)
        return
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    bit_of = [(1 << u, 1 << v) for u, v in pairs]
    for mask in range(1 << m):
        adj = [0] * n
        for k in range(m):
            if mask >> k & 1:
                u, v = pairs[k]
                bu, bv = bit_of[k]
                adj[u] |= bv
                adj[v] |= bu
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            b = frontier
            while b:
                vb = b & -b
                b ^= vb
                nxt |= adj[vb.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= nxt
        if seen == (1 << n) - 1:
            yield Graph(n, [pairs[k] for k in range(m) if mask >> k & 1])


def connected_graphs_upto(nmax: int):
    for n in range(1, nmax + 1):
        yield from all_connected_graphs(n)


def random_connected_graph(rng, n: int, extra_edges=None) -> Graph:
    """Random spanning tree plus extra random edges; always connected."""
    order = list(range(n))
    rng.shuffle(order)
    pairs = set()
    for idx in range(1, n):
        u = order[idx]
        v = order[rng.randrange(idx)]
        pairs.add((min(u, v), max(u, v)))
    remaining = [p for p in combinations(range(n), 2) if p not in pairs]
    if extra_edges is None:
        extra_edges = rng.randrange(len(remaining) + 1)
    extra_edges = min(extra_edges, len(remaining))
    pairs.update(rng.sample(remaining, extra_edges))
    return Graph(n, pairs)


def random_cograph(rng, n: int) -> Graph:
    """Random union/join recursion; its decomposition has no prime node."""
    pairs = []

    def build(ids, join):
        if len(ids) == 1:
            return
        cut = rng.randrange(1, len(ids))
        left, right = ids[:cut], ids[cut:]
        if join:
            pairs.extend(
                (min(u, v), max(u, v)) for u in left for v in right
            )
        build(left, not join)
        build(right, not join)

    build(list(range(n)), rng.random() < 0.5)
    return Graph(n, pairs)


def random_costs(rng, n: int, max_cost: int = 10):
    return tuple(rng.randint(1, max_cost) for _ in range(n))
