"""Undirected simple graphs on dense integer vertex ids.

Vertex ids are always 0..n-1 so that parent maps, visited sets and module
lookups can be flat lists.  Graphs are immutable after construction and
safe to share between concurrent solver tasks.
"""

from __future__ import annotations

from .errors import OutOfRangeError, SelfLoopError


class Graph:
    """An undirected simple graph. Duplicate edges collapse, loops are errors."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, pairs=()):
        if n < 0:
            raise OutOfRangeError("vertex count must be nonnegative")
        self.n = n
        adj = [set() for _ in range(n)]
        edges = set()
        for u, v in pairs:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRangeError(f"edge ({u}, {v}) outside [0, {n})")
            if u > v:
                u, v = v, u
            if (u, v) not in edges:
                edges.add((u, v))
                adj[u].add(v)
                adj[v].add(u)
        self.edges = frozenset(edges)
        self.adj = tuple(frozenset(s) for s in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


class WeightedGraph:
    """A graph plus a positive integer cost per vertex."""

    __slots__ = ("graph", "cost")

    def __init__(self, graph: Graph, cost):
        cost = tuple(cost)
        if len(cost) != graph.n:
            raise OutOfRangeError("cost must assign every vertex")
        if any(c < 1 for c in cost):
            raise OutOfRangeError("vertex costs must be >= 1")
        self.graph = graph
        self.cost = cost

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.graph == other.graph and self.cost == other.cost

    def __hash__(self):
        return hash((self.graph, self.cost))

    def __repr__(self):
        return f"WeightedGraph(n={self.graph.n}, m={self.graph.edge_count})"


def from_edge_list(n: int, pairs) -> Graph:
    """Build a graph from (u, v) pairs; repeats collapse, loops raise."""
    return Graph(n, pairs)


def is_connected(g: Graph) -> bool:
    """True when one traversal reaches every vertex (vacuously for n <= 1)."""
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def augment_join(g: Graph, extra: int):
    """Append `extra` new vertices, each adjacent to all original vertices.

    The new ids are n..n+extra-1 and mutually non-adjacent, so callers can
    strip them back out by id threshold.  Returns (graph, new_ids).
    """
    if extra < 0:
        raise OutOfRangeError("extra vertex count must be nonnegative")
    if extra == 0:
        return g, []
    n = g.n
    pairs = list(g.edges)
    for t in range(extra):
        w = n + t
        pairs.extend((u, w) for u in range(n))
    return Graph(n + extra, pairs), list(range(n, n + extra))


def induced_subgraph(g: Graph, vs):
    """Subgraph on `vs`, relabeled 0..len(vs)-1 in the given order.

    Returns (subgraph, mapping) where mapping[new_id] = original id.
    """
    vs = list(vs)
    if len(set(vs)) != len(vs):
        raise OutOfRangeError("vertex list must be distinct")
    for v in vs:
        if not (0 <= v < g.n):
            raise OutOfRangeError(f"vertex {v} outside [0, {g.n})")
    index = {v: i for i, v in enumerate(vs)}
    pairs = []
    for u, v in g.edges:
        iu = index.get(u)
        iv = index.get(v)
        if iu is not None and iv is not None:
            pairs.append((iu, iv))
    return Graph(len(vs), pairs), dict(enumerate(vs))
