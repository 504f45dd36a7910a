"""Modular decomposition: parse trees, quotients, and reconstruction.

The decomposition recurses by three cases: a disconnected graph becomes a
union node over its components, a graph with disconnected complement
becomes a join node over its co-components, and otherwise the vertex set
splits into its maximal proper strong modules, whose quotient is prime.

The strong-module partition is found by closure growth: the smallest
module containing a pair {u, v} is grown by repeatedly absorbing any
outside vertex adjacent to part but not all of the current set, and the
class of v is the union of all proper closures seeded at v.  Cubic-ish and
plenty for desk-scale graphs; correctness is guarded by the round-trip and
cross-edge invariants exercised in the tests.
"""

from __future__ import annotations

from .errors import MalformedTreeError
from .graph import Graph, is_connected

KIND_LEAF = "leaf"
KIND_UNION = "union"
KIND_JOIN = "join"
KIND_PRIME = "prime"


class ParseNode:
    """One node of the parse tree; internal nodes carry their quotient."""

    __slots__ = ("kind", "quotient", "children", "vertex", "vertex_set",
                 "_ham", "_spi")

    def __init__(self, kind, quotient=None, children=(), vertex=None):
        self.kind = kind
        self.quotient = quotient
        self.children = tuple(children)
        self.vertex = vertex
        if kind == KIND_LEAF:
            self.vertex_set = frozenset((vertex,))
        else:
            self.vertex_set = frozenset().union(
                *(c.vertex_set for c in self.children)
            )
        self._ham = None
        self._spi = None

    @property
    def is_leaf(self):
        return self.kind == KIND_LEAF

    @property
    def size(self):
        return len(self.vertex_set)

    def __repr__(self):
        if self.is_leaf:
            return f"ParseNode(leaf {self.vertex})"
        return f"ParseNode({self.kind}, {len(self.children)} children)"


def _components_within(g: Graph, vs):
    """Connected components of the induced subgraph, ordered by minimum id."""
    inside = set(vs)
    seen = set()
    comps = []
    for v in sorted(vs):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in inside and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _co_components_within(g: Graph, vs):
    """Components of the complement of the induced subgraph."""
    inside = set(vs)
    seen = set()
    comps = []
    for v in sorted(vs):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            u = stack.pop()
            for w in inside - g.adj[u] - seen:
                if w != u:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _module_closure(adj, a, b, k):
    """Smallest module of the k-vertex local graph containing both a and b."""
    mod = {a, b}
    changed = True
    while changed and len(mod) < k:
        changed = False
        for w in range(k):
            if w in mod:
                continue
            hits = len(adj[w] & mod)
            if 0 < hits < len(mod):
                mod.add(w)
                changed = True
    return mod


def _is_local_module(adj, mod, k):
    outside = [w for w in range(k) if w not in mod]
    for w in outside:
        hits = len(adj[w] & mod)
        if 0 < hits < len(mod):
            return False
    return True


def _strong_partition(adj, k):
    """Maximal proper strong modules of a connected, co-connected local graph."""
    assigned = [None] * k
    classes = []
    for v in range(k):
        if assigned[v] is not None:
            continue
        cls = {v}
        for u in range(k):
            if u == v or u in cls:
                continue
            closure = _module_closure(adj, v, u, k)
            if len(closure) < k:
                cls |= closure
        if len(cls) == k or not _is_local_module(adj, cls, k):
            raise MalformedTreeError(
                "strong-module partition failed; input not prime-splittable"
            )
        idx = len(classes)
        for w in cls:
            if assigned[w] is not None:
                raise MalformedTreeError("strong modules overlap")
            assigned[w] = idx
        classes.append(sorted(cls))
    classes.sort(key=lambda c: c[0])
    return classes


def maximal_modules(g: Graph):
    """Partition of V(g) into maximal proper strong modules.

    Only defined when both g and its complement are connected; union and
    join layers must be peeled off first (decompose does this).
    """
    if g.n == 1:
        return [(0,)]
    vs = list(range(g.n))
    if len(_components_within(g, vs)) > 1:
        raise ValueError("graph is disconnected; split into components first")
    if len(_co_components_within(g, vs)) > 1:
        raise ValueError("complement is disconnected; split into co-components first")
    classes = _strong_partition(g.adj, g.n)
    return [tuple(c) for c in classes]


def _decompose_subset(g: Graph, vs):
    if len(vs) == 1:
        return ParseNode(KIND_LEAF, vertex=vs[0])
    comps = _components_within(g, vs)
    if len(comps) > 1:
        children = [_decompose_subset(g, c) for c in comps]
        return ParseNode(KIND_UNION, Graph(len(children)), children)
    co_comps = _co_components_within(g, vs)
    if len(co_comps) > 1:
        children = [_decompose_subset(g, c) for c in co_comps]
        k = len(children)
        quotient = Graph(k, [(a, b) for a in range(k) for b in range(a + 1, k)])
        return ParseNode(KIND_JOIN, quotient, children)
    local_index = {v: i for i, v in enumerate(vs)}
    adj = [frozenset(local_index[w] for w in g.adj[v] if w in local_index)
           for v in vs]
    classes = _strong_partition(adj, len(vs))
    children = [_decompose_subset(g, [vs[i] for i in cls]) for cls in classes]
    pairs = []
    for a in range(len(classes)):
        for b in range(a + 1, len(classes)):
            if classes[b][0] in adj[classes[a][0]]:
                pairs.append((a, b))
    return ParseNode(KIND_PRIME, Graph(len(classes), pairs), children)


def decompose(g: Graph) -> ParseNode:
    """Parse tree whose evaluation reproduces g exactly."""
    if g.n < 1:
        raise ValueError("decompose needs at least one vertex")
    return _decompose_subset(g, sorted(range(g.n)))


def width(t: ParseNode) -> int:
    """Largest child count over prime nodes; 0 when no prime node exists.

    Union and join nodes of any arity do not count, so cographs report 0.
    """
    best = 0
    stack = [t]
    while stack:
        node = stack.pop()
        if node.is_leaf:
            continue
        if node.kind == KIND_PRIME:
            best = max(best, len(node.children))
        stack.extend(node.children)
    return best


def _check_internal(node: ParseNode):
    if len(node.children) < 2:
        raise MalformedTreeError("internal node needs at least two children")
    if node.quotient is None or node.quotient.n != len(node.children):
        raise MalformedTreeError("quotient size must match the child count")
    total = sum(c.size for c in node.children)
    if total != node.size:
        raise MalformedTreeError("children must partition the vertex set")
    if node.kind == KIND_UNION and node.quotient.edge_count:
        raise MalformedTreeError("union node carries a non-edgeless quotient")
    full = node.quotient.n * (node.quotient.n - 1) // 2
    if node.kind == KIND_JOIN and node.quotient.edge_count != full:
        raise MalformedTreeError("join node carries a non-complete quotient")


def evaluate(t: ParseNode) -> Graph:
    """Rebuild the graph a parse tree describes.

    Leaves contribute their recorded vertex ids; every quotient edge joins
    the two children's vertex sets completely.  The result is relabeled
    over the sorted leaf ids, which is the identity for a tree produced by
    decompose on a whole graph.
    """
    ids = sorted(t.vertex_set)
    if len(ids) != t.size:
        raise MalformedTreeError("leaf vertex ids must be distinct")
    index = {v: i for i, v in enumerate(ids)}
    pairs = []

    def walk(node):
        if node.is_leaf:
            return
        _check_internal(node)
        for child in node.children:
            walk(child)
        for a, b in node.quotient.edges:
            for u in node.children[a].vertex_set:
                for v in node.children[b].vertex_set:
                    pairs.append((index[u], index[v]))

    walk(t)
    return Graph(len(ids), pairs)
