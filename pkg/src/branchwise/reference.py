"""Brute-force oracles and independent certificate verifiers.

Nothing here shares code with the solvers: spanning trees are enumerated
edge by edge with connectivity pruning, path partitions and spider covers
come from definitional subset dynamic programs, and the verifiers replay
certificates directly against the graph.  These are the trust anchors the
acceptance tests compare everything against, so clarity beats speed; the
size caps keep them honest.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DisconnectedGraphError, TooLargeError
from .graph import Graph, WeightedGraph, is_connected
from .treebuild import SpanningTreeResult, branch_vertices

DEFAULT_ORACLE_CAP = 9


@dataclass(frozen=True)
class OracleReport:
    b: int | None = None
    w: int | None = None
    ham: int | None = None
    spi: int | None = None


@dataclass(frozen=True)
class Diagnostics:
    ok: bool
    failure: str | None = None


def _guard(g: Graph, cap: int, need_connected: bool):
    if g.n > cap:
        raise TooLargeError(f"{g.n} vertices exceeds the oracle cap {cap}")
    if need_connected and not is_connected(g):
        raise DisconnectedGraphError("oracle needs a connected graph")


def _find(comp, a):
    while comp[a] != a:
        comp[a] = comp[comp[a]]
        a = comp[a]
    return a


def _connectable(comp, edges, idx):
    scratch = comp[:]
    for u, v in edges[idx:]:
        ru, rv = _find(scratch, u), _find(scratch, v)
        if ru != rv:
            scratch[ru] = rv
    root = _find(scratch, 0)
    return all(_find(scratch, a) == root for a in range(len(comp)))


def _edges_to_tree(g: Graph, chosen) -> SpanningTreeResult:
    adj = {v: [] for v in range(g.n)}
    for u, v in chosen:
        adj[u].append(v)
        adj[v].append(u)
    parent = {0: None}
    queue = [0]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for w in sorted(adj[u]):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    return SpanningTreeResult(parent=parent, root=0,
                              branch=branch_vertices(parent))


def _search_tree(n, edges, budget):
    """First spanning tree (include-first over sorted edges) with at most
    `budget` branch vertices; None when none exists."""
    m = len(edges)
    deg = [0] * n
    chosen = []

    def rec(idx, comp, branches):
        if len(chosen) == n - 1:
            return True
        if idx == m or len(chosen) + (m - idx) < n - 1:
            return False
        if not _connectable(comp, edges, idx):
            return False
        u, v = edges[idx]
        if _find(comp[:], u) != _find(comp[:], v):
            merged = comp[:]
            merged[_find(merged, u)] = _find(merged, v)
            deg[u] += 1
            deg[v] += 1
            extra = (deg[u] == 3) + (deg[v] == 3)
            if branches + extra <= budget:
                chosen.append((u, v))
                if rec(idx + 1, merged, branches + extra):
                    return True
                chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        return rec(idx + 1, comp, branches)

    if rec(0, list(range(n)), 0):
        return list(chosen)
    return None


def oracle_b(g: Graph, cap: int = DEFAULT_ORACLE_CAP):
    """Minimum branch-vertex count over all spanning trees, with a witness."""
    _guard(g, cap, need_connected=True)
    if g.n == 1:
        return 0, SpanningTreeResult(parent={0: None}, root=0,
                                     branch=frozenset())
    edges = g.sorted_edges()
    for k in range(g.n + 1):
        chosen = _search_tree(g.n, edges, k)
        if chosen is not None:
            return k, _edges_to_tree(g, chosen)
    raise AssertionError("a connected graph always has a spanning tree")


def oracle_w(wg: WeightedGraph, cap: int = DEFAULT_ORACLE_CAP):
    """Minimum summed branch-vertex cost over all spanning trees."""
    g = wg.graph
    _guard(g, cap, need_connected=True)
    if g.n == 1:
        return 0, SpanningTreeResult(parent={0: None}, root=0,
                                     branch=frozenset(), cost=0)
    edges = g.sorted_edges()
    n = g.n
    m = len(edges)
    deg = [0] * n
    chosen = []
    best = [None, None]  # (cost, edge list)

    def rec(idx, comp, cost):
        if best[0] is not None and cost >= best[0]:
            return
        if len(chosen) == n - 1:
            best[0] = cost
            best[1] = list(chosen)
            return
        if idx == m or len(chosen) + (m - idx) < n - 1:
            return
        if not _connectable(comp, edges, idx):
            return
        u, v = edges[idx]
        if _find(comp[:], u) != _find(comp[:], v):
            merged = comp[:]
            merged[_find(merged, u)] = _find(merged, v)
            deg[u] += 1
            deg[v] += 1
            extra = (wg.cost[u] if deg[u] == 3 else 0) \
                + (wg.cost[v] if deg[v] == 3 else 0)
            chosen.append((u, v))
            rec(idx + 1, merged, cost + extra)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        rec(idx + 1, comp, cost)

    rec(0, list(range(n)), 0)
    tree = _edges_to_tree(g, best[1])
    cost = sum(wg.cost[v] for v in tree.branch)
    return best[0], SpanningTreeResult(parent=tree.parent, root=tree.root,
                                       branch=tree.branch, cost=cost)


def _adjacency_masks(g: Graph):
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _path_end_table(g: Graph):
    """pe[S] = bitmask of vertices at which G[S] has a spanning path ending."""
    n = g.n
    full = (1 << n) - 1
    masks = _adjacency_masks(g)
    pe = [0] * (full + 1)
    for v in range(n):
        pe[1 << v] = 1 << v
    for subset in range(1, full + 1):
        ends = pe[subset]
        if not ends:
            continue
        rest = full & ~subset
        bits = ends
        while bits:
            vb = bits & -bits
            bits ^= vb
            ext = masks[vb.bit_length() - 1] & rest
            while ext:
                ub = ext & -ext
                ext ^= ub
                pe[subset | ub] |= ub
    return pe


def _min_path_partition_table(pe, full):
    """f[S] = least number of disjoint paths covering exactly S."""
    big = 1 << 30
    f = [big] * (full + 1)
    f[0] = 0
    for subset in range(1, full + 1):
        lowest = subset & -subset
        piece = subset
        best = big
        while piece:
            if piece & lowest and pe[piece]:
                cand = 1 + f[subset & ~piece]
                if cand < best:
                    best = cand
            piece = (piece - 1) & subset
        f[subset] = best
    return f


def oracle_ham(g: Graph, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Minimum number of vertex-disjoint paths covering V(g)."""
    _guard(g, cap, need_connected=False)
    full = (1 << g.n) - 1
    return _min_path_partition_table(_path_end_table(g), full)[full]


def oracle_spi(g: Graph, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Minimum size of a path-spider cover of V(g)."""
    _guard(g, cap, need_connected=False)
    n = g.n
    full = (1 << n) - 1
    masks = _adjacency_masks(g)
    pe = _path_end_table(g)
    f = _min_path_partition_table(pe, full)
    best = 1 << 30
    for center in range(n):
        avail = full & ~(1 << center)
        # part[S]: S splits into chunks, each with a spanning path that can
        # hook onto the center (an end adjacent to it) -> legs of a spider.
        part = bytearray(avail + 1)
        part[0] = 1
        for subset in range(1, avail + 1):
            if subset & ~avail:
                continue
            lowest = subset & -subset
            piece = subset
            while piece:
                if piece & lowest and (pe[piece] & masks[center]) \
                        and part[subset & ~piece]:
                    part[subset] = 1
                    break
                piece = (piece - 1) & subset
        for subset in range(avail + 1):
            if subset & ~avail or not part[subset]:
                continue
            cand = 1 + f[avail & ~subset]
            if cand < best:
                best = cand
    return best


def verify_spanning_tree(g: Graph, t: SpanningTreeResult) -> Diagnostics:
    """Replay a tree certificate; reports the first violated check."""
    if set(t.parent) != set(range(g.n)):
        return Diagnostics(False, "Coverage")
    roots = [v for v, p in t.parent.items() if p is None]
    if len(roots) != 1 or roots[0] != t.root:
        return Diagnostics(False, "RootCount")
    for v, p in t.parent.items():
        if p is not None and not g.has_edge(v, p):
            return Diagnostics(False, "EdgeNotInGraph")
    state = {}
    for v in t.parent:
        trail = []
        u = v
        while u is not None and state.get(u) is None:
            state[u] = "open"
            trail.append(u)
            u = t.parent[u]
        if u is not None and state[u] == "open":
            return Diagnostics(False, "Cycle")
        for w in trail:
            state[w] = "done"
    if branch_vertices(t.parent) != t.branch:
        return Diagnostics(False, "BranchMismatch")
    return Diagnostics(True)


def verify_cover(g: Graph, cover, expected_kind: str) -> Diagnostics:
    """Replay a cover certificate ("psc" or "pp") against the graph."""
    if expected_kind not in ("psc", "pp"):
        raise ValueError(f"unknown cover kind {expected_kind!r}")
    if not cover:
        return Diagnostics(False, "EmptyCover")
    seen = set()
    for piece in cover:
        for v in piece.all_vertices():
            if not 0 <= v < g.n:
                return Diagnostics(False, "BadVertex")
            if v in seen:
                return Diagnostics(False, "Overlap")
            seen.add(v)
    if seen != set(range(g.n)):
        return Diagnostics(False, "NotCovering")
    for piece in cover:
        for a, b in piece.chain_edges():
            if not g.has_edge(a, b):
                return Diagnostics(False, "AdjacencyViolation")
    spiders = sum(1 for piece in cover if piece.kind == "spider")
    if spiders != (1 if expected_kind == "psc" else 0):
        return Diagnostics(False, "SpiderCount")
    return Diagnostics(True)
