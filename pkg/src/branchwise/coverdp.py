"""Bottom-up computation of path partitions and path-spider covers.

For every parse-tree node the record (ham, spi, size) is found by reducing
to load feasibility over the node's quotient: the minimum partition size is
the least number of universal helper vertices that make a spanning path
possible with one end among the helpers, and the minimum path-spider cover
is the least helper count that makes a spanning spider possible with its
center inside the node.  The witness tree is built for the augmented graph
and the helpers are stripped back out by id threshold, leaving the cover.
"""

from __future__ import annotations

from .decomposition import ParseNode
from .errors import NoCoverError
from .graph import Graph
from .loads import build_mbv_instance, solve_feasibility
from .pieces import CoverRecord, leaf_record, path_piece, spider_piece, trim_cover
from .treebuild import build_tree


def inflow_totals(x: dict, module_count: int, root: int):
    """Per-module incoming load, the fixed source unit included."""
    totals = [0] * module_count
    for (_, j), v in x.items():
        totals[j] += v
    totals[root] += 1
    return totals


def _added_base(records) -> int:
    top = 0
    for record in records:
        for piece in record.ham_cover:
            for v in piece.all_vertices():
                if v >= top:
                    top = v + 1
    return top


def _augment(quotient: Graph) -> Graph:
    n = quotient.n
    pairs = list(quotient.edges) + [(i, n) for i in range(n)]
    return Graph(n + 1, pairs)


def _children_map(parent: dict):
    children = {v: [] for v in parent}
    for v, p in parent.items():
        if p is not None:
            children[p].append(v)
    for lst in children.values():
        lst.sort()
    return children


def _strip_to_path_cover(parent: dict, root, base: int):
    """Cut the helper vertices out of a spanning path; the runs that remain
    between them are the partition's paths, in walk order."""
    children = _children_map(parent)
    if root < base:
        raise NoCoverError("spanning path must start at a helper vertex")
    order = []
    v = root
    while True:
        order.append(v)
        nxt = children[v]
        if not nxt:
            break
        if len(nxt) > 1:
            raise NoCoverError("spanning path degenerated into a branching tree")
        v = nxt[0]
    if len(order) != len(parent):
        raise NoCoverError("spanning path missed some vertices")
    pieces = []
    run = []
    for v in order:
        if v >= base:
            if run:
                pieces.append(path_piece(run))
                run = []
        else:
            run.append(v)
    if run:
        pieces.append(path_piece(run))
    return pieces


def _strip_to_spider_cover(parent: dict, center, base: int):
    """Cut the helper vertices out of a spanning spider; the center keeps its
    surviving legs, every other fragment is a descending path."""
    kept_parent = {}
    for v, p in parent.items():
        if v >= base:
            continue
        kept_parent[v] = p if (p is not None and p < base) else None
    children = _children_map(kept_parent)

    def walk_chain(start):
        chain = [start]
        while children[chain[-1]]:
            nxt = children[chain[-1]]
            if len(nxt) > 1:
                raise NoCoverError("cover fragment branched outside the center")
            chain.append(nxt[0])
        return chain

    legs = tuple(walk_chain(c) for c in children[center])
    spider = spider_piece(center, legs)
    paths = []
    for v in sorted(kept_parent):
        if v != center and kept_parent[v] is None:
            paths.append(path_piece(walk_chain(v)))
    paths.sort(key=lambda p: min(p.all_vertices()))
    return [spider] + paths


def _edge_oracle(host, node_vertices, base):
    if host is None:
        return None
    inside = frozenset(node_vertices)

    def is_edge(u, v):
        ua = u >= base
        va = v >= base
        if ua and va:
            return False
        if ua:
            return v in inside
        if va:
            return u in inside
        return host.has_edge(u, v)

    return is_edge


def compute_ham(quotient: Graph, child_records, *, search_budget=None,
                host: Graph | None = None):
    """Least number of paths partitioning the node, with a witness cover."""
    n = quotient.n
    sizes = [r.size for r in child_records]
    hams = [r.ham for r in child_records]
    spis = [r.spi for r in child_records]
    total = sum(sizes)
    base = _added_base(child_records)
    augmented = _augment(quotient)
    kwargs = {} if search_budget is None else {"budget": search_budget}
    for count in range(1, total + 1):
        inst = build_mbv_instance(
            augmented,
            frozenset(),
            n,  # the helper module roots the exploration
            sizes + [count],
            spis + [count],
            hams + [count],
        )
        solution = solve_feasibility(inst, **kwargs)
        if solution is None:
            continue
        alpha = inflow_totals(solution.x, n + 1, n)
        pieces = [
            trim_cover(child_records[i].ham_cover, alpha[i]) for i in range(n)
        ]
        pieces.append([path_piece([base + t]) for t in range(count)])
        node_vertices = set()
        for record in child_records:
            for piece in record.ham_cover:
                node_vertices.update(piece.all_vertices())
        tree = build_tree(pieces, solution.x, frozenset(), n,
                          is_edge=_edge_oracle(host, node_vertices, base))
        cover = _strip_to_path_cover(tree.parent, tree.root, base)
        if len(cover) != count:
            raise NoCoverError(
                f"expected {count} paths after stripping, got {len(cover)}"
            )
        return count, tuple(cover)
    raise NoCoverError("every partition size was infeasible")


def compute_spi(quotient: Graph, child_records, *, search_budget=None,
                host: Graph | None = None):
    """Least path-spider cover size for the node, with a witness cover."""
    n = quotient.n
    sizes = [r.size for r in child_records]
    hams = [r.ham for r in child_records]
    spis = [r.spi for r in child_records]
    total = sum(sizes)
    base = _added_base(child_records)
    augmented = _augment(quotient)
    kwargs = {} if search_budget is None else {"budget": search_budget}
    node_vertices = set()
    for record in child_records:
        for piece in record.ham_cover:
            node_vertices.update(piece.all_vertices())
    for count in range(1, total + 1):
        helpers = count - 1
        for center_module in range(n):
            if helpers:
                inst = build_mbv_instance(
                    augmented,
                    frozenset((center_module,)),
                    center_module,
                    sizes + [helpers],
                    spis + [helpers],
                    hams + [helpers],
                )
            else:
                inst = build_mbv_instance(
                    quotient,
                    frozenset((center_module,)),
                    center_module,
                    sizes,
                    spis,
                    hams,
                )
            solution = solve_feasibility(inst, **kwargs)
            if solution is None:
                continue
            module_count = n + 1 if helpers else n
            alpha = inflow_totals(solution.x, module_count, center_module)
            pieces = []
            for i in range(n):
                source = (
                    child_records[i].spi_cover
                    if i == center_module
                    else child_records[i].ham_cover
                )
                pieces.append(trim_cover(source, alpha[i]))
            if helpers:
                pieces.append([path_piece([base + t]) for t in range(helpers)])
            tree = build_tree(pieces, solution.x,
                              frozenset((center_module,)), center_module,
                              is_edge=_edge_oracle(host, node_vertices, base))
            center = pieces[center_module][0].first
            cover = _strip_to_spider_cover(tree.parent, center, base)
            if len(cover) != count:
                raise NoCoverError(
                    f"expected {count} pieces after stripping, got {len(cover)}"
                )
            return count, tuple(cover)
    raise NoCoverError("every cover size was infeasible")


def node_ham(node: ParseNode, *, search_budget=None, host=None):
    """Memoized (ham, cover) for one parse-tree node."""
    if node._ham is None:
        if node.is_leaf:
            node._ham = (1, (path_piece([node.vertex]),))
        else:
            records = [
                compute_record(c, search_budget=search_budget, host=host)
                for c in node.children
            ]
            node._ham = compute_ham(
                node.quotient, records, search_budget=search_budget, host=host
            )
    return node._ham


def node_spi(node: ParseNode, *, search_budget=None, host=None):
    """Memoized (spi, cover) for one parse-tree node."""
    if node._spi is None:
        if node.is_leaf:
            node._spi = (1, (spider_piece(node.vertex),))
        else:
            records = [
                compute_record(c, search_budget=search_budget, host=host)
                for c in node.children
            ]
            node._spi = compute_spi(
                node.quotient, records, search_budget=search_budget, host=host
            )
    return node._spi


def compute_record(node: ParseNode, *, search_budget=None, host=None) -> CoverRecord:
    """Full record for a node; children are computed first and memoized."""
    if node.is_leaf:
        return leaf_record(node.vertex)
    ham, ham_cover = node_ham(node, search_budget=search_budget, host=host)
    spi, spi_cover = node_spi(node, search_budget=search_budget, host=host)
    if not spi <= ham <= node.size:
        raise NoCoverError(
            f"record invariant broken: spi={spi}, ham={ham}, size={node.size}"
        )
    return CoverRecord(
        size=node.size,
        ham=ham,
        spi=spi,
        ham_cover=tuple(ham_cover),
        spi_cover=tuple(spi_cover),
    )
