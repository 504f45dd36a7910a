"""Top-level exact solvers: minimum branch vertices, path partition,
path-spider cover.

The branch-vertex solver enumerates candidate branch-module subsets of the
root quotient in order of size, solving one load program per candidate;
the first feasible subset has minimum size, and its tree is assembled from
the children's trimmed covers.  A root record with a one-piece partition
short-circuits straight to the spanning path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .coverdp import compute_record, inflow_totals, node_ham
from .decomposition import decompose
from .errors import DisconnectedGraphError, NoCoverError
from .graph import Graph, is_connected
from .loads import build_mbv_instance, solve_feasibility
from .pieces import trim_cover
from .treebuild import SpanningTreeResult, build_tree


@dataclass(frozen=True)
class MbvAnswer:
    b: int
    tree: SpanningTreeResult
    branch_modules: tuple


def _path_to_tree(piece) -> SpanningTreeResult:
    parent = {}
    prev = None
    for v in piece.vertices:
        parent[v] = prev
        prev = v
    return SpanningTreeResult(parent=parent, root=piece.first,
                              branch=frozenset())


def _trivial_tree() -> SpanningTreeResult:
    return SpanningTreeResult(parent={0: None}, root=0, branch=frozenset())


def solve_mbv(g: Graph, *, search_budget=None) -> MbvAnswer:
    """Spanning tree of g with the fewest degree->=3 vertices."""
    if not is_connected(g):
        raise DisconnectedGraphError("minimum branch vertices needs a connected graph")
    if g.n == 1:
        return MbvAnswer(0, _trivial_tree(), ())
    root = decompose(g)
    records = [
        compute_record(c, search_budget=search_budget, host=g)
        for c in root.children
    ]
    ham, ham_cover = node_ham(root, search_budget=search_budget, host=g)
    if ham == 1:
        return MbvAnswer(0, _path_to_tree(ham_cover[0]), ())

    n = len(root.children)
    sizes = [r.size for r in records]
    spis = [r.spi for r in records]
    hams = [r.ham for r in records]
    kwargs = {} if search_budget is None else {"budget": search_budget}
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            chosen = frozenset(combo)
            r0 = combo[0]
            inst = build_mbv_instance(root.quotient, chosen, r0,
                                      sizes, spis, hams)
            solution = solve_feasibility(inst, **kwargs)
            if solution is None:
                continue
            alpha = inflow_totals(solution.x, n, r0)
            pieces = [
                trim_cover(
                    records[i].spi_cover if i in chosen
                    else records[i].ham_cover,
                    alpha[i],
                )
                for i in range(n)
            ]
            tree = build_tree(pieces, solution.x, chosen, r0,
                              is_edge=g.has_edge)
            return MbvAnswer(k, tree, combo)
    raise NoCoverError("no branch set admitted a feasible assignment")


def solve_pp(g: Graph, *, search_budget=None):
    """Minimum partition of V(g) into vertex-disjoint paths, with witness."""
    if g.n < 1:
        raise ValueError("partition needs at least one vertex")
    record = compute_record(decompose(g), search_budget=search_budget, host=g)
    return record.ham, record.ham_cover


def solve_psc(g: Graph, *, search_budget=None):
    """Minimum path-spider cover of V(g) (one spider, rest paths)."""
    if g.n < 1:
        raise ValueError("cover needs at least one vertex")
    record = compute_record(decompose(g), search_budget=search_budget, host=g)
    return record.spi, record.spi_cover
