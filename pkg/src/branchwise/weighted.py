"""Minimum-cost branch vertices over the neighborhood-diversity quotient.

Every type class is a clique or an independent set, so its cover records
have closed forms: a clique is one path (or a star centered on its cheapest
vertex), an independent class is its own set of singletons.  Candidate
branch-class subsets are tried in ascending order of the summed costs of
their cheapest representatives, the empty set first via every possible root
class; since all costs are positive, the first feasible candidate is
optimal.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .coverdp import inflow_totals
from .errors import DisconnectedGraphError, NoCoverError
from .graph import WeightedGraph, is_connected
from .loads import build_cbv_instance, solve_feasibility
from .pieces import CoverRecord, path_piece, spider_piece, trim_cover
from .treebuild import SpanningTreeResult, build_tree
from .typeclasses import INDEPENDENT, min_cost_representatives, type_partition


@dataclass(frozen=True)
class CbvAnswer:
    cost: int
    tree: SpanningTreeResult
    branch_classes: tuple


def class_cover_record(vertices, kind, representative) -> CoverRecord:
    """Closed-form record for one type class.

    Cliques: one path with the representative last, or a star centered on
    it.  Independent classes: singletons, the representative's listed first
    as the designated spider.
    """
    vertices = sorted(vertices)
    others = [v for v in vertices if v != representative]
    if kind == INDEPENDENT:
        ham_cover = tuple(path_piece([v]) for v in vertices)
        spi_cover = (spider_piece(representative),) + tuple(
            path_piece([v]) for v in others
        )
        k = len(vertices)
        return CoverRecord(k, k, k, ham_cover, spi_cover)
    ham_cover = (path_piece(others + [representative]),)
    spi_cover = (spider_piece(representative, [[v] for v in others]),)
    return CoverRecord(len(vertices), 1, 1, ham_cover, spi_cover)


def _candidates(nd: int, rep_cost):
    subsets = []
    for mask in range(1 << nd):
        combo = tuple(i for i in range(nd) if mask >> i & 1)
        subsets.append((sum(rep_cost[i] for i in combo), len(combo), combo))
    subsets.sort()
    return subsets


def solve_cbv(wg: WeightedGraph, *, search_budget=None) -> CbvAnswer:
    """Spanning tree minimizing the summed cost of its branch vertices."""
    g = wg.graph
    if not is_connected(g):
        raise DisconnectedGraphError("cost solver needs a connected graph")
    tp = type_partition(g)
    reps = min_cost_representatives(tp, wg)
    records = [
        class_cover_record(tp.classes[i], tp.class_kind[i], reps[i])
        for i in range(tp.nd)
    ]
    sizes = [r.size for r in records]
    rep_cost = [wg.cost[reps[i]] for i in range(tp.nd)]
    kwargs = {} if search_budget is None else {"budget": search_budget}

    def attempt(chosen, combo, root_class):
        inst = build_cbv_instance(tp.type_graph, tp.class_kind, sizes,
                                  chosen, root_class)
        solution = solve_feasibility(inst, **kwargs)
        if solution is None:
            return None
        alpha = inflow_totals(solution.x, tp.nd, root_class)
        pieces = [
            trim_cover(
                records[i].spi_cover if i in chosen else records[i].ham_cover,
                alpha[i],
            )
            for i in range(tp.nd)
        ]
        tree = build_tree(pieces, solution.x, chosen, root_class,
                          is_edge=g.has_edge)
        cost = sum(wg.cost[v] for v in tree.branch)
        return CbvAnswer(cost, replace(tree, cost=cost), combo)

    for _, _, combo in _candidates(tp.nd, rep_cost):
        chosen = frozenset(combo)
        if combo:
            answer = attempt(chosen, combo, combo[0])
            if answer is not None:
                return answer
        else:
            for root_class in range(tp.nd):
                answer = attempt(chosen, combo, root_class)
                if answer is not None:
                    return answer
    raise NoCoverError("no branch-class subset admitted a feasible assignment")
