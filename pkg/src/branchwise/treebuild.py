"""Turn a feasible load assignment plus trimmed covers into a spanning tree.

Exploration starts from the first piece of the root module and expands in
waves: dequeued piece endpoints adopt first endpoints of still-unexplored
pieces along arcs with remaining budget.  A designated branch module spends
its whole outgoing budget in one shot through the endpoint of its leading
spider piece, which becomes that module's single branch vertex.  When a
wave dies out with vertices left over, some explored first endpoint hands
its parent to an unexplored sibling endpoint and re-roots itself into the
pending set, to be re-adopted later together with its subtree.

Budgets are tracked per arc, not just per module, so every adoption
consumes the specific arc the load assignment paid for.  The aggregate
counters alpha (first endpoints still unexplored) and beta (adoptions
still owed) are kept alongside for the invariant checks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NoAdoptableEndpointError, StuckExplorationError


@dataclass(frozen=True)
class SpanningTreeResult:
    """A verifiable certificate: parent map, root, recomputed branch set."""

    parent: dict
    root: int
    branch: frozenset
    cost: int | None = None


def tree_degrees(parent: dict) -> dict:
    deg = {v: 0 for v in parent}
    for v, p in parent.items():
        if p is not None:
            deg[v] += 1
            deg[p] += 1
    return deg


def branch_vertices(parent: dict) -> frozenset:
    return frozenset(v for v, d in tree_degrees(parent).items() if d >= 3)


class ExplorationState:
    """Mutable bookkeeping shared by one build_tree run."""

    def __init__(self, pieces, x, branch_modules, root_module, is_edge=None):
        self.pieces = [list(ps) for ps in pieces]
        self.branch_modules = frozenset(branch_modules)
        self.root_module = root_module
        self.is_edge = is_edge
        self.module_count = len(self.pieces)

        self.parent = {}
        for ps in self.pieces:
            for piece in ps:
                for v in piece.all_vertices():
                    if v in self.parent:
                        raise ValueError(f"vertex {v} appears in two pieces")
                    self.parent[v] = None
        self.total_vertices = len(self.parent)

        self.piece_of_first = {}
        self.module_of_second = {}
        for i, ps in enumerate(self.pieces):
            for k, piece in enumerate(ps):
                self.piece_of_first[piece.first] = (i, k)
                self.module_of_second[piece.second] = i

        self.arc_budget = {}
        inflow = [0] * self.module_count
        for (i, j), v in x.items():
            if v > 0:
                self.arc_budget[(i, j)] = v
                inflow[j] += v
        inflow[root_module] += 1  # the virtual source unit
        for i, ps in enumerate(self.pieces):
            if inflow[i] != len(ps):
                raise ValueError(
                    f"module {i}: {len(ps)} pieces but inflow {inflow[i]}"
                )

        self.out_heads = [
            sorted(j for (i, j) in self.arc_budget if i == m)
            for m in range(self.module_count)
        ]
        self.alpha = [len(ps) for ps in self.pieces]
        self.beta = [
            1 if i in self.branch_modules
            else sum(self.arc_budget.get((i, j), 0) for j in self.out_heads[i])
            for i in range(self.module_count)
        ]
        self.explored = set()
        self.pending_roots = set()
        self.branch = set()
        self.queue = deque()
        self.piece_done = [[False] * len(ps) for ps in self.pieces]

    # -- primitive moves -------------------------------------------------

    def _wire(self, child, par):
        if self.is_edge is not None and not self.is_edge(child, par):
            raise NoAdoptableEndpointError(
                f"parent edge {child}-{par} missing from the host graph"
            )
        self.parent[child] = par

    def _explore_piece(self, module, k):
        piece = self.pieces[module][k]
        if self.piece_done[module][k]:
            raise NoAdoptableEndpointError(
                f"piece {k} of module {module} explored twice"
            )
        self.piece_done[module][k] = True
        self.alpha[module] -= 1
        verts = list(piece.all_vertices())
        self.explored.update(verts)
        prev = None
        if piece.kind == "path":
            for v in piece.vertices:
                if prev is not None:
                    self._wire(v, prev)
                prev = v
        else:
            center = piece.vertices[0]
            for leg in piece.legs:
                prev = center
                for v in leg:
                    self._wire(v, prev)
                    prev = v
        self.queue.append(piece.second)

    def _unexplored_piece_indices(self, module):
        return [
            k for k, piece in enumerate(self.pieces[module])
            if piece.first not in self.explored
        ]

    def _adopt(self, adopter, module, target_module, k):
        endpoint = self.pieces[target_module][k].first
        self._wire(endpoint, adopter)
        self.arc_budget[(module, target_module)] -= 1
        if self.arc_budget[(module, target_module)] == 0:
            del self.arc_budget[(module, target_module)]
        if endpoint in self.pending_roots:
            # Re-attachment: the endpoint already explored its piece and
            # spent its duties, so it rejoins silently with its subtree.
            self.pending_roots.remove(endpoint)
            self.explored.add(endpoint)
            self.alpha[target_module] -= 1
        else:
            self._explore_piece(target_module, k)


def explore(state: ExplorationState, start: int):
    """Expand the tree from one first endpoint until the wave dies out."""
    where = state.piece_of_first.get(start)
    if where is None:
        raise ValueError(f"{start} is not the first endpoint of any piece")
    state._explore_piece(*where)
    while state.queue:
        v = state.queue.popleft()
        i = state.module_of_second[v]  # only second endpoints are enqueued
        if i not in state.branch_modules:
            if state.beta[i] < 1:
                continue
            picked = None
            for target in state.out_heads[i]:
                if state.arc_budget.get((i, target), 0) < 1:
                    continue
                ks = state._unexplored_piece_indices(target)
                if ks:
                    picked = (target, ks[0])
                    break
            if picked is None:
                raise NoAdoptableEndpointError(
                    f"module {i} owes an adoption but found no endpoint"
                )
            state._adopt(v, i, *picked)
            state.beta[i] -= 1
        elif state.beta[i] == 1:
            state.branch.add(v)
            for target in list(state.out_heads[i]):
                need = state.arc_budget.get((i, target), 0)
                if need == 0:
                    continue
                ks = state._unexplored_piece_indices(target)
                if len(ks) < need:
                    raise NoAdoptableEndpointError(
                        f"module {i} must adopt {need} endpoints of module "
                        f"{target}, only {len(ks)} available"
                    )
                for k in ks[:need]:
                    state._adopt(v, i, target, k)
            state.beta[i] = 0
    return state


def _select_reattachment(state: ExplorationState):
    # The donor may be the current tree root, in which case the fresh
    # endpoint inherits rootship rather than a parent.
    for j in range(state.module_count):
        if state.beta[j] < 1:
            continue
        donor = None
        fresh = None
        for piece in state.pieces[j]:
            f = piece.first
            if donor is None and f in state.explored:
                donor = f
            if fresh is None and f not in state.explored \
                    and f not in state.pending_roots:
                fresh = f
            if donor is not None and fresh is not None:
                return j, donor, fresh
    return None


def build_tree(pieces, x, branch_modules, root_module,
               is_edge=None) -> SpanningTreeResult:
    """Assemble the spanning tree for one feasible load assignment.

    `pieces` lists each module's trimmed cover; a designated branch module
    must lead with its spider piece, and the root module's first piece
    supplies the tree root through its first endpoint.
    """
    state = ExplorationState(pieces, x, branch_modules, root_module, is_edge)
    if state.branch_modules:
        if root_module not in state.branch_modules:
            raise ValueError("the root module must carry a branch vertex")
        if state.pieces[root_module][0].kind != "spider":
            raise ValueError("a branch root module must lead with its spider")
    root_vertex = state.pieces[root_module][0].first
    explore(state, root_vertex)
    while len(state.explored) < state.total_vertices:
        sel = _select_reattachment(state)
        if sel is None:
            raise StuckExplorationError(
                "no module can continue the exploration; "
                "the load assignment or covers are inconsistent"
            )
        j, donor, fresh = sel
        donor_parent = state.parent[donor]
        if donor_parent is None:
            state.parent[fresh] = None  # the fresh endpoint takes over rootship
        else:
            state._wire(fresh, donor_parent)
        state.parent[donor] = None
        state.explored.remove(donor)
        state.pending_roots.add(donor)
        state.alpha[j] += 1
        explore(state, fresh)
    if state.pending_roots:
        raise StuckExplorationError("pending subtree roots were never re-adopted")
    roots = [v for v, p in state.parent.items() if p is None]
    if len(roots) != 1:
        raise StuckExplorationError(f"construction left {len(roots)} roots")
    return SpanningTreeResult(
        parent=dict(state.parent),
        root=roots[0],
        branch=branch_vertices(state.parent),
    )
