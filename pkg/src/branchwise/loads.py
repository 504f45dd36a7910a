"""Integer arc-load programs over rooted quotient digraphs.

An instance asks for nonnegative integer loads x on the arcs of a quotient
digraph (both directions of every quotient edge, plus one fixed unit on a
virtual source arc into the root) such that

  * every module's total incoming load, source unit included, stays within
    [lower, capacity] (weighted mode tightens independent classes to
    equality and drops explicit lower bounds for cliques),
  * no module outside the branch set forwards more load than it receives,
  * every module is reachable from the root through positively loaded arcs.

The companion flow y (one unit of demand per module, fed entirely through
the source arc) certifies reachability: it exists exactly when the support
of x reaches every module, and is reconstructed from subtree sizes of a
breadth-first tree over that support.  The solver therefore searches over x
only and derives y afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    InconsistentBoundsError,
    SearchBudgetExceededError,
    UnreachableError,
)
from .graph import Graph

DEFAULT_SEARCH_BUDGET = 10_000_000

MODE_MBV = "mbv"
MODE_CBV = "cbv"

CLIQUE = "clique"
INDEPENDENT = "independent"


@dataclass(frozen=True)
class IlpInstance:
    mode: str
    module_count: int
    arcs: tuple                       # sorted (tail, head) pairs, both directions
    root: int
    branch: frozenset
    capacity: tuple
    lower: tuple                      # solver-side lower bound on incoming load
    class_kind: tuple | None = None   # weighted mode only


@dataclass(frozen=True)
class LoadAssignment:
    """Loads x and flow y on the module arcs, plus the fixed source values."""

    x: dict
    y: dict
    source_load: int = 1
    source_flow: int = 0


def _arcs_of(quotient: Graph):
    arcs = []
    for u, v in quotient.edges:
        arcs.append((u, v))
        arcs.append((v, u))
    arcs.sort()
    return tuple(arcs)


def build_mbv_instance(quotient: Graph, branch_modules, root, capacity,
                       spi_lower, ham_lower) -> IlpInstance:
    """Instance whose lower bounds pick spi for branch modules, ham otherwise."""
    n = quotient.n
    branch = frozenset(branch_modules)
    if not (0 <= root < n):
        raise ValueError(f"root {root} outside module range")
    if branch and root not in branch:
        raise ValueError("the root must belong to a nonempty branch set")
    capacity = tuple(capacity)
    spi_lower = tuple(spi_lower)
    ham_lower = tuple(ham_lower)
    if not (len(capacity) == len(spi_lower) == len(ham_lower) == n):
        raise ValueError("per-module vectors must cover every module")
    lower = tuple(
        spi_lower[i] if i in branch else ham_lower[i] for i in range(n)
    )
    for i in range(n):
        if not 1 <= lower[i] <= capacity[i]:
            raise InconsistentBoundsError(
                f"module {i}: lower bound {lower[i]} vs capacity {capacity[i]}"
            )
    return IlpInstance(
        mode=MODE_MBV,
        module_count=n,
        arcs=_arcs_of(quotient),
        root=root,
        branch=branch,
        capacity=capacity,
        lower=lower,
    )


def build_cbv_instance(type_graph: Graph, class_kind, class_size,
                       branch_classes, root) -> IlpInstance:
    """Weighted-mode instance: equality at independent classes, caps at cliques.

    Cliques carry no explicit lower bound in this mode; the solver still
    uses 1 internally because root reachability forces at least one unit
    into every class anyway.
    """
    n = type_graph.n
    branch = frozenset(branch_classes)
    if not (0 <= root < n):
        raise ValueError(f"root {root} outside class range")
    if branch and root not in branch:
        raise ValueError("the root must belong to a nonempty branch set")
    class_kind = tuple(class_kind)
    class_size = tuple(class_size)
    if len(class_kind) != n or len(class_size) != n:
        raise ValueError("per-class vectors must cover every class")
    for kind in class_kind:
        if kind not in (CLIQUE, INDEPENDENT):
            raise ValueError(f"unknown class kind {kind!r}")
    lower = tuple(
        class_size[i] if class_kind[i] == INDEPENDENT else 1 for i in range(n)
    )
    for i in range(n):
        if not 1 <= lower[i] <= class_size[i]:
            raise InconsistentBoundsError(
                f"class {i}: lower bound {lower[i]} vs size {class_size[i]}"
            )
    return IlpInstance(
        mode=MODE_CBV,
        module_count=n,
        arcs=_arcs_of(type_graph),
        root=root,
        branch=branch,
        capacity=class_size,
        lower=lower,
        class_kind=class_kind,
    )


def solve_feasibility(inst: IlpInstance, budget: int = DEFAULT_SEARCH_BUDGET):
    """Exact search for a feasible load assignment; None when infeasible.

    Depth-first over arcs in sorted order, values ascending, so the answer
    is deterministic.  Pruning is sound (it only discards assignments that
    cannot complete), hence the first assignment found never depends on it.
    Raises SearchBudgetExceededError instead of guessing when the node cap
    is hit.
    """
    n = inst.module_count
    arcs = inst.arcs
    m = len(arcs)
    cap = inst.capacity
    low = inst.lower
    branch = inst.branch
    root = inst.root
    is_branch = [i in branch for i in range(n)]

    in_pos = [[] for _ in range(n)]
    out_pos = [[] for _ in range(n)]
    for p, (i, j) in enumerate(arcs):
        out_pos[i].append(p)
        in_pos[j].append(p)

    inflow = [0] * n
    inflow[root] = 1  # the source arc carries exactly one unit
    outflow = [0] * n
    rem_in = [len(ps) for ps in in_pos]
    rem_out = [len(ps) for ps in out_pos]

    for j in range(n):
        if rem_in[j] == 0 and inflow[j] < low[j]:
            return None

    x = [0] * m
    demand = sum(max(0, low[j] - inflow[j]) for j in range(n))
    nodes = 0

    def reach_ok(upto):
        # Optimistic support: assigned positive arcs plus everything unassigned.
        seen = [False] * n
        seen[root] = True
        stack = [root]
        count = 1
        while stack:
            i = stack.pop()
            for p in out_pos[i]:
                if p >= upto or x[p] >= 1:
                    j = arcs[p][1]
                    if not seen[j]:
                        seen[j] = True
                        count += 1
                        stack.append(j)
        return count == n

    def supply_ok(upto):
        # Remaining demand must fit under what the unassigned arcs can still move.
        if demand <= 0:
            return True
        supply = 0
        for t in range(n):
            if rem_out[t] == 0 or is_branch[t]:
                continue
            supply += cap[t] - outflow[t]
            if supply >= demand:
                return True
        for t in branch:
            if rem_out[t] == 0:
                continue
            for p in out_pos[t]:
                if p >= upto:
                    head = arcs[p][1]
                    supply += cap[head] - inflow[head]
                    if supply >= demand:
                        return True
        return supply >= demand

    def dfs(p):
        nonlocal demand, nodes
        if p == m:
            return reach_ok(m)
        i, j = arcs[p]
        hi = cap[j] - inflow[j]
        if not is_branch[i]:
            attainable = cap[i] if rem_in[i] > 0 else inflow[i]
            room = attainable - outflow[i]
            if room < hi:
                hi = room
        lo = 0
        if rem_in[j] == 1:  # last chance to top up module j's inflow
            lo = low[j] - inflow[j]
            if not is_branch[j] and outflow[j] - inflow[j] > lo:
                lo = outflow[j] - inflow[j]
            if lo < 0:
                lo = 0
        if lo > hi:
            return False
        rem_in[j] -= 1
        rem_out[i] -= 1
        for v in range(lo, hi + 1):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceededError(
                    f"feasibility search exceeded {budget} nodes"
                )
            x[p] = v
            deficit_before = max(0, low[j] - inflow[j])
            inflow[j] += v
            outflow[i] += v
            demand += max(0, low[j] - inflow[j]) - deficit_before
            ok = supply_ok(p + 1)
            if ok and v == 0:
                ok = reach_ok(p + 1)
            if ok and dfs(p + 1):
                return True
            demand += deficit_before - max(0, low[j] - inflow[j])
            inflow[j] -= v
            outflow[i] -= v
        x[p] = 0
        rem_in[j] += 1
        rem_out[i] += 1
        return False

    if not dfs(0):
        return None
    loads = {arcs[p]: x[p] for p in range(m)}
    flow = extract_flow(loads, inst)
    return LoadAssignment(x=loads, y=flow, source_load=1, source_flow=n)


def extract_flow(x: dict, inst: IlpInstance) -> dict:
    """Rebuild the certifying flow from the support of x.

    Takes the breadth-first tree of the support digraph from the root and
    ships each module's subtree size down its tree arc; every other arc
    carries zero.  Requires the support to reach every module.
    """
    n = inst.module_count
    succ = [[] for _ in range(n)]
    for (i, j), v in sorted(x.items()):
        if v >= 1:
            succ[i].append(j)
    parent = [None] * n
    order = [inst.root]
    seen = [False] * n
    seen[inst.root] = True
    head = 0
    while head < len(order):
        i = order[head]
        head += 1
        for j in succ[i]:
            if not seen[j]:
                seen[j] = True
                parent[j] = i
                order.append(j)
    if len(order) != n:
        missing = [j for j in range(n) if not seen[j]]
        raise UnreachableError(f"modules {missing} unreachable from root")
    subtree = [1] * n
    for i in reversed(order):
        if parent[i] is not None:
            subtree[parent[i]] += subtree[i]
    y = {arc: 0 for arc in inst.arcs}
    for j in range(n):
        if parent[j] is not None:
            y[(parent[j], j)] = subtree[j]
    return y


def check_assignment(inst: IlpInstance, la: LoadAssignment):
    """Replay every constraint literally; returns the violated ones by name."""
    n = inst.module_count
    bad = []
    values = list(la.x.values()) + list(la.y.values())
    values += [la.source_load, la.source_flow]
    if any((not isinstance(v, int)) or v < 0 for v in values):
        bad.append("integrality")
    if la.source_load != 1:
        bad.append("source-load")
    if la.source_flow != n:
        bad.append("source-flow")
    x_in = [0] * n
    x_out = [0] * n
    y_in = [0] * n
    y_out = [0] * n
    for (i, j) in inst.arcs:
        xv = la.x[(i, j)]
        yv = la.y[(i, j)]
        x_in[j] += xv
        x_out[i] += xv
        y_in[j] += yv
        y_out[i] += yv
        if yv > n * xv:
            bad.append(f"coupling:{i}->{j}")
    x_in[inst.root] += la.source_load
    y_in[inst.root] += la.source_flow
    for i in range(n):
        if inst.mode == MODE_MBV:
            if x_in[i] > inst.capacity[i]:
                bad.append(f"capacity:{i}")
            if x_in[i] < inst.lower[i]:
                bad.append(f"lower:{i}")
        else:
            if inst.class_kind[i] == INDEPENDENT:
                if x_in[i] != inst.capacity[i]:
                    bad.append(f"exact-size:{i}")
            elif x_in[i] > inst.capacity[i]:
                bad.append(f"capacity:{i}")
        if i not in inst.branch and x_out[i] > x_in[i]:
            bad.append(f"forwarding:{i}")
        if y_in[i] - y_out[i] != 1:
            bad.append(f"conservation:{i}")
    return bad
