"""Exhaustive checking helpers kept independent of the package's solver.

`literal_feasible` decides an instance the long way around: enumerate every
load vector satisfying the written load constraints, then decide whether a
companion flow exists via a plain max-flow computation (never via the
solver's reachability shortcut).  This is the oracle side of the
y-elimination equivalence test.
"""

from itertools import product

from branchwise.loads import INDEPENDENT, MODE_CBV, IlpInstance


def _literal_lower(inst: IlpInstance, j: int) -> int:
    if inst.mode == MODE_CBV:
        if inst.class_kind[j] == INDEPENDENT:
            return inst.capacity[j]  # equality, paired with the capacity bound
        return 0
    return inst.lower[j]


def _compositions(total, k):
    if k == 0:
        if total == 0:
            yield ()
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, k - 1):
            yield (head,) + rest


def enumerate_x(inst: IlpInstance):
    """All integer load vectors meeting the written per-module constraints."""
    n = inst.module_count
    in_arcs = [[] for _ in range(n)]
    for arc in inst.arcs:
        in_arcs[arc[1]].append(arc)
    column_options = []
    for j in range(n):
        source = 1 if j == inst.root else 0
        lo = max(0, _literal_lower(inst, j) - source)
        hi = inst.capacity[j] - source
        if hi < lo:
            return
        options = []
        for total in range(lo, hi + 1):
            for combo in _compositions(total, len(in_arcs[j])):
                options.append(dict(zip(in_arcs[j], combo)))
        column_options.append(options)
    for chosen in product(*column_options):
        x = {}
        for col in chosen:
            x.update(col)
        out = [0] * n
        inn = [0] * n
        for (i, j), v in x.items():
            out[i] += v
            inn[j] += v
        inn[inst.root] += 1
        ok = all(
            i in inst.branch or out[i] <= inn[i] for i in range(n)
        )
        if ok:
            yield x


def flow_exists(inst: IlpInstance, x: dict) -> bool:
    """Max-flow check for the companion flow: one unit of demand per module,
    everything shipped through the source arc, arc capacities n * x."""
    n = inst.module_count
    source, sink = n, n + 1
    cap = {}

    def add(a, b, c):
        cap[(a, b)] = cap.get((a, b), 0) + c

    add(source, inst.root, n)
    for arc, v in x.items():
        if v > 0:
            add(arc[0], arc[1], n * v)
    for i in range(n):
        add(i, sink, 1)
    flow = 0
    while True:
        parent = {source: None}
        queue = [source]
        while queue and sink not in parent:
            a = queue.pop(0)
            for (u, v), c in cap.items():
                if u == a and c > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            return flow == n
        push = min(cap[(parent[v], v)]
                   for v in _walk_back(parent, sink))
        for v in _walk_back(parent, sink):
            u = parent[v]
            cap[(u, v)] -= push
            add(v, u, push)
        flow += push


def _walk_back(parent, v):
    while parent[v] is not None:
        yield v
        v = parent[v]


def literal_feasible(inst: IlpInstance) -> bool:
    return any(flow_exists(inst, x) for x in enumerate_x(inst))
