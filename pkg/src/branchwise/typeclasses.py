"""Neighborhood-diversity type partition and type graph.

Two vertices share a type when their neighborhoods agree outside the pair
itself; the classes of that relation are each a clique or an independent
set, and any two classes are either completely joined or completely
non-adjacent.  The weighted solver works entirely on this quotient view.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, WeightedGraph

CLIQUE = "clique"
INDEPENDENT = "independent"


@dataclass(frozen=True)
class TypePartition:
    classes: tuple          # tuple of sorted vertex tuples, ordered by min id
    class_kind: tuple       # "clique" | "independent" per class
    type_graph: Graph       # one vertex per class
    representative: tuple   # minimum id per class

    @property
    def nd(self) -> int:
        return len(self.classes)

    def class_of(self, v: int) -> int:
        for idx, cls in enumerate(self.classes):
            if v in cls:
                return idx
        raise KeyError(v)


def _same_type(g: Graph, u: int, v: int) -> bool:
    return (g.adj[u] - {v}) == (g.adj[v] - {u})


def type_partition(g: Graph) -> TypePartition:
    """The coarsest partition of V(g) into same-type classes."""
    if g.n < 1:
        raise ValueError("type partition needs at least one vertex")
    classes = []
    for v in range(g.n):
        for cls in classes:
            if _same_type(g, v, cls[0]):
                cls.append(v)
                break
        else:
            classes.append([v])
    # The relation is an equivalence; checking each vertex against a class
    # representative is therefore enough, but verify once to be safe.
    for cls in classes:
        for a in cls:
            for b in cls:
                if a < b and not _same_type(g, a, b):
                    raise AssertionError("same-type relation not transitive")
    kinds = []
    for cls in classes:
        if len(cls) == 1:
            kinds.append(CLIQUE)  # both records coincide for singletons
        elif g.has_edge(cls[0], cls[1]):
            kinds.append(CLIQUE)
        else:
            kinds.append(INDEPENDENT)
    pairs = []
    for a in range(len(classes)):
        for b in range(a + 1, len(classes)):
            if g.has_edge(classes[a][0], classes[b][0]):
                pairs.append((a, b))
    return TypePartition(
        classes=tuple(tuple(cls) for cls in classes),
        class_kind=tuple(kinds),
        type_graph=Graph(len(classes), pairs),
        representative=tuple(cls[0] for cls in classes),
    )


def min_cost_representatives(tp: TypePartition, wg: WeightedGraph):
    """Cheapest vertex of each class, ties broken toward the smaller id."""
    reps = []
    for cls in tp.classes:
        best = cls[0]
        for v in cls[1:]:
            if wg.cost[v] < wg.cost[best]:
                best = v
        reps.append(best)
    return tuple(reps)
