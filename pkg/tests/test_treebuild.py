import pytest

from branchwise.errors import NoAdoptableEndpointError
from branchwise.graph import from_edge_list
from branchwise.pieces import path_piece, spider_piece
from branchwise.reference import verify_spanning_tree
from branchwise.treebuild import (
    ExplorationState,
    branch_vertices,
    build_tree,
    explore,
)


def assert_forest_invariant(state):
    """Parents over explored + pending describe a forest whose roots are the
    pending endpoints plus exactly one main root."""
    inside = state.explored | state.pending_roots
    roots = [v for v in inside if state.parent[v] is None]
    assert len(roots) == len(state.pending_roots) + 1
    for v in inside:
        seen = set()
        u = v
        while u is not None:
            assert u not in seen, "cycle in the forest"
            seen.add(u)
            u = state.parent[u]


def star_inputs():
    g = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    pieces = [
        [spider_piece(0)],
        [path_piece([1]), path_piece([2]), path_piece([3])],
    ]
    x = {(0, 1): 3}
    return g, pieces, x


def test_star_build():
    g, pieces, x = star_inputs()
    result = build_tree(pieces, x, frozenset({0}), 0, is_edge=g.has_edge)
    assert result.root == 0
    assert result.branch == frozenset({0})
    assert result.parent == {0: None, 1: 0, 2: 0, 3: 0}
    assert verify_spanning_tree(g, result).ok


def test_first_wave_marks_the_center():
    g, pieces, x = star_inputs()
    state = ExplorationState(pieces, x, frozenset({0}), 0, is_edge=g.has_edge)
    explore(state, 0)
    assert state.branch == {0}
    assert state.explored == {0, 1, 2, 3}
    assert_forest_invariant(state)


def test_two_vertex_path():
    g = from_edge_list(2, [(0, 1)])
    pieces = [[path_piece([0])], [path_piece([1])]]
    result = build_tree(pieces, {(0, 1): 1}, frozenset(), 0, is_edge=g.has_edge)
    assert result.parent == {0: None, 1: 0}
    assert result.branch == frozenset()


def test_cycle_hamiltonian_path():
    c5 = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    pieces = [[path_piece([v])] for v in range(5)]
    x = {(0, 1): 1, (1, 2): 1, (2, 3): 1, (3, 4): 1}
    result = build_tree(pieces, x, frozenset(), 0, is_edge=c5.has_edge)
    assert result.branch == frozenset()
    assert verify_spanning_tree(c5, result).ok
    degrees = [sum(1 for v, p in result.parent.items() if p == u)
               + (result.parent[u] is not None) for u in range(5)]
    assert max(degrees) <= 2


def test_leaf_when_no_duty():
    # A module whose pieces owe nothing: its endpoints must stay leaves.
    g = from_edge_list(3, [(0, 1), (1, 2)])
    pieces = [[path_piece([0])], [path_piece([1])], [path_piece([2])]]
    x = {(0, 1): 1, (1, 2): 1}
    result = build_tree(pieces, x, frozenset(), 0, is_edge=g.has_edge)
    assert sum(1 for p in result.parent.values() if p == 2) == 0


def reattachment_inputs():
    # Smallest instance that forces the re-rooting step: the first wave
    # explores 0, 1, 3 and dies out, because module 1's remaining duty
    # points at module 3 whose only endpoint must later re-adopt 1's
    # donated piece from the pending set.
    g = from_edge_list(5, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)])
    pieces = [
        [path_piece([0])],
        [path_piece([1]), path_piece([2])],
        [path_piece([3])],
        [path_piece([4])],
    ]
    x = {(0, 1): 1, (1, 2): 1, (1, 3): 1, (3, 1): 1}
    return g, pieces, x


def test_reattachment_first_wave_stalls():
    g, pieces, x = reattachment_inputs()
    state = ExplorationState(pieces, x, frozenset(), 0, is_edge=g.has_edge)
    explore(state, 0)
    assert state.explored == {0, 1, 3}
    assert not state.pending_roots
    assert state.beta[1] == 1  # module 1 still owes one adoption
    assert_forest_invariant(state)


def test_reattachment_completes_the_tree():
    g, pieces, x = reattachment_inputs()
    result = build_tree(pieces, x, frozenset(), 0, is_edge=g.has_edge)
    assert verify_spanning_tree(g, result).ok
    assert result.branch == frozenset()
    # deterministic outcome of the donate-and-readopt sequence
    assert result.parent == {0: None, 2: 0, 4: 2, 1: 4, 3: 1}


def test_reattached_endpoint_is_not_enqueued_twice():
    g, pieces, x = reattachment_inputs()
    state = ExplorationState(pieces, x, frozenset(), 0, is_edge=g.has_edge)
    explore(state, 0)
    # replay the donation by hand, mirroring the construction loop
    donor, fresh = 1, 2
    state.parent[fresh] = state.parent[donor]
    state.parent[donor] = None
    state.explored.remove(donor)
    state.pending_roots.add(donor)
    state.alpha[1] += 1
    assert_forest_invariant(state)
    explore(state, fresh)
    assert donor in state.explored  # re-adopted with its subtree
    assert not state.pending_roots
    assert_forest_invariant(state)


def test_inconsistent_piece_counts_rejected():
    g = from_edge_list(2, [(0, 1)])
    pieces = [[path_piece([0])], [path_piece([1])]]
    with pytest.raises(ValueError):
        build_tree(pieces, {}, frozenset(), 0, is_edge=g.has_edge)


def test_missing_host_edges_abort_loudly():
    pieces = [[path_piece([0])], [path_piece([1])]]
    with pytest.raises(NoAdoptableEndpointError):
        build_tree(pieces, {(0, 1): 1}, frozenset(), 0,
                   is_edge=lambda u, v: False)


def test_branch_root_must_lead_with_spider():
    pieces = [[path_piece([0])], [path_piece([1])]]
    with pytest.raises(ValueError):
        build_tree(pieces, {(0, 1): 1}, frozenset({0}), 0)


def test_branch_count_recomputed():
    parent = {0: None, 1: 0, 2: 0, 3: 0, 4: 1}
    assert branch_vertices(parent) == frozenset({0})
