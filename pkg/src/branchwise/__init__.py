"""Exact solvers for spanning trees with few or cheap branch vertices,
minimum path partitions, and path-spider covers, built on modular
decomposition and integer load feasibility, with brute-force oracles and
certificate verifiers included."""

from .coverdp import compute_ham, compute_record, compute_spi
from .decomposition import ParseNode, decompose, evaluate, maximal_modules, width
from .errors import (
    BranchwiseError,
    DisconnectedGraphError,
    InconsistentBoundsError,
    MalformedTreeError,
    NoAdoptableEndpointError,
    NoCoverError,
    OutOfRangeError,
    ParseError,
    SearchBudgetExceededError,
    SelfLoopError,
    StuckExplorationError,
    TooFewVerticesError,
    TooLargeError,
    UnreachableError,
)
from .graph import (
    Graph,
    WeightedGraph,
    augment_join,
    from_edge_list,
    induced_subgraph,
    is_connected,
)
from .loads import (
    DEFAULT_SEARCH_BUDGET,
    IlpInstance,
    LoadAssignment,
    build_cbv_instance,
    build_mbv_instance,
    check_assignment,
    extract_flow,
    solve_feasibility,
)
from .pieces import CoverRecord, PathPiece, leaf_record, path_piece, spider_piece, trim_cover
from .reference import (
    Diagnostics,
    OracleReport,
    oracle_b,
    oracle_ham,
    oracle_spi,
    oracle_w,
    verify_cover,
    verify_spanning_tree,
)
from .solver import MbvAnswer, solve_mbv, solve_pp, solve_psc
from .treebuild import ExplorationState, SpanningTreeResult, build_tree, explore
from .typeclasses import TypePartition, min_cost_representatives, type_partition
from .weighted import CbvAnswer, solve_cbv

__version__ = "0.1.0"
