"""pathfactors: verification toolkit for short-path factor conditions.

Checks sufficient conditions for a connected graph to admit a spanning
forest whose components are paths on 3, 4, or 5 vertices: the exact
isolated-vertex condition, a size (edge count) threshold, and a spectral
radius threshold, together with an exact audit of the quadratic claim
catalog behind the thresholds.
"""

from .graphs import (
    Graph,
    GraphError,
    InvalidOrder,
    EdgeListError,
    Graph6Error,
    ByteOutOfRange,
    TruncatedPayload,
    TrailingData,
    NonzeroPadding,
    TooLarge,
    adjacency_matrix,
    complement,
    complete,
    connected_components,
    cycle,
    disjoint_union,
    empty_graph,
    emit_graph6,
    from_edges,
    induced_subgraph,
    is_connected,
    is_edge_subgraph,
    join,
    parse_edge_list,
    parse_graph6,
    path,
    permute,
    star,
    without_edge,
)
from .spectral import (
    NegativeRadicand,
    NoConvergence,
    NotConnected,
    NotEquitable,
    QuotientMatrix,
    SpectralError,
    SpectralResult,
    hong_bound,
    largest_root,
    monotonicity_check,
    quotient_from_cells,
    rho_max_component,
    spectral_radius,
)
from .factors import (
    FactorError,
    SearchTimeout,
    TooLargeForExact,
    TooLargeForExhaustive,
    WitnessReport,
    check_factor,
    find_factor,
    find_witness,
    isolated_count,
    verify_factor,
)
from .extremal import (
    DeltaDivisibleBy3,
    ExtremalError,
    ExtremalParams,
    OrderTooSmall,
    ParityViolation,
    Thresholds,
    build_extremal,
    edge_count_closed_form,
    extremal_params,
    extremal_quotient,
    n_min_size,
    n_min_spectral,
    rho_closed_form,
    thresholds,
)
from .audit import (
    CLAIMS,
    AuditEntry,
    AuditError,
    AuditRun,
    ContrapositiveSample,
    QuadraticClaim,
    RemarkReport,
    contrapositive_sample,
    remark_audit,
    run_audit,
    verify_difference_identity,
    verify_endpoint_value,
    verify_factorization,
    verify_minimum_location,
    verify_spectral_chain,
)
from .enumeration import all_graphs, connected_graphs
from .random_graphs import random_connected_graph, random_graph

__version__ = "0.1.0"
