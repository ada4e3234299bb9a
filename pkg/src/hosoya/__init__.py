"""Exact distance polynomials and Wiener-type indices for connected graphs.

The package computes the Hosoya polynomial, its edge variant over the line
graph, and the Wiener, edge-Wiener, hyper-Wiener and edge-hyper-Wiener
indices, all in exact integer arithmetic. For trees it exposes the shift
identity that derives every edge quantity from the vertex ones, and for
regular dendrimers the closed forms for the edge quantities.
"""

from .dendrimers import (
    DendrimerParams,
    dendrimer_edge_hosoya,
    dendrimer_edge_hyper_wiener,
    dendrimer_edge_wiener,
    generate_dendrimer,
    wiener_polynomial,
)
from .errors import (
    ConstantTermMismatchError,
    DisconnectedError,
    DuplicateEdgeError,
    EdgeListFormatError,
    EmptyEdgeSetError,
    HosoyaError,
    NegativeResultError,
    NonIntegralResultError,
    NonzeroConstantTermError,
    NotATreeError,
    OddSecondDerivativeError,
    SelfLoopError,
)
from .graphs import (
    DistanceDistribution,
    Graph,
    bfs_distances,
    distance_distribution,
    edge_distance_distribution,
    format_edge_list,
    graph_from_edge_list,
    is_tree,
    line_graph,
    parse_edge_list,
    single_vertex_graph,
)
from .indices import (
    IndexReport,
    edge_hosoya_polynomial,
    edge_hyper_wiener,
    edge_wiener,
    hosoya_polynomial,
    hyper_wiener,
    hyper_wiener_from_polynomial,
    index_identity_discrepancies,
    index_report,
    wiener,
)
from .polynomials import Polynomial, format_coefficients, format_pretty
from .trees import (
    IdentityFailure,
    Tree,
    VerificationReport,
    edge_hosoya_from_hosoya,
    edge_hyper_wiener_from_hyper,
    edge_wiener_from_wiener,
    random_tree,
    verify_distance_shift,
    verify_identities,
)

__all__ = [
    "ConstantTermMismatchError",
    "DendrimerParams",
    "DisconnectedError",
    "DistanceDistribution",
    "DuplicateEdgeError",
    "EdgeListFormatError",
    "EmptyEdgeSetError",
    "Graph",
    "HosoyaError",
    "IdentityFailure",
    "IndexReport",
    "NegativeResultError",
    "NonIntegralResultError",
    "NonzeroConstantTermError",
    "NotATreeError",
    "OddSecondDerivativeError",
    "Polynomial",
    "SelfLoopError",
    "Tree",
    "VerificationReport",
    "bfs_distances",
    "dendrimer_edge_hosoya",
    "dendrimer_edge_hyper_wiener",
    "dendrimer_edge_wiener",
    "distance_distribution",
    "edge_distance_distribution",
    "edge_hosoya_from_hosoya",
    "edge_hosoya_polynomial",
    "edge_hyper_wiener",
    "edge_hyper_wiener_from_hyper",
    "edge_wiener",
    "edge_wiener_from_wiener",
    "format_coefficients",
    "format_edge_list",
    "format_pretty",
    "generate_dendrimer",
    "graph_from_edge_list",
    "hosoya_polynomial",
    "hyper_wiener",
    "hyper_wiener_from_polynomial",
    "index_identity_discrepancies",
    "index_report",
    "is_tree",
    "line_graph",
    "parse_edge_list",
    "random_tree",
    "single_vertex_graph",
    "verify_distance_shift",
    "verify_identities",
    "wiener",
    "wiener_polynomial",
]
