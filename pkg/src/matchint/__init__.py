"""Exact matching polynomials and matching-integral graphs."""

from .families import (
    FamilyKind,
    FamilyReport,
    FamilySpec,
    build_F7,
    build_Hk,
    build_Hk_prime,
    expected_mu,
    verify_family,
)
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    delete_vertices,
    is_connected,
    new_graph,
    parse_graph6,
    to_graph6,
    vertex_connectivity_at_least,
)
from .matching import (
    MatchVector,
    count_matchings,
    is_matching_integral,
    matching_polynomial,
    matching_polynomial_recurrence,
)
from .polynomial import IntegralityReport, IntPolynomial, extract_integer_zeros
from .search import SearchConfig, SearchHit, filter_stream, generate_small_graphs, is_candidate

__version__ = "0.1.0"
