"""Outerplanar (convex) crossing numbers of complete multipartite graphs."""

__version__ = "0.1.0"

from .bounds import (
    BalancedSplit,
    BoundBreakdown,
    c2_lower_bound,
    max_edges_balanced,
    per_edge_bound,
    side_maxima_sum,
    total_lower_bound,
)
from .construct import CertificationReport, certify, even_drawing
from .drawing import (
    Chord,
    ConvexDrawing,
    canonical_form,
    chords_cross,
    count_crossings,
    count_crossings_by_quadruples,
)
from .errors import PreconditionError
from .formulas import (
    FormulaInput,
    floor_sum,
    nu1_balanced,
    nu1_bipartite,
    nu1_special,
    nu1_theorem1,
    nu1_theorem2,
)
from .multipartite import (
    PartitionSpec,
    Vertex,
    edge_count_two_block,
    edges,
    total_edges_balanced,
)
from .search import SearchResult, exact_min, heuristic_min

__all__ = [
    "BalancedSplit", "BoundBreakdown", "CertificationReport", "Chord", "ConvexDrawing",
    "FormulaInput", "PartitionSpec", "PreconditionError", "SearchResult", "Vertex",
    "c2_lower_bound", "canonical_form", "certify", "chords_cross", "count_crossings",
    "count_crossings_by_quadruples", "edge_count_two_block", "edges", "even_drawing",
    "exact_min", "floor_sum", "heuristic_min", "max_edges_balanced", "nu1_balanced",
    "nu1_bipartite", "nu1_special", "nu1_theorem1", "nu1_theorem2", "per_edge_bound",
    "side_maxima_sum", "total_edges_balanced", "total_lower_bound",
]
