"""Sombor-type index computations and extremal ordering of chemical graphs."""

from .graph import (
    DegreeDistribution,
    EdgeTypeVector,
    MolGraph,
    canonical_code,
    cyclomatic_number,
    degree_distribution,
    edge_type_vector,
    load_graph,
    parse_graph,
    write_graph,
)
from .indices import (
    IndexKind,
    comparison_indices,
    index_from_edge_vector,
    index_value,
    reduced_sombor,
    sombor,
)

__all__ = [
    "DegreeDistribution",
    "EdgeTypeVector",
    "IndexKind",
    "MolGraph",
    "canonical_code",
    "comparison_indices",
    "cyclomatic_number",
    "degree_distribution",
    "edge_type_vector",
    "index_from_edge_vector",
    "index_value",
    "load_graph",
    "parse_graph",
    "reduced_sombor",
    "sombor",
    "write_graph",
]

__version__ = "0.1.0"
