"""Fiedler-value toolkit: graph families, a Jacobi eigensolver and separator certificates."""
from .graph import (
    Graph,
    components_after_removal,
    cross_edge_count,
    from_edge_list,
    high_degree_set,
    join,
    laplacian,
    vertex_connectivity,
)
from .spectra import BACKEND, Spectrum, eigenvalues_sym, fiedler_value, fiedler_vector, join_spectrum

__all__ = [
    "BACKEND",
    "Graph",
    "Spectrum",
    "components_after_removal",
    "cross_edge_count",
    "eigenvalues_sym",
    "fiedler_value",
    "fiedler_vector",
    "from_edge_list",
    "high_degree_set",
    "join",
    "join_spectrum",
    "laplacian",
    "vertex_connectivity",
]
