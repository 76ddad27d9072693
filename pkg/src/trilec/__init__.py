"""Computational checks for 6-list-edge-colouring triangulations of maximum degree 5."""

from .graph import (
    SimpleGraph,
    build_graph,
    canonical_code,
    contains_k33_subdivision,
    degree_profile,
    is_isomorphic,
    subgraph_embedding,
)
from .plane import (
    PlaneTriangulation,
    canonical_triangulation_code,
    collapse_degree4_vertex,
    delete_degree3_vertex,
    faces,
    flip_edge,
    from_rotation_system,
)
from .factor_sign import (
    SignedSumResult,
    edge_crossing,
    enumerate_one_factorizations,
    factor_sign,
    factorization_sign,
    signed_factorization_sum,
)
from .edge_color import (
    chromatic_index,
    exhaustive_choosability,
    extend_over_removed_vertex,
    find_list_edge_coloring,
    residual_lists,
    sample_list_assignments,
)
from .enumeration import (
    DegreeTriple,
    TriangulationSet,
    degree_sequence_cases,
    enumerate_triangulations,
    filter_by_profile,
    verify_uniqueness_cases,
)
from .catalog import CatalogEntry, catalog_graph, regularize, verify_catalog_claims

__version__ = "0.1.0"
