"""egrtools: edge-girth-regular graphs from finite geometries.

An egr(n, k, g, lambda) graph is k-regular of order n and girth g with
every edge on exactly lambda girth cycles.  This package constructs the
known geometric families (biaffine planes, truncated generalized
quadrangles, ovoid/spread deletions, tangent-plane pencil graphs),
verifies signatures by exact cycle counting, and evaluates the spectral
and combinatorial lower bounds that certify several of the families
extremal.
"""

__version__ = "0.1.0"

from .galois import GF, Field, is_prime
from .geometry import (
    IncidenceGeometry,
    normalize_point,
    ovoid_search,
    pg2_geometry,
    pg_points,
    singer_pencil,
    spread_search,
    symplectic_gq,
    tangent_plane,
)
from .graph_core import (
    EgrSignature,
    Graph,
    Graph6Error,
    NotEdgeGirthRegular,
    bipartition,
    count_cycles_through_vertex,
    count_girth_cycles_through_edge,
    distance_layers,
    girth,
    graph6_decode,
    graph6_encode,
    verify_egr,
)
from .constructions import (
    build_biaffine,
    build_gq_truncation,
    build_ovoid_spread,
    build_pencil_graph,
    complete_bipartite,
    cycle_graph,
    heawood,
    hoffman_singleton,
    levi_graph,
    named_graph,
    petersen,
    tutte_coxeter,
)
from .spectral import (
    Spectrum,
    catalan,
    certify_tight_spectrum,
    eigenvalues,
    tree_walk_count,
    tree_walk_polynomial,
    walk_moments,
)
from .bounds import (
    BoundReport,
    DegenerateBound,
    ExtremalityVerdict,
    bound_report,
    certify_extremal,
    dfjr_bound,
    egr4_bound,
    even_girth_bound,
    moore_bound,
    odd_girth_bound,
    odd_girth_bound_g5,
    vertex_cycle_cap,
)

__all__ = [
    "GF",
    "Field",
    "is_prime",
    "IncidenceGeometry",
    "normalize_point",
    "pg_points",
    "pg2_geometry",
    "symplectic_gq",
    "singer_pencil",
    "tangent_plane",
    "ovoid_search",
    "spread_search",
    "Graph",
    "EgrSignature",
    "NotEdgeGirthRegular",
    "Graph6Error",
    "girth",
    "bipartition",
    "distance_layers",
    "count_girth_cycles_through_edge",
    "count_cycles_through_vertex",
    "verify_egr",
    "graph6_encode",
    "graph6_decode",
    "levi_graph",
    "build_biaffine",
    "build_gq_truncation",
    "build_ovoid_spread",
    "build_pencil_graph",
    "named_graph",
    "petersen",
    "hoffman_singleton",
    "heawood",
    "tutte_coxeter",
    "complete_bipartite",
    "cycle_graph",
    "walk_moments",
    "tree_walk_count",
    "tree_walk_polynomial",
    "catalan",
    "eigenvalues",
    "Spectrum",
    "certify_tight_spectrum",
    "moore_bound",
    "dfjr_bound",
    "egr4_bound",
    "even_girth_bound",
    "odd_girth_bound",
    "odd_girth_bound_g5",
    "vertex_cycle_cap",
    "bound_report",
    "BoundReport",
    "certify_extremal",
    "ExtremalityVerdict",
    "DegenerateBound",
]
