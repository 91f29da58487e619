"""
Minimum joins, Sebő distances and the cathedral decomposition of bipartite grafts.
"""

from cathedral.decomposition import decompose, primal_decompose, synthesize, verify_sebo
from cathedral.distance import distance, f_distance_from, is_primal, root_profile
from cathedral.exceptions import CathedralError, TheoremViolation
from cathedral.graft import BipartiteGraft, Graft, Graph, build_bipartite_graft, build_graft
from cathedral.joins import Join, min_join

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraft",
    "CathedralError",
    "Graft",
    "Graph",
    "Join",
    "TheoremViolation",
    "build_bipartite_graft",
    "build_graft",
    "decompose",
    "distance",
    "f_distance_from",
    "is_primal",
    "min_join",
    "primal_decompose",
    "root_profile",
    "synthesize",
    "verify_sebo",
]
