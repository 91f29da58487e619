from cathedral.graft.core import (
    BipartiteGraft,
    ComponentPartition,
    Edge,
    EdgeId,
    EdgeSet,
    Graft,
    Graph,
    Label,
    VertexSet,
    bipartite_from_graft,
    boundary_and_induced,
    build_bipartite_graft,
    build_graft,
    components_with_parity,
    contract_graft,
    contract_sets,
    contracted_label,
    edge_id,
    odd_vertices,
    sorted_edges,
    symmetric_difference,
)

__all__ = [
    "BipartiteGraft",
    "ComponentPartition",
    "Edge",
    "EdgeId",
    "EdgeSet",
    "Graft",
    "Graph",
    "Label",
    "VertexSet",
    "bipartite_from_graft",
    "boundary_and_induced",
    "build_bipartite_graft",
    "build_graft",
    "components_with_parity",
    "contract_graft",
    "contract_sets",
    "contracted_label",
    "edge_id",
    "odd_vertices",
    "sorted_edges",
    "symmetric_difference",
]
