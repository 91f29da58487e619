from cathedral.structure.combic import (
    Skeleton,
    ToothExtraction,
    even_component_joins,
    is_combic,
    skeleton_of,
    tooth_extract,
)
from cathedral.structure.extreme import (
    ExtremePartition,
    extreme_partition,
    grow_maximal_bipartitic_extreme,
    is_extreme,
    is_maximal_bipartitic_extreme,
)
from cathedral.structure.fringe import check_path_to_trivial, fringe_add, fringe_remove
from cathedral.structure.rootlize import (
    RootlizedGraft,
    check_rootlized_initial_component,
    rootlize,
    rootlize_bipartite,
)

__all__ = [
    "ExtremePartition",
    "RootlizedGraft",
    "Skeleton",
    "ToothExtraction",
    "check_path_to_trivial",
    "check_rootlized_initial_component",
    "even_component_joins",
    "extreme_partition",
    "fringe_add",
    "fringe_remove",
    "grow_maximal_bipartitic_extreme",
    "is_combic",
    "is_extreme",
    "is_maximal_bipartitic_extreme",
    "rootlize",
    "rootlize_bipartite",
    "skeleton_of",
    "tooth_extract",
]
