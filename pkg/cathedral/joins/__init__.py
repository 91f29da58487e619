from cathedral.joins.matching import min_weight_perfect_matching
from cathedral.joins.oracle import (
    JoinSpace,
    bruteforce_min_joins,
    circuit_masks,
    enumerate_circuits,
    enumerate_min_joins,
    join_space,
)
from cathedral.joins.solver import (
    FactorComponents,
    Join,
    JoinLike,
    allowed_edges,
    as_edges,
    assert_minimum_join,
    check_negative_circuits,
    factor_components,
    is_allowed,
    is_join,
    join_size,
    min_join,
    min_join_bruteforce,
    minimum_join_size,
    reference_join_size,
    require_minimum,
)

__all__ = [
    "FactorComponents",
    "Join",
    "JoinLike",
    "JoinSpace",
    "allowed_edges",
    "as_edges",
    "assert_minimum_join",
    "bruteforce_min_joins",
    "check_negative_circuits",
    "circuit_masks",
    "enumerate_circuits",
    "enumerate_min_joins",
    "factor_components",
    "is_allowed",
    "is_join",
    "join_size",
    "join_space",
    "min_join",
    "min_join_bruteforce",
    "min_weight_perfect_matching",
    "minimum_join_size",
    "reference_join_size",
    "require_minimum",
]
