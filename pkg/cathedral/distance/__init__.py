from cathedral.distance.distances import (
    DistanceTable,
    Path,
    brute_force_distance,
    distance,
    f_distance_from,
    f_shortest_path,
    f_weight,
    min_distance_from_set,
)
from cathedral.distance.profile import RootProfile, is_primal, join_switch, profile_summary, root_profile, tower_shift

__all__ = [
    "DistanceTable",
    "Path",
    "RootProfile",
    "brute_force_distance",
    "distance",
    "f_distance_from",
    "f_shortest_path",
    "f_weight",
    "is_primal",
    "join_switch",
    "min_distance_from_set",
    "profile_summary",
    "root_profile",
    "tower_shift",
]
