"""
Root profiles, primality and the join-switching lemmas.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple

from cathedral.distance.distances import DistanceTable, distance, f_distance_from, f_shortest_path
from cathedral.exceptions import NotInA, NotPrimal, TheoremViolation
from cathedral.graft import Graft, Label, VertexSet
from cathedral.joins import Join, JoinLike, is_join, minimum_join_size, require_minimum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootProfile:
    """
    The A/D/C tripartition seen from a root.

    level0 holds the vertices at distance 0, lay0 those at negative distance.
    The initial component is the component of the root in G[level0 ∪ lay0];
    A is its distance-0 part, D the rest of it, and C everything outside.
    """

    root: Label
    table: DistanceTable
    level0: VertexSet
    lay0: VertexSet
    initial_component: VertexSet
    a_set: VertexSet
    d_set: VertexSet
    c_set: VertexSet

    @property
    def primal(self) -> bool:
        return not self.c_set and (self.level0 | self.lay0) == self.initial_component

    @property
    def minimum_level(self) -> int:
        return self.table.minimum


def root_profile(graft: Graft, join: JoinLike, root: Label) -> RootProfile:
    """
    Compute A(r), D(r), C(r) from a distance table.

    Raises:
        NotMinimumJoin: if the join is not minimum
        TheoremViolation: if primality and an empty C(r) disagree
    """
    table = f_distance_from(graft, join, root)
    level0 = table.level(0)
    lay0 = table.below(0)
    sub = graft.graph.induced(level0 | lay0)
    initial = sub.component_of(root)
    a_set = initial & level0
    profile = RootProfile(
        root=root,
        table=table,
        level0=level0,
        lay0=lay0,
        initial_component=initial,
        a_set=a_set,
        d_set=initial - a_set,
        c_set=graft.vertices - initial,
    )
    everything_close = (level0 | lay0) == graft.vertices
    if is_primal(graft, root) != (not profile.c_set and everything_close):
        raise TheoremViolation("primal-iff-initial", f"primality at {root} disagrees with C(r) = {sorted(profile.c_set)}", root)
    return profile


def is_primal(graft: Graft, root: Label) -> bool:
    """True iff every vertex is reachable from the root at distance at most 0."""
    graft.graph.require_vertices([root])
    for x in sorted(graft.vertices):
        d = distance(graft, root, x)
        if d is None or d > 0:
            return False
    return True


def join_switch(graft: Graft, join: JoinLike, x: Label, y: Label) -> Tuple[Graft, Join]:
    """
    Move terminals along an F-shortest path.

    Returns the graft with T Δ {x, y} and the join F Δ E(P), which is minimum
    there. Distances from y in the new graft are distances from x in the old
    one shifted by -w_F(P).

    Raises:
        SameVertex, Disconnected: as f_shortest_path
        TheoremViolation: if the switched join is not minimum or a distance shifts wrongly
    """
    f = require_minimum(graft, join).edges
    path = f_shortest_path(graft, f, x, y)
    switched = graft.toggled(x, y)
    new_join = Join(f ^ path.edge_set)
    if not is_join(switched, new_join) or new_join.size != minimum_join_size(switched):
        raise TheoremViolation("switch-minimum", f"switching {x},{y} did not give a minimum join", sorted(new_join.edges))
    for z in sorted(graft.graph.component_of(x)):
        before, after = distance(graft, x, z), distance(switched, y, z)
        if after != before - path.weight:
            raise TheoremViolation(
                "switch-distance-shift",
                f"dist'({y},{z}) = {after} but dist({x},{z}) - w(P) = {before - path.weight}",
                z,
            )
    logger.debug(f"Switched terminals along {x}-{y} (weight {path.weight})")
    return switched, new_join


def tower_shift(graft: Graft, join: JoinLike, root: Label, new_root: Label) -> Tuple[Graft, Join]:
    """
    Re-root a primal graft at another vertex of A(r).

    Raises:
        NotPrimal: if the graft is not primal at root
        NotInA: if new_root is the root itself or outside A(root)
        TheoremViolation: if primality or the A/D sets are not preserved
    """
    profile = root_profile(graft, join, root)
    if not profile.primal:
        raise NotPrimal(f"Graft is not primal with respect to {root}")
    if new_root == root or new_root not in profile.a_set:
        raise NotInA(f"{new_root} is not a vertex of A({root}) other than the root")

    shifted, new_join = join_switch(graft, join, root, new_root)
    after = root_profile(shifted, new_join, new_root)
    if not after.primal:
        raise TheoremViolation("tower-shift-primal", f"shifted graft is not primal at {new_root}", new_root)
    if after.a_set != profile.a_set or after.d_set != profile.d_set:
        raise TheoremViolation(
            "tower-shift-profile",
            f"A/D changed under the shift {root} -> {new_root}",
            {"A": sorted(after.a_set), "D": sorted(after.d_set)},
        )
    return shifted, new_join


def profile_summary(graft: Graft, join: JoinLike, root: Label) -> Dict[str, Any]:
    """Plain-data view of a root profile: one [vertex, distance, part] row per vertex."""
    profile = root_profile(graft, join, root)

    def part(v: Label) -> str:
        if v in profile.a_set:
            return "A"
        return "D" if v in profile.d_set else "C"

    return {
        "root": root,
        "primal": profile.primal,
        "minimum_level": profile.minimum_level,
        "A": sorted(profile.a_set),
        "D": sorted(profile.d_set),
        "C": sorted(profile.c_set),
        "rows": [[v, profile.table.get(v), part(v)] for v in sorted(graft.vertices)],
    }
