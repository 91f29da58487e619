"""
Rootlization: hang a root r and an attachment s off a mount X.

The new graph adds the edge rs and an edge sx for every x in X; r and s
become terminals. For an extreme mount every minimum join of the result is a
minimum join of the original plus rs, and distances from r are the least
distances from X.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from cathedral.config import SOLVER_CONFIG
from cathedral.distance import distance, min_distance_from_set, root_profile
from cathedral.exceptions import NotExtreme, TheoremViolation
from cathedral.graft import BipartiteGraft, Edge, Graft, Label, VertexSet, edge_id
from cathedral.joins import Join, JoinLike, assert_minimum_join, enumerate_min_joins, require_minimum
from cathedral.structure.extreme import extreme_partition, is_extreme

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootlizedGraft:
    graft: Graft
    mount: VertexSet
    root: Label
    attachment: Label
    join: Join

    @property
    def root_edge(self):
        return edge_id(self.root, self.attachment)


def rootlize(graft: Graft, join: JoinLike, xs: Iterable[Label], root: Label = "r", attachment: Label = "s") -> RootlizedGraft:
    """
    Rootlize a graft by an extreme mount.

    Args:
        graft: The graft
        join: A minimum join of the graft
        xs: The mount, an extreme set
        root: Fresh label for the root
        attachment: Fresh label for the attachment vertex

    Returns:
        RootlizedGraft whose join is F plus the root edge

    Raises:
        LabelCollision: if root or attachment is already a vertex
        NotExtreme: if the mount is not extreme
        TheoremViolation: if the minimum joins or the root distances come out wrong
    """
    f = require_minimum(graft, join).edges
    mount = graft.graph.require_vertices(xs)
    if not is_extreme(graft, f, mount):
        raise NotExtreme(f"Mount {sorted(mount)} is not extreme")

    edges = [Edge(edge_id(root, attachment), root, attachment)]
    edges += [Edge(edge_id(attachment, x), attachment, x) for x in sorted(mount)]
    grown = Graft(graft.graph.extended([root, attachment], edges), graft.terminals | {root, attachment})
    rs = edge_id(root, attachment)
    new_join = assert_minimum_join(grown, f | {rs}, "rootlization-join")

    if len(grown.edges) <= SOLVER_CONFIG["bruteforce_max_edges"]:
        expected = [j | {rs} for j in enumerate_min_joins(graft)]
        found = enumerate_min_joins(grown)
        if sorted(map(sorted, found)) != sorted(map(sorted, expected)):
            raise TheoremViolation("rootlization-joins", "minimum joins are not exactly F + rs", [sorted(j) for j in found])

    if distance(grown, root, attachment) != -1:
        raise TheoremViolation("rootlization-attachment", f"dist({root},{attachment}) != -1", attachment)
    for y in sorted(graft.vertices):
        d, expected = distance(grown, root, y), min_distance_from_set(graft, mount, y)
        if d != expected:
            raise TheoremViolation("rootlization-distance", f"dist({root},{y}) = {d}, least distance from X is {expected}", y)

    logger.debug(f"Rootlized by mount {sorted(mount)}")
    return RootlizedGraft(grown, mount, root, attachment, new_join)


def rootlize_bipartite(
    bg: BipartiteGraft,
    join: JoinLike,
    xs: Iterable[Label],
    root: Label = "r",
    attachment: Label = "s",
) -> Tuple[BipartiteGraft, RootlizedGraft]:
    """Rootlization keeping colour classes: r joins the class of X, s the other one."""
    rooted = rootlize(bg.graft, join, xs, root, attachment)
    mount = rooted.mount
    if not mount or mount <= bg.class_a:
        classes = (bg.class_a | {root}, bg.class_b | {attachment})
    else:
        classes = (bg.class_a | {attachment}, bg.class_b | {root})
    return BipartiteGraft(rooted.graft, *classes), rooted


def check_rootlized_initial_component(
    bg: BipartiteGraft,
    join: JoinLike,
    xs: Iterable[Label],
    root: Label = "r",
    attachment: Label = "s",
    rooted: Optional[Tuple[BipartiteGraft, RootlizedGraft]] = None,
) -> None:
    """
    For a maximal bipartitic extreme mount, the initial component of the root
    is X + r over D_X + s: A(r) = X ∪ {r} and D(r) = D_X ∪ {s}.

    Raises:
        TheoremViolation: if either set differs
    """
    part = extreme_partition(bg, join, xs)
    big, info = rooted or rootlize_bipartite(bg, join, xs, root, attachment)
    profile = root_profile(big.graft, info.join, info.root)
    want_a = part.x | {info.root}
    want_d = part.d_x | {info.attachment}
    if profile.a_set != want_a or profile.d_set != want_d:
        raise TheoremViolation(
            "rootlized-initial-component",
            f"A(r) = {sorted(profile.a_set)}, D(r) = {sorted(profile.d_set)}",
            {"A": sorted(want_a), "D": sorted(want_d)},
        )
