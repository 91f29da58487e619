"""
Extreme and bipartitic extreme sets, and the D_X / C_X split they induce.

A set is extreme when its members are pairwise at nonnegative distance.
Pairs lying in different components have no distance and never spoil it.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from cathedral.distance import distance, min_distance_from_set
from cathedral.exceptions import NotExtreme, TheoremViolation
from cathedral.graft import BipartiteGraft, Graft, Label, VertexSet
from cathedral.joins import JoinLike, factor_components, require_minimum

logger = logging.getLogger(__name__)


def _compatible(graft: Graft, v: Label, xs: Iterable[Label]) -> bool:
    for x in xs:
        d = distance(graft, x, v)
        if d is not None and d < 0:
            return False
    return True


def is_extreme(graft: Graft, join: JoinLike, xs: Iterable[Label]) -> bool:
    """
    True iff dist(x, y) >= 0 for all x, y in X.

    Raises:
        NotMinimumJoin: if the join is not minimum
    """
    require_minimum(graft, join)
    members = sorted(graft.graph.require_vertices(xs))
    for x, y in combinations(members, 2):
        d = distance(graft, x, y)
        if d is not None and d < 0:
            return False
    return True


def _single_class(bg: BipartiteGraft, xs: VertexSet) -> Optional[VertexSet]:
    if xs <= bg.class_a:
        return bg.class_a
    if xs <= bg.class_b:
        return bg.class_b
    return None


def is_maximal_bipartitic_extreme(bg: BipartiteGraft, join: JoinLike, xs: Iterable[Label]) -> bool:
    """Extreme, inside one colour class, and no vertex of that class can be added."""
    members = bg.graph.require_vertices(xs)
    if not members:
        return not bg.vertices
    side = _single_class(bg, members)
    if side is None or not is_extreme(bg.graft, join, members):
        return False
    return not any(_compatible(bg.graft, v, members) for v in sorted(side - members))


def grow_maximal_bipartitic_extreme(bg: BipartiteGraft, join: JoinLike, seed: Label) -> VertexSet:
    """
    Grow an inclusion-maximal bipartitic extreme set from a seed.

    Candidates of the seed's colour class are tried in sorted order and kept
    when they stay at nonnegative distance from everything kept so far.

    Args:
        bg: Bipartite graft
        join: A minimum join
        seed: Starting vertex

    Returns:
        The grown set, certified maximal
    """
    require_minimum(bg.graft, join)
    side = bg.class_of(seed)
    grown = [seed]
    for v in sorted(side - {seed}):
        if _compatible(bg.graft, v, grown):
            grown.append(v)
    result = frozenset(grown)
    if not is_maximal_bipartitic_extreme(bg, join, result):
        raise TheoremViolation("greedy-maximal", f"grown set {sorted(result)} is not maximal", sorted(result))
    logger.debug(f"Grew maximal bipartitic extreme set of size {len(result)} from {seed}")
    return result


@dataclass(frozen=True)
class ExtremePartition:
    x: VertexSet
    d_x: VertexSet
    c_x: VertexSet
    maximal: bool = False


def extreme_partition(bg: BipartiteGraft, join: JoinLike, xs: Iterable[Label]) -> ExtremePartition:
    """
    Split V(G) into X, D_X and C_X.

    D_X holds the vertices outside X at negative distance from some member of
    X. When X is maximal, no edge joins D_X and C_X and every vertex of C_X is
    a trivial vertex of the opposite class; both facts are checked.

    Raises:
        NotExtreme: if X is not a bipartitic extreme set
        TheoremViolation: if a maximal X breaks one of the checked facts
    """
    members = bg.graph.require_vertices(xs)
    if _single_class(bg, members) is None or not is_extreme(bg.graft, join, members):
        raise NotExtreme(f"{sorted(members)} is not a bipartitic extreme set")

    d_x = set()
    for y in sorted(bg.vertices - members):
        d = min_distance_from_set(bg.graft, members, y)
        if d is not None and d < 0:
            d_x.add(y)
    d_x = frozenset(d_x)
    c_x = bg.vertices - members - d_x
    maximal = is_maximal_bipartitic_extreme(bg, join, members)

    if maximal:
        crossing = bg.graph.edges_between(d_x, c_x)
        if crossing:
            raise TheoremViolation("fringe-no-edge", "edges join D_X and C_X", sorted(crossing))
        if c_x:
            trivial = factor_components(bg.graft).trivial_vertices
            opposite = bg.opposite_class(next(iter(members))) if members else bg.class_b
            bad = sorted(v for v in c_x if v not in trivial or v not in opposite)
            if bad:
                raise TheoremViolation("fringe-trivial", f"fringe vertices {bad} are not trivial in the opposite class", bad)
    return ExtremePartition(members, d_x, c_x, maximal)
