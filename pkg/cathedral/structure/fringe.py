"""
Fringe removal and addition around a maximal bipartitic extreme set.

The fringe C_X of a maximal bipartitic extreme set X consists of trivial
vertices hanging off X. Deleting it, or hanging new vertices off X, leaves
the minimum joins, the D_X distances and the maximality of X untouched.
"""

import logging
from typing import Iterable, Optional, Sequence, Tuple

import networkx as nx

from cathedral.config import SOLVER_CONFIG
from cathedral.distance import distance, f_weight, min_distance_from_set
from cathedral.exceptions import CathedralError, IllegalAttachment, NotMaximalExtreme, TheoremViolation, TooLarge
from cathedral.graft import BipartiteGraft, Edge, Graft, Label, VertexSet, edge_id
from cathedral.joins import JoinLike, as_edges, enumerate_min_joins, enumerate_circuits, min_join, require_minimum
from cathedral.reports import CheckReport
from cathedral.structure.extreme import extreme_partition, is_maximal_bipartitic_extreme

logger = logging.getLogger(__name__)


def _require_maximal(bg: BipartiteGraft, join: JoinLike, members: VertexSet) -> None:
    if not is_maximal_bipartitic_extreme(bg, join, members):
        raise NotMaximalExtreme(f"{sorted(members)} is not a maximal bipartitic extreme set")


def _same_minimum_joins(before: Graft, after: Graft, join: JoinLike) -> bool:
    limit = SOLVER_CONFIG["bruteforce_max_edges"]
    if len(before.edges) <= limit and len(after.edges) <= limit:
        return enumerate_min_joins(before) == enumerate_min_joins(after)
    try:
        require_minimum(after, join)
    except CathedralError:
        return False
    return True


def _check_fringe_theorem(before: BipartiteGraft, after: BipartiteGraft, join: JoinLike, members: VertexSet, d_x: VertexSet) -> None:
    if not _same_minimum_joins(before.graft, after.graft, join):
        raise TheoremViolation("fringe-joins", "minimum joins changed across the fringe operation")
    for y in sorted(d_x):
        old = min_distance_from_set(before.graft, members, y)
        new = min_distance_from_set(after.graft, members, y)
        if old != new:
            raise TheoremViolation("fringe-distances", f"min distance from X to {y} went from {old} to {new}", y)
    if not is_maximal_bipartitic_extreme(after, join, members):
        raise TheoremViolation("fringe-maximal", "X is no longer maximal bipartitic extreme", sorted(members))


def fringe_remove(bg: BipartiteGraft, xs: Iterable[Label], join: Optional[JoinLike] = None) -> BipartiteGraft:
    """
    Delete the fringe C_X.

    Args:
        bg: Bipartite graft
        xs: A maximal bipartitic extreme set
        join: A minimum join; computed when omitted

    Returns:
        The bipartite graft G - C_X with terminals T minus C_X

    Raises:
        NotMaximalExtreme: if X is not maximal bipartitic extreme
    """
    f = as_edges(join) if join is not None else min_join(bg.graft).edges
    members = bg.graph.require_vertices(xs)
    _require_maximal(bg, f, members)
    part = extreme_partition(bg, f, members)
    if not part.c_x:
        return bg
    trimmed = bg.with_graft(bg.graft.delete_vertices(part.c_x))
    _check_fringe_theorem(bg, trimmed, f, members, part.d_x)
    logger.debug(f"Removed fringe {sorted(part.c_x)}")
    return trimmed


def fringe_add(
    bg: BipartiteGraft,
    xs: Iterable[Label],
    new_vertices: Sequence[Label],
    new_edges: Iterable[Tuple[Label, Label]],
    join: Optional[JoinLike] = None,
) -> BipartiteGraft:
    """
    Hang new non-terminal vertices off X.

    New vertices join the colour class opposite X. Every new edge must join a
    new vertex to a vertex of X.

    Raises:
        IllegalAttachment: if an edge is not between a new vertex and X
        LabelCollision: if a new label is already in use
        NotMaximalExtreme: if X is not maximal bipartitic extreme
    """
    f = as_edges(join) if join is not None else min_join(bg.graft).edges
    members = bg.graph.require_vertices(xs)
    _require_maximal(bg, f, members)
    fresh = frozenset(new_vertices)
    if not fresh:
        return bg

    edges = []
    for u, v in new_edges:
        if not ((u in fresh and v in members) or (v in fresh and u in members)):
            raise IllegalAttachment(f"Edge {u}-{v} does not join a new vertex to X")
        edges.append(Edge(edge_id(u, v), u, v))

    part = extreme_partition(bg, f, members)
    graph = bg.graph.extended(fresh, edges)
    grown = Graft(graph, bg.terminals)
    if members and members <= bg.class_a:
        extended = BipartiteGraft(grown, bg.class_a, bg.class_b | fresh)
    else:
        extended = BipartiteGraft(grown, bg.class_a | fresh, bg.class_b)

    _check_fringe_theorem(bg, extended, f, members, part.d_x)
    for x in sorted(members):
        for y in sorted(part.c_x | fresh):
            d = distance(grown, x, y)
            if d is not None and d <= 0:
                raise TheoremViolation("fringe-positive", f"dist({x},{y}) = {d} is not positive", [x, y])
    logger.debug(f"Added fringe {sorted(fresh)}")
    return extended


def check_path_to_trivial(
    graft: Graft,
    join: JoinLike,
    xs: Iterable[Label],
    ys: Iterable[Label],
    zs: Iterable[Label],
    extended: Graft,
) -> CheckReport:
    """
    Weights of paths and circuits that touch a trivial region.

    Setting: X extreme, Y and Z split V(G) - X with no Y-Z edge, F avoids
    E[Z] and the cut of Z, and the extended graft only adds vertices hung
    off X. With Z' = Z plus the added vertices, every circuit or X-to-(X ∪ Z')
    path through Z' weighs more than 0, and every Y-to-X path through Z'
    weighs more than the least distance from X to its Y end.

    Raises:
        TooLarge: when the extended graft is beyond the path oracle
    """
    limit = SOLVER_CONFIG["path_oracle_max_n"]
    if len(extended.vertices) > limit:
        raise TooLarge(f"Path enumeration is limited to {limit} vertices")
    report = CheckReport(name="path-to-trivial")
    f = as_edges(join)
    members = frozenset(xs)
    z_hat = frozenset(zs) | (extended.vertices - graft.vertices)
    nxg = extended.graph.nx_graph

    def touches(path) -> bool:
        return any(u in z_hat or v in z_hat for u, v, _ in path)

    def weight(path) -> int:
        return sum(-1 if key in f else 1 for _, _, key in path)

    for x in sorted(members):
        for target in sorted((members | z_hat) - {x}):
            if target in members and target < x:
                continue
            for path in nx.all_simple_edge_paths(nxg, x, target):
                if touches(path) and weight(path) <= 0:
                    report.fail("trivial-path-positive", f"{x}-{target} path of weight {weight(path)}", [k for _, _, k in path])
        for y in sorted(frozenset(ys)):
            bound = min_distance_from_set(graft, members, y)
            if bound is None:
                continue
            for path in nx.all_simple_edge_paths(nxg, y, x):
                if touches(path) and weight(path) <= bound:
                    report.fail("trivial-path-detour", f"{y}-{x} path of weight {weight(path)} vs {bound}", [k for _, _, k in path])

    for circuit in enumerate_circuits(extended.graph):
        vertices = {v for eid in circuit for v in extended.graph.edge(eid).ends}
        if vertices & z_hat and f_weight(extended, f, circuit) <= 0:
            report.fail("trivial-circuit-positive", "circuit through Z' of nonpositive weight", sorted(circuit))
    return report
