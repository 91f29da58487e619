"""
Combic sets, skeletons and tooth extraction.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from cathedral.exceptions import GraftError, NotCombic, TheoremViolation
from cathedral.graft import (
    BipartiteGraft,
    EdgeId,
    Graft,
    Label,
    VertexSet,
    components_with_parity,
    contract_graft,
    contracted_label,
)
from cathedral.joins import Join, JoinLike, assert_minimum_join, require_minimum

logger = logging.getLogger(__name__)


def is_combic(graft: Graft, join: JoinLike, xs: Iterable[Label]) -> bool:
    """
    True iff F avoids E[X], every odd component of G - X has exactly one F
    edge in its cut, and every even component has none.

    Raises:
        NotMinimumJoin: if the join is not minimum
    """
    f = require_minimum(graft, join).edges
    members = graft.graph.require_vertices(xs)
    if graft.graph.induced_edges(members) & f:
        return False
    parts = components_with_parity(graft, members)
    for c in parts.odd:
        if len(graft.graph.boundary(c) & f) != 1:
            return False
    for c in parts.even:
        if graft.graph.boundary(c) & f:
            return False
    return True


@dataclass(frozen=True)
class Skeleton:
    """
    The skeleton of a combic set.

    teeth maps each contracted vertex to the odd component it replaces;
    attachments maps it to the id of the one F edge in that component's cut.
    """

    skeleton: BipartiteGraft
    spine: VertexSet
    teeth: Dict[Label, VertexSet]
    attachments: Dict[Label, EdgeId]
    join: Join
    even_components: Tuple[VertexSet, ...] = ()

    @property
    def graft(self) -> Graft:
        return self.skeleton.graft

    def tooth_labels(self) -> List[Label]:
        return sorted(self.teeth)


def _require_combic(graft: Graft, join: JoinLike, members: VertexSet) -> None:
    if not is_combic(graft, join, members):
        raise NotCombic(f"{sorted(members)} is not combic for the given join")


def skeleton_of(graft: Graft, join: JoinLike, xs: Iterable[Label]) -> Skeleton:
    """
    Build the skeleton of a combic set X.

    Edges inside X and the even components of G - X are dropped, then every
    odd component is contracted to a vertex named after its members. The F
    edges in the odd components' cuts form the skeleton join, which is checked
    to be minimum.

    Raises:
        NotCombic: if X is not combic
        TheoremViolation: if the skeleton is not bipartite between X and the
            contracted vertices, or its join is not minimum
    """
    f = require_minimum(graft, join).edges
    members = graft.graph.require_vertices(xs)
    _require_combic(graft, f, members)

    parts = components_with_parity(graft, members)
    even_vertices = frozenset(v for c in parts.even for v in c)
    kept = graft.vertices - even_vertices
    h = Graft(
        graft.graph.induced(kept).delete_edges(graft.graph.induced_edges(members)),
        graft.terminals & kept,
    )
    odd = sorted(parts.odd, key=lambda c: min(c))
    names = [contracted_label(c) for c in odd]
    contracted, _ = contract_graft(h, odd, names)

    cut_edges = frozenset(eid for c in odd for eid in graft.graph.boundary(c))
    skeleton_join = f & cut_edges
    attachments = {name: next(iter(graft.graph.boundary(c) & f)) for name, c in zip(names, odd)}

    try:
        bipartite = BipartiteGraft(contracted, members, frozenset(names))
    except GraftError as e:
        raise TheoremViolation("skeleton-bipartite", str(e), sorted(members))
    assert_minimum_join(contracted, skeleton_join, "skeleton-join-minimum")

    logger.debug(f"Skeleton of {sorted(members)}: {len(names)} teeth, join size {len(skeleton_join)}")
    return Skeleton(
        skeleton=bipartite,
        spine=members,
        teeth=dict(zip(names, odd)),
        attachments=attachments,
        join=Join(skeleton_join),
        even_components=tuple(sorted(parts.even, key=lambda c: min(c))),
    )


@dataclass(frozen=True)
class ToothExtraction:
    component: VertexSet
    graft: Graft
    join: Join
    root: Label
    attachment: EdgeId


def tooth_extract(graft: Graft, join: JoinLike, xs: Iterable[Label], component: Iterable[Label]) -> ToothExtraction:
    """
    Cut an odd component of G - X out as a tooth graft.

    The root is the component's end of the single F edge in its cut; the
    tooth terminals are (T ∩ V(C)) Δ {root}, and F ∩ E(C) is checked to be a
    minimum join of the tooth.

    Raises:
        NotCombic: if X is not combic or C is not an odd component of G - X
    """
    f = require_minimum(graft, join).edges
    members = graft.graph.require_vertices(xs)
    _require_combic(graft, f, members)
    comp = frozenset(component)
    if comp not in components_with_parity(graft, members).odd:
        raise NotCombic(f"{sorted(comp)} is not an odd component of G - X")

    (cut_edge,) = graft.graph.boundary(comp) & f
    e = graft.graph.edge(cut_edge)
    root = e.u if e.u in comp else e.v
    tooth = graft.induced(comp, (graft.terminals & comp) ^ {root})
    tooth_join = assert_minimum_join(tooth, f & graft.graph.induced_edges(comp), "tooth-join-minimum")
    return ToothExtraction(comp, tooth, tooth_join, root, cut_edge)


def even_component_joins(graft: Graft, join: JoinLike, xs: Iterable[Label]) -> List[Tuple[VertexSet, Join]]:
    """F ∩ E(C) for every even component C of G - X, each checked minimum for (C, T ∩ V(C))."""
    f = require_minimum(graft, join).edges
    members = graft.graph.require_vertices(xs)
    _require_combic(graft, f, members)
    out = []
    for c in sorted(components_with_parity(graft, members).even, key=lambda c: min(c)):
        sub = graft.induced(c)
        out.append((c, assert_minimum_join(sub, f & graft.graph.induced_edges(c), "even-component-join-minimum")))
    return out
