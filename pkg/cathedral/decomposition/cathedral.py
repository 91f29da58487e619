"""
Decomposition of a bipartite graft around a maximal bipartitic extreme set,
and the distance-theorem checker it rests on.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from pydantic import Field

from cathedral.decomposition.combs import is_comb
from cathedral.distance import is_primal, root_profile
from cathedral.exceptions import CathedralError, CombicViolation, NotMaximalExtreme, TheoremViolation
from cathedral.graft import BipartiteGraft, EdgeId, Label, VertexSet, components_with_parity
from cathedral.joins import Join, JoinLike, factor_components, require_minimum
from cathedral.reports import CheckReport
from cathedral.structure import (
    ExtremePartition,
    Skeleton,
    even_component_joins,
    extreme_partition,
    is_combic,
    is_maximal_bipartitic_extreme,
    skeleton_of,
    tooth_extract,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tooth:
    """One tooth of a decomposition: the primal graft cut out of an odd component."""

    label: Label
    component: VertexSet
    graft: BipartiteGraft
    root: Label
    attachment: EdgeId
    join: Join


@dataclass(frozen=True)
class CathedralDecomposition:
    graft: BipartiteGraft
    join: Join
    spine: VertexSet
    skeleton: Skeleton
    teeth: Tuple[Tooth, ...]
    fringe: VertexSet
    partition: ExtremePartition

    def tooth(self, label: Label) -> Tooth:
        for t in self.teeth:
            if t.label == label:
                return t
        raise KeyError(label)


def _components_of(bg: BipartiteGraft, vertices: VertexSet) -> set:
    return set(bg.graph.induced(vertices).components())


def decompose(bg: BipartiteGraft, join: JoinLike, xs) -> CathedralDecomposition:
    """
    Decompose around a maximal bipartitic extreme set X.

    X is combic; its skeleton is a comb; every odd component of G - X is a
    tooth primal at the end of its F cut edge, with N(X) inside the tooth's
    A-set; the odd components are exactly the components of G[D_X]; and
    every even component is a trivial factor-component, together forming
    the fringe C_X.

    Raises:
        NotMaximalExtreme: if X is not maximal bipartitic extreme
        CombicViolation: if X turns out not to be combic
        TheoremViolation: if any of the structural facts above fails
    """
    f = require_minimum(bg.graft, join)
    members = bg.graph.require_vertices(xs)
    if not is_maximal_bipartitic_extreme(bg, f, members):
        raise NotMaximalExtreme(f"{sorted(members)} is not a maximal bipartitic extreme set")
    if not is_combic(bg.graft, f, members):
        raise CombicViolation(f"maximal bipartitic extreme set {sorted(members)} is not combic")

    part = extreme_partition(bg, f, members)
    skeleton = skeleton_of(bg.graft, f, members)
    parts = components_with_parity(bg.graft, members)

    if set(parts.odd) != _components_of(bg, part.d_x):
        raise TheoremViolation("decompose-odd-components", "odd components of G - X differ from the components of G[D_X]")

    neighbours = bg.graph.neighborhood(members)
    teeth: List[Tooth] = []
    for label in skeleton.tooth_labels():
        comp = skeleton.teeth[label]
        cut = tooth_extract(bg.graft, f, members, comp)
        tooth_bg = bg.with_graft(cut.graft)
        if not is_primal(cut.graft, cut.root):
            raise TheoremViolation("decompose-tooth-primal", f"tooth {label} is not primal at {cut.root}", sorted(comp))
        a_set = root_profile(cut.graft, cut.join, cut.root).a_set
        if not (neighbours & comp) <= a_set:
            raise TheoremViolation("decompose-tooth-neighbours", f"N(X) meets tooth {label} outside its A-set", sorted((neighbours & comp) - a_set))
        teeth.append(Tooth(label, comp, tooth_bg, cut.root, cut.attachment, cut.join))

    even_components = list(parts.even)
    even_component_joins(bg.graft, f, members)
    if even_components:
        trivial = set(factor_components(bg.graft).trivial)
        odd_ones = [sorted(c) for c in even_components if c not in trivial]
        if odd_ones:
            raise TheoremViolation("decompose-even-trivial", "even components that are not trivial factor-components", odd_ones)
    fringe = frozenset(v for c in even_components for v in c)
    if fringe != part.c_x:
        raise TheoremViolation("decompose-fringe", "even components differ from C_X", sorted(fringe ^ part.c_x))

    logger.info(f"Decomposed around {sorted(members)}: {len(teeth)} teeth, fringe of {len(fringe)}")
    return CathedralDecomposition(bg, f, members, skeleton, tuple(teeth), fringe, part)


class SeboReport(CheckReport):
    """Outcome of the distance-theorem checks at one root."""

    root: str = ""
    a_set: List[str] = Field(default_factory=list)
    d_set: List[str] = Field(default_factory=list)
    c_set: List[str] = Field(default_factory=list)
    minimum_level: int = 0
    tooth_levels: Dict[str, int] = Field(default_factory=dict)


def verify_sebo(bg: BipartiteGraft, join: JoinLike, root: Label) -> SeboReport:
    """
    Check the distance theorem at a root.

    A(r) is combic; the odd components of G - A(r) are the components of
    G[D(r)] and the even ones those of G[C(r)]; the skeleton of A(r) is a comb
    primal at r; every tooth is primal at the end of its F cut edge with its
    deepest level one above the deepest level of D(r) (never deeper than one
    above the global minimum); and N(A(r)) meets each tooth inside its A-set.

    Raises:
        NotMinimumJoin: if the join is not minimum
    """
    f = require_minimum(bg.graft, join)
    profile = root_profile(bg.graft, f, root)
    a = profile.a_set
    report = SeboReport(
        name="sebo",
        root=root,
        a_set=sorted(a),
        d_set=sorted(profile.d_set),
        c_set=sorted(profile.c_set),
        minimum_level=profile.minimum_level,
    )
    if not report.check(is_combic(bg.graft, f, a), "sebo-combic", "A(r) is not combic", sorted(a)):
        return report

    parts = components_with_parity(bg.graft, a)
    report.check(set(parts.odd) == _components_of(bg, profile.d_set), "sebo-odd-components", "odd components differ from conn(G[D(r)])")
    report.check(set(parts.even) == _components_of(bg, profile.c_set), "sebo-even-components", "even components differ from conn(G[C(r)])")

    try:
        skeleton = skeleton_of(bg.graft, f, a)
    except CathedralError as e:
        report.fail("sebo-skeleton", str(e), sorted(a))
        return report
    sk = skeleton.skeleton
    report.check(is_comb(sk, a), "sebo-skeleton-comb", "skeleton of A(r) is not a comb", sorted(a))
    report.check(is_primal(sk.graft, root), "sebo-skeleton-primal", f"skeleton is not primal at {root}", root)

    neighbours = bg.graph.neighborhood(a)
    for label in skeleton.tooth_labels():
        comp = skeleton.teeth[label]
        try:
            cut = tooth_extract(bg.graft, f, a, comp)
        except CathedralError as e:
            report.fail("sebo-tooth", str(e), sorted(comp))
            continue
        if not report.check(is_primal(cut.graft, cut.root), "sebo-tooth-primal", f"tooth {label} not primal at {cut.root}", sorted(comp)):
            continue
        tooth_profile = root_profile(cut.graft, cut.join, cut.root)
        report.tooth_levels[label] = tooth_profile.minimum_level
        report.check(
            tooth_profile.minimum_level >= profile.minimum_level + 1,
            "sebo-tooth-level",
            f"tooth {label} reaches level {tooth_profile.minimum_level} below {profile.minimum_level + 1}",
            label,
        )
        outside = (neighbours & comp) - tooth_profile.a_set
        report.check(not outside, "sebo-tooth-neighbours", f"N(A) meets tooth {label} outside its A-set", sorted(outside))

    if profile.d_set and report.tooth_levels:
        deepest = min(profile.table[v] for v in profile.d_set)
        report.check(
            min(report.tooth_levels.values()) == deepest + 1,
            "sebo-tooth-level-attained",
            f"no tooth reaches level {deepest + 1}",
            report.tooth_levels,
        )
    return report
