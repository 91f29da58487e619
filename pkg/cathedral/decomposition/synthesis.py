"""
Synthesis: glue primal tooth grafts into the teeth of a skeleton comb.

Every tooth vertex v of the comb is replaced by a bipartite graft G_v that is
primal at r_v. An edge a-v of the comb becomes an edge a-x for a chosen x in
A(r_v) of G_v, with id (min(a, x), max(a, x)). Terminals inside G_v become
T_v Δ {r_v}.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional

from cathedral.config import SOLVER_CONFIG
from cathedral.decomposition.cathedral import CathedralDecomposition, decompose
from cathedral.decomposition.combs import is_comb
from cathedral.distance import is_primal, root_profile, tower_shift
from cathedral.exceptions import (
    BadAttachment,
    CathedralError,
    ContractionMismatch,
    LabelCollision,
    NotComb,
    TerminalRuleViolation,
    TheoremViolation,
    ToothNotPrimal,
)
from cathedral.graft import (
    BipartiteGraft,
    Edge,
    EdgeId,
    Graft,
    Graph,
    Label,
    VertexSet,
    contract_graft,
    contracted_label,
    edge_id,
)
from cathedral.joins import (
    Join,
    JoinLike,
    as_edges,
    assert_minimum_join,
    enumerate_min_joins,
    is_join,
    join_size,
    min_join,
    reference_join_size,
    require_minimum,
)
from cathedral.reports import CheckReport
from cathedral.structure import extreme_partition, fringe_remove

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ToothSpec:
    graft: BipartiteGraft
    root: Label

    @property
    def terminals(self) -> VertexSet:
        return self.graft.terminals

    @property
    def a_class(self) -> VertexSet:
        return self.graft.class_of(self.root)

    @property
    def b_class(self) -> VertexSet:
        return self.graft.opposite_class(self.root)


def bare_tooth(label: Label) -> ToothSpec:
    """A single-vertex tooth with no terminals, rooted at itself."""
    return ToothSpec(BipartiteGraft(Graft(Graph(frozenset([label]))), frozenset([label]), frozenset()), label)


@dataclass(frozen=True)
class SynthesisSpec:
    """
    A skeleton comb (spine in class A, teeth in class B), tooth grafts keyed by
    tooth vertex, and the landing vertex of every skeleton edge keyed by its
    id. Missing teeth are bare; missing landings default to the tooth root.
    """

    skeleton: BipartiteGraft
    teeth: Mapping[Label, ToothSpec] = field(default_factory=dict)
    attachments: Mapping[EdgeId, Label] = field(default_factory=dict)

    @property
    def spine(self) -> VertexSet:
        return self.skeleton.class_a

    @property
    def tooth_labels(self) -> List[Label]:
        return sorted(self.skeleton.class_b)

    def tooth(self, v: Label) -> ToothSpec:
        return self.teeth.get(v) or bare_tooth(v)


@dataclass(frozen=True)
class Synthesis:
    spec: SynthesisSpec
    graft: BipartiteGraft
    edge_map: Dict[EdgeId, EdgeId]
    landing: Dict[EdgeId, Label]
    tooth_of: Dict[EdgeId, Label]

    def tooth_vertices(self, v: Label) -> VertexSet:
        return self.spec.tooth(v).graft.vertices


def build_synthesis(spec: SynthesisSpec) -> Synthesis:
    """
    Validate a synthesis spec and build the synthesis.

    Raises:
        NotComb: if the skeleton fails the comb test
        ToothNotPrimal: if a tooth graft is not primal at its root
        LabelCollision: if tooth labels clash with each other or the spine
        BadAttachment: if a skeleton edge lands outside its tooth's A-set
        TerminalRuleViolation: if a tooth's terminal parity disagrees with the skeleton
        ContractionMismatch: if contracting the teeth does not give back the skeleton
    """
    skel = spec.skeleton
    if not is_comb(skel):
        raise NotComb("Skeleton is not a comb with spine class A")
    spine = spec.spine
    teeth = {v: spec.tooth(v) for v in spec.tooth_labels}

    used = set(spine)
    a_sets: Dict[Label, VertexSet] = {}
    for v, tooth in teeth.items():
        vs = tooth.graft.vertices
        if tooth.root not in vs or not is_primal(tooth.graft.graft, tooth.root):
            raise ToothNotPrimal(f"Tooth graft for {v} is not primal at {tooth.root}")
        clash = (vs & used) | (vs & (skel.class_b - {v}))
        if clash:
            raise LabelCollision(f"Tooth {v} reuses labels {sorted(clash)}")
        used |= vs
        a_sets[v] = root_profile(tooth.graft.graft, min_join(tooth.graft.graft), tooth.root).a_set

    unknown = set(spec.attachments) - skel.graph.edge_ids
    if unknown:
        raise BadAttachment(f"Attachments name edges outside the skeleton: {sorted(unknown)}")

    edge_map: Dict[EdgeId, EdgeId] = {}
    landing: Dict[EdgeId, Label] = {}
    tooth_of: Dict[EdgeId, Label] = {}
    edges: List[Edge] = [e for tooth in teeth.values() for e in tooth.graft.graph.edges]
    taken = {e.id for e in edges}
    for e in skel.graph.edges:
        a, v = (e.u, e.v) if e.u in spine else (e.v, e.u)
        x = spec.attachments.get(e.id, teeth[v].root)
        if x not in a_sets[v]:
            raise BadAttachment(f"Edge {e.id} lands on {x}, outside A({teeth[v].root}) of tooth {v}")
        new_id = edge_id(a, x)
        if new_id in taken:
            raise BadAttachment(f"Two edges would both become {new_id}")
        taken.add(new_id)
        edge_map[e.id], landing[e.id], tooth_of[e.id] = new_id, x, v
        edges.append(Edge(new_id, a, x))

    terminals = set(skel.terminals & spine)
    for v, tooth in teeth.items():
        inside = tooth.terminals ^ {tooth.root}
        if (len(inside) % 2 == 1) != (v in skel.terminals):
            raise TerminalRuleViolation(f"Tooth {v} contributes {len(inside)} terminals against the skeleton")
        terminals |= inside

    graph = Graph(frozenset(used), tuple(edges))
    try:
        graft = Graft(graph, frozenset(terminals))
    except CathedralError as e:
        raise TerminalRuleViolation(str(e))

    labels = list(teeth)
    contracted, _ = contract_graft(graft, [teeth[v].graft.vertices for v in labels], labels)
    if contracted.vertices != skel.vertices or len(contracted.edges) != len(skel.graph.edges):
        raise ContractionMismatch("Contracting the teeth does not give back the skeleton")
    for old, new in edge_map.items():
        if contracted.graph.edge(new).ends != skel.graph.edge(old).ends:
            raise ContractionMismatch(f"Edge {old} does not contract back onto its skeleton ends")
    if contracted.terminals != skel.terminals:
        raise TerminalRuleViolation("Contracted terminals differ from the skeleton's")

    class_a = spine | frozenset(u for t in teeth.values() for u in t.b_class)
    class_b = frozenset(u for t in teeth.values() for u in t.a_class)
    result = BipartiteGraft(graft, class_a, class_b)
    logger.debug(f"Synthesized {len(graft.vertices)} vertices from {len(teeth)} teeth")
    return Synthesis(spec, result, edge_map, landing, tooth_of)


def synthesize(spec: SynthesisSpec) -> BipartiteGraft:
    return build_synthesis(spec).graft


def _shifted_terminals(tooth: ToothSpec, landing: Label) -> VertexSet:
    return tooth.terminals if landing == tooth.root else tooth.terminals ^ {tooth.root, landing}


def _landing_of(syn: Synthesis, skeleton_join: VertexSet, v: Label) -> Label:
    at_v = [eid for eid in syn.spec.skeleton.graph.incident(v) if eid in skeleton_join]
    if len(at_v) != 1:
        raise TheoremViolation("synthesis-tooth-edge", f"tooth {v} meets {len(at_v)} skeleton join edges", v)
    return syn.landing[at_v[0]]


def synthesis_min_join(
    spec: SynthesisSpec,
    skeleton_join: Optional[JoinLike] = None,
    tooth_joins: Optional[Mapping[Label, JoinLike]] = None,
) -> Join:
    """
    Assemble a minimum join of a synthesis from a skeleton join and tooth joins.

    Each tooth joins are taken for T_v, or for T_v Δ {r_v, r_v'} when the
    skeleton join enters the tooth at r_v' instead of its root. Also checks
    that the spine is maximal bipartitic extreme in the synthesis with an
    empty fringe.

    Raises:
        NotMinimumJoin: if a supplied join is not minimum for its graft
        TheoremViolation: if the assembled join is not minimum or the spine check fails
    """
    syn = build_synthesis(spec)
    skel = spec.skeleton
    f = require_minimum(skel.graft, skeleton_join).edges if skeleton_join is not None else min_join(skel.graft).edges
    supplied = tooth_joins or {}

    edges = {syn.edge_map[eid] for eid in f}
    for v in spec.tooth_labels:
        tooth = spec.tooth(v)
        shifted = Graft(tooth.graft.graph, _shifted_terminals(tooth, _landing_of(syn, f, v)))
        fv = require_minimum(shifted, supplied[v]).edges if v in supplied else min_join(shifted).edges
        edges |= fv

    result = assert_minimum_join(syn.graft.graft, edges, "synthesis-join-minimum")
    part = extreme_partition(syn.graft, result, spec.spine)
    if not part.maximal or part.c_x:
        raise TheoremViolation("synthesis-spine-maximal", "spine is not maximal bipartitic extreme with empty fringe", sorted(spec.spine))
    return result


def check_join_factorization(spec: SynthesisSpec, joins: Optional[Iterable[JoinLike]] = None) -> CheckReport:
    """
    Every minimum join of a synthesis splits into a minimum skeleton join and
    minimum tooth joins for the shifted tooth terminals; and every minimum
    skeleton join extends to a minimum join of the synthesis.

    Raises:
        TooLarge: if joins must be enumerated beyond the oracle bound
    """
    report = CheckReport(name="join-factorization")
    syn = build_synthesis(spec)
    skel = spec.skeleton
    candidates = [as_edges(j) for j in joins] if joins is not None else enumerate_min_joins(syn.graft.graft)
    inverse = {new: old for old, new in syn.edge_map.items()}
    skeleton_nu = reference_join_size(skel.graft)

    for j in candidates:
        part = frozenset(inverse[e] for e in j if e in inverse)
        if not report.check(
            is_join(skel.graft, part) and len(part) == skeleton_nu,
            "factor-skeleton",
            "cut edges of a minimum join are not a minimum skeleton join",
            sorted(j),
        ):
            continue
        for v in spec.tooth_labels:
            tooth = spec.tooth(v)
            try:
                landing = _landing_of(syn, part, v)
            except TheoremViolation as e:
                report.fail(e.prop, e.detail, sorted(j))
                continue
            inside = j & syn.graft.graph.induced_edges(syn.tooth_vertices(v))
            shifted = Graft(tooth.graft.graph, _shifted_terminals(tooth, landing))
            report.check(
                is_join(shifted, inside) and len(inside) == join_size(shifted.graph, shifted.terminals),
                "factor-tooth",
                f"restriction to tooth {v} is not a minimum join for the shifted terminals",
                sorted(j),
            )

    if len(skel.graph.edges) <= SOLVER_CONFIG["bruteforce_max_edges"]:
        for k in enumerate_min_joins(skel.graft):
            try:
                big = synthesis_min_join(spec, k)
            except CathedralError as e:
                report.fail("factor-extend", str(e), sorted(k))
                continue
            report.check(
                {syn.edge_map[e] for e in k} <= big.edges,
                "factor-extend",
                "skeleton join does not extend",
                sorted(k),
            )
    return report


def spec_from_decomposition(decomposition: CathedralDecomposition) -> SynthesisSpec:
    """The synthesis spec a decomposition describes: its skeleton, teeth and original landings."""
    skeleton = decomposition.skeleton.skeleton
    spine = decomposition.spine
    attachments = {}
    for e in skeleton.graph.edges:
        a = e.u if e.u in spine else e.v
        attachments[e.id] = e.id[1] if e.id[0] == a else e.id[0]
    teeth = {t.label: ToothSpec(t.graft, t.root) for t in decomposition.teeth}
    return SynthesisSpec(skeleton, teeth, attachments)


def _same_classes(first: BipartiteGraft, second: BipartiteGraft) -> bool:
    return {first.class_a, first.class_b} == {second.class_a, second.class_b}


def check_round_trip(bg: BipartiteGraft, join: JoinLike, xs: Iterable[Label]) -> CheckReport:
    """Fringe removal, decomposition and re-synthesis give back the trimmed graft label for label."""
    report = CheckReport(name="round-trip")
    members = frozenset(xs)
    trimmed = fringe_remove(bg, members, join)
    decomposition = decompose(trimmed, join, members)
    rebuilt = synthesize(spec_from_decomposition(decomposition))
    report.check(rebuilt.graft == trimmed.graft, "round-trip-graft", "re-synthesis differs from the fringe-removed graft", sorted(members))
    report.check(_same_classes(rebuilt, trimmed), "round-trip-classes", "colour classes differ after re-synthesis", sorted(members))
    return report


def match_synthesis(spec: SynthesisSpec, decomposition: CathedralDecomposition) -> CheckReport:
    """
    Compare a decomposition of a synthesis with the synthesis spec it came from.

    The skeleton must match after renaming contracted vertices back to the
    tooth labels and edge ids back to skeleton ids. A tooth whose root moved
    from r_v to r_v' must equal the tower-shifted spec tooth, with the same
    A and D sets.
    """
    report = CheckReport(name="synthesis-match")
    syn = build_synthesis(spec)
    skel = spec.skeleton
    report.check(decomposition.spine == spec.spine, "match-spine", "decomposition spine differs", sorted(decomposition.spine))

    rename = {contracted_label(spec.tooth(v).graft.vertices): v for v in spec.tooth_labels}
    inverse = {new: old for old, new in syn.edge_map.items()}
    got = decomposition.skeleton.graft
    got_edges = {(inverse.get(e.id), frozenset(rename.get(x, x) for x in e.ends)) for e in got.edges}
    want_edges = {(e.id, frozenset(e.ends)) for e in skel.graph.edges}
    report.check(got_edges == want_edges, "match-skeleton-edges", "skeleton edges differ", sorted(map(str, got_edges ^ want_edges)))
    report.check(
        frozenset(rename.get(x, x) for x in got.terminals) == skel.terminals,
        "match-skeleton-terminals",
        "skeleton terminals differ",
    )

    by_component = {t.component: t for t in decomposition.teeth}
    for v in spec.tooth_labels:
        want = spec.tooth(v)
        got_tooth = by_component.get(want.graft.vertices)
        if not report.check(got_tooth is not None, "match-tooth", f"no decomposed tooth for {v}", v):
            continue
        base = want.graft.graft
        if got_tooth.root == want.root:
            report.check(got_tooth.graft.graft == base, "match-tooth-graft", f"tooth {v} differs", v)
            continue
        try:
            shifted, _ = tower_shift(base, min_join(base), want.root, got_tooth.root)
        except CathedralError as e:
            report.fail("match-tower-shift", str(e), v)
            continue
        report.check(shifted == got_tooth.graft.graft, "match-tooth-shifted", f"tooth {v} differs after the shift", v)
        before = root_profile(base, min_join(base), want.root)
        after = root_profile(got_tooth.graft.graft, got_tooth.join, got_tooth.root)
        report.check(
            before.a_set == after.a_set and before.d_set == after.d_set,
            "match-tooth-profile",
            f"A/D of tooth {v} changed with the root",
            v,
        )
    return report
