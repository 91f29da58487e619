"""
Property checkers run by the verification harness, one per suite.

Each checker takes one instance and returns a CheckReport. A checker never
raises for a broken property; library errors raised along the way are turned
into violations by the harness.
"""

import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Dict, Optional, Union

import networkx as nx

from cathedral.config import SOLVER_CONFIG, VERIFY_CONFIG
from cathedral.decomposition import (
    SynthesisSpec,
    build_synthesis,
    check_join_factorization,
    check_round_trip,
    comb_primality_checks,
    decompose,
    factor_connected_comb_violations,
    is_comb,
    match_synthesis,
    primal_decompose,
    quasicomb_violations,
    resynthesize,
    synthesis_min_join,
    verify_sebo,
    walk_certificate,
)
from cathedral.distance import (
    brute_force_distance,
    distance,
    f_shortest_path,
    is_primal,
    join_switch,
    root_profile,
    tower_shift,
)
from cathedral.exceptions import CathedralError, TooLarge
from cathedral.graft import BipartiteGraft, Graft, bipartite_from_graft
from cathedral.joins import check_negative_circuits, is_join, min_join, min_join_bruteforce
from cathedral.reports import CheckReport
from cathedral.structure import (
    check_path_to_trivial,
    check_rootlized_initial_component,
    extreme_partition,
    fringe_add,
    fringe_remove,
    grow_maximal_bipartitic_extreme,
    is_combic,
    is_extreme,
    is_maximal_bipartitic_extreme,
    rootlize,
    rootlize_bipartite,
    skeleton_of,
    tooth_extract,
)

logger = logging.getLogger(__name__)

Instance = Union[Graft, BipartiteGraft, SynthesisSpec]


def _plain(instance: Union[Graft, BipartiteGraft]) -> Graft:
    return instance.graft if isinstance(instance, BipartiteGraft) else instance


def _guarded(report: CheckReport, prop: str, action: Callable[[], object]) -> object:
    """Run one step; TooLarge skips it, any other library error becomes a violation."""
    try:
        return action()
    except TooLarge:
        return None
    except CathedralError as e:
        report.fail(getattr(e, "prop", prop), str(e), getattr(e, "witness", None))
        return None


def _maximal_sets(bg: BipartiteGraft, join) -> list:
    sets = {grow_maximal_bipartitic_extreme(bg, join, v) for v in sorted(bg.vertices)}
    return sorted(sets, key=sorted)


def check_joins(instance: Union[Graft, BipartiteGraft]) -> CheckReport:
    graft = _plain(instance)
    report = CheckReport(name="joins")
    f = min_join(graft)
    report.check(is_join(graft, f), "solver-join", "solver output is not a join", f.sorted_edges())
    if len(graft.edges) <= SOLVER_CONFIG["bruteforce_max_edges"]:
        best = min_join_bruteforce(graft)
        report.check(f.size == best.size, "solver-oracle-size", f"solver found {f.size}, oracle {best.size}", f.sorted_edges())
    if len(graft.vertices) <= SOLVER_CONFIG["circuit_oracle_max_n"]:
        circuits = _guarded(report, "circuits", lambda: check_negative_circuits(graft, f))
        if circuits is not None:
            report.absorb(circuits)
    return report


def _colour_classes(instance: Union[Graft, BipartiteGraft]) -> Optional[BipartiteGraft]:
    if isinstance(instance, BipartiteGraft):
        return instance
    if nx.is_bipartite(instance.graph.nx_graph):
        return bipartite_from_graft(instance)
    return None


def check_distances(instance: Union[Graft, BipartiteGraft]) -> CheckReport:
    graft = _plain(instance)
    report = CheckReport(name="distances")
    f = min_join(graft)
    dist = {}
    for x, y in permutations(sorted(graft.vertices), 2):
        if y in graft.graph.component_of(x):
            dist[x, y] = distance(graft, x, y)

    for (x, y), d in dist.items():
        if x < y:
            report.check(d == dist[y, x], "distance-symmetry", f"dist({x},{y}) = {d}, dist({y},{x}) = {dist[y, x]}", [x, y])

    coloured = _colour_classes(instance)
    if coloured is not None:
        for (x, y), d in dist.items():
            odd = y not in coloured.class_of(x)
            report.check(d % 2 == int(odd), "distance-parity", f"dist({x},{y}) = {d} against the colour classes", [x, y])

    if len(graft.vertices) <= SOLVER_CONFIG["path_oracle_max_n"]:
        for x, y in combinations(sorted(graft.vertices), 2):
            got, want = dist.get((x, y)), brute_force_distance(graft, f, x, y)
            report.check(got == want, "distance-oracle", f"dist({x},{y}) = {got}, path oracle {want}", [x, y])

        # Two edge-disjoint shortest paths form a trail; a trail weighs at least its x-z path.
        paths = {pair: _guarded(report, "shortest-path", lambda: f_shortest_path(graft, f, *pair)) for pair in dist}
        for (x, y), p in paths.items():
            for z in sorted(graft.vertices - {x, y}):
                q = paths.get((y, z))
                if p is None or q is None or p.edge_set & q.edge_set:
                    continue
                report.check(
                    dist[x, z] <= p.weight + q.weight,
                    "distance-triangle",
                    f"dist({x},{z}) = {dist[x, z]} exceeds {p.weight} + {q.weight} through {y}",
                    [x, y, z],
                )

    for x, y in combinations(sorted(graft.vertices), 2):
        if (x, y) in dist:
            _guarded(report, "join-switch", lambda: join_switch(graft, f, x, y))
    for r in sorted(graft.vertices):
        if not is_primal(graft, r):
            continue
        for r2 in sorted(root_profile(graft, f, r).a_set - {r}):
            _guarded(report, "tower-shift", lambda: tower_shift(graft, f, r, r2))
    return report


def check_extreme(bg: BipartiteGraft) -> CheckReport:
    report = CheckReport(name="extreme")
    f = min_join(bg.graft)
    for x in _maximal_sets(bg, f):
        report.check(is_extreme(bg.graft, f, x), "grown-extreme", "grown set is not extreme", sorted(x))
        report.check(is_maximal_bipartitic_extreme(bg, f, x), "grown-maximal", "grown set is not maximal", sorted(x))
        _guarded(report, "extreme-partition", lambda: extreme_partition(bg, f, x))
    return report


def check_combic(bg: BipartiteGraft) -> CheckReport:
    report = CheckReport(name="combic")
    f = min_join(bg.graft)
    for x in _maximal_sets(bg, f):
        if not report.check(is_combic(bg.graft, f, x), "maximal-combic", "maximal bipartitic extreme set is not combic", sorted(x)):
            continue
        skeleton = _guarded(report, "skeleton", lambda: skeleton_of(bg.graft, f, x))
        if skeleton is None:
            continue
        report.absorb(quasicomb_violations(skeleton.skeleton, x))
        for label in skeleton.tooth_labels():
            _guarded(report, "tooth-extract", lambda: tooth_extract(bg.graft, f, x, skeleton.teeth[label]))
    return report


def _path_to_trivial(bg: BipartiteGraft, join, xs, extended: BipartiteGraft) -> CheckReport:
    part = extreme_partition(bg, join, xs)
    return check_path_to_trivial(bg.graft, join, part.x, part.d_x, part.c_x, extended.graft)


def check_fringe(bg: BipartiteGraft) -> CheckReport:
    report = CheckReport(name="fringe")
    f = min_join(bg.graft)
    fresh = "fringe.new"
    for x in _maximal_sets(bg, f):
        _guarded(report, "fringe-remove", lambda: fringe_remove(bg, x, f))
        if fresh in bg.vertices or not x:
            continue
        extended = _guarded(report, "fringe-add", lambda: fringe_add(bg, x, [fresh], [(fresh, min(x))], f))
        if extended is None or len(extended.vertices) > SOLVER_CONFIG["path_oracle_max_n"]:
            continue
        trivial = _guarded(report, "path-to-trivial", lambda: _path_to_trivial(bg, f, x, extended))
        if trivial is not None:
            report.absorb(trivial)
    return report


def _extreme_mounts(bg: BipartiteGraft, join, maximal: list) -> list:
    """Extreme single vertices, plus extreme pairs and triples on small grafts, minus the maximal mounts."""
    if len(bg.vertices) > VERIFY_CONFIG["exhaustive_max_n"]:
        sizes = (1,)
    else:
        sizes = (1, 2, 3)
    seen = set(maximal)
    mounts = []
    for size in sizes:
        for xs in combinations(sorted(bg.vertices), size):
            mount = frozenset(xs)
            if mount not in seen and is_extreme(bg.graft, join, mount):
                mounts.append(mount)
    return mounts


def check_rootlize(bg: BipartiteGraft) -> CheckReport:
    report = CheckReport(name="rootlize")
    f = min_join(bg.graft)
    root, attachment = "rootlize.r", "rootlize.s"
    maximal = _maximal_sets(bg, f)
    for x in maximal:
        rooted = _guarded(report, "rootlize", lambda: rootlize_bipartite(bg, f, x, root, attachment))
        if rooted is not None:
            _guarded(report, "rootlized-initial-component", lambda: check_rootlized_initial_component(bg, f, x, root, attachment, rooted))
    for x in _extreme_mounts(bg, f, maximal):
        _guarded(report, "rootlize-extreme-mount", lambda: rootlize(bg.graft, f, x, root, attachment))
    return report


def check_decompose(bg: BipartiteGraft) -> CheckReport:
    report = CheckReport(name="decompose")
    f = min_join(bg.graft)
    for x in _maximal_sets(bg, f):
        if _guarded(report, "decompose", lambda: decompose(bg, f, x)) is None:
            continue
        round_trip = _guarded(report, "round-trip", lambda: check_round_trip(bg, f, x))
        if round_trip is not None:
            report.absorb(round_trip)
    for r in sorted(bg.vertices):
        sebo = _guarded(report, "sebo", lambda: verify_sebo(bg, f, r))
        if sebo is not None:
            report.absorb(sebo)
    return report


def check_synthesis(spec: SynthesisSpec) -> CheckReport:
    report = CheckReport(name="synthesis")
    syn = _guarded(report, "synthesize", lambda: build_synthesis(spec))
    if syn is None:
        return report
    join = _guarded(report, "synthesis-join", lambda: synthesis_min_join(spec))
    if join is None:
        return report
    factorization = _guarded(report, "factorization", lambda: check_join_factorization(spec))
    if factorization is not None:
        report.absorb(factorization)
    decomposition = _guarded(report, "decompose", lambda: decompose(syn.graft, join, spec.spine))
    if decomposition is not None:
        report.absorb(match_synthesis(spec, decomposition))
    return report


def check_primal(bg: BipartiteGraft) -> CheckReport:
    report = CheckReport(name="primal")
    for r in sorted(bg.vertices):
        if not is_primal(bg.graft, r):
            continue
        certificate = _guarded(report, "primal-decompose", lambda: primal_decompose(bg, r))
        if certificate is None:
            continue
        rebuilt = _guarded(report, "resynthesize", lambda: resynthesize(certificate))
        if rebuilt is not None:
            report.check(rebuilt.graft == bg.graft, "resynthesis-exact", f"re-synthesis at {r} differs", r)
        for level, root in walk_certificate(certificate):
            sebo = _guarded(report, "sebo", lambda: verify_sebo(level, min_join(level.graft), root))
            if sebo is not None:
                report.absorb(sebo)
        comb = certificate.comb
        if is_comb(comb) and r in comb.class_a:
            claims = _guarded(report, "comb-claims", lambda: comb_primality_checks(comb, r))
            if claims is not None:
                report.absorb(claims)
    return report


def check_appendix(bg: BipartiteGraft) -> CheckReport:
    report = CheckReport(name="appendix")
    f = min_join(bg.graft)
    for x in _maximal_sets(bg, f):
        skeleton = _guarded(report, "skeleton", lambda: skeleton_of(bg.graft, f, x))
        if skeleton is None:
            continue
        comb = skeleton.skeleton
        report.absorb(quasicomb_violations(comb, x))
        if is_comb(comb, x):
            report.absorb(factor_connected_comb_violations(comb, x))
    return report


@dataclass(frozen=True)
class Suite:
    name: str
    check: Callable[[Instance], CheckReport]
    bipartite: bool = True
    synthesized: bool = False


SUITES: Dict[str, Suite] = {
    "joins": Suite("joins", check_joins, bipartite=False),
    "distances": Suite("distances", check_distances, bipartite=False),
    "extreme": Suite("extreme", check_extreme),
    "combic": Suite("combic", check_combic),
    "fringe": Suite("fringe", check_fringe),
    "rootlize": Suite("rootlize", check_rootlize),
    "decompose": Suite("decompose", check_decompose),
    "synthesis": Suite("synthesis", check_synthesis, synthesized=True),
    "primal": Suite("primal", check_primal),
    "appendix": Suite("appendix", check_appendix),
}
