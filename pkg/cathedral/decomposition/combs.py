"""
Combs, quasicomb bounds and the primal-comb claims.

A bipartite graft is treated as a comb with spine class A and tooth class B
when A is extreme and every tooth sits at distance exactly -1 from the
nearest spine vertex.
"""

import logging
from itertools import combinations, product
from typing import List, Optional

from pydantic import Field

from cathedral.distance import distance, is_primal, min_distance_from_set
from cathedral.exceptions import CathedralError, GraftError, NotComb
from cathedral.graft import BipartiteGraft, Label, VertexSet, contract_graft, contracted_label
from cathedral.joins import JoinLike, factor_components, min_join, require_minimum
from cathedral.reports import CheckReport

logger = logging.getLogger(__name__)


def _spine(bg: BipartiteGraft, spine: Optional[VertexSet]) -> VertexSet:
    return bg.class_a if spine is None else frozenset(spine)


def is_comb(bg: BipartiteGraft, spine: Optional[VertexSet] = None) -> bool:
    """Operational comb test with the given spine class (class A by default)."""
    a = _spine(bg, spine)
    if a not in (bg.class_a, bg.class_b):
        return False
    b = bg.vertices - a
    for x, y in combinations(sorted(a), 2):
        d = distance(bg.graft, x, y)
        if d is not None and d < 0:
            return False
    return all(min_distance_from_set(bg.graft, a, t) == -1 for t in sorted(b))


def quasicomb_violations(bg: BipartiteGraft, spine: Optional[VertexSet] = None) -> CheckReport:
    """Distance floors 0 (spine-spine), -1 (spine-tooth) and -2 (tooth-tooth)."""
    report = CheckReport(name="quasicomb")
    a = _spine(bg, spine)
    b = bg.vertices - a
    for x, y in combinations(sorted(bg.vertices), 2):
        d = distance(bg.graft, x, y)
        if d is None:
            continue
        inside = (x in a) + (y in a)
        floor = {2: 0, 1: -1, 0: -2}[inside]
        report.check(d >= floor, "quasicomb-bound", f"dist({x},{y}) = {d} below {floor}", [x, y])
    return report


def factor_connected_comb_violations(bg: BipartiteGraft, spine: Optional[VertexSet] = None) -> CheckReport:
    """
    Exact distances on a factor-connected comb: 0 inside the spine, -1 from
    spine to tooth, and 0 or -2 between teeth. Skipped (empty report) when
    the graft is not factor-connected.
    """
    report = CheckReport(name="factor-connected-comb")
    if len(factor_components(bg.graft).components) != 1:
        return report
    a = _spine(bg, spine)
    b = bg.vertices - a
    for x, y in combinations(sorted(a), 2):
        d = distance(bg.graft, x, y)
        report.check(d == 0, "comb-spine-distance", f"dist({x},{y}) = {d}", [x, y])
    for x, y in product(sorted(a), sorted(b)):
        d = distance(bg.graft, x, y)
        report.check(d == -1, "comb-tooth-distance", f"dist({x},{y}) = {d}", [x, y])
    for x, y in combinations(sorted(b), 2):
        d = distance(bg.graft, x, y)
        report.check(d in (0, -2), "comb-teeth-distance", f"dist({x},{y}) = {d}", [x, y])
    return report


class CombReport(CheckReport):
    """Result of the primal-comb checks at one root."""

    root: str = ""
    primal: bool = False
    factor_components: List[List[str]] = Field(default_factory=list)
    root_component: List[str] = Field(default_factory=list)
    claims_checked: bool = False


def comb_primality_checks(bg: BipartiteGraft, root: Label, join: Optional[JoinLike] = None) -> CombReport:
    """
    Check the two structural claims about a comb primal at a spine root.

    With G_r the factor-component of the root: no edge joins its spine
    vertices to teeth outside it, and after contracting G_r the remaining
    join is minimum, spine vertices lie at distance 1 from [G_r] and teeth at
    distance 0. Non-primal combs only get their factor-components reported.

    Raises:
        NotComb: if the graft fails the comb test or the root is not a spine vertex
    """
    if not is_comb(bg) or root not in bg.class_a:
        raise NotComb(f"Not a comb with spine root {root}")
    f = require_minimum(bg.graft, join).edges if join is not None else min_join(bg.graft).edges
    factors = factor_components(bg.graft)
    g_r = factors.component_of(root)
    report = CombReport(
        name="comb-primality",
        root=root,
        primal=is_primal(bg.graft, root),
        factor_components=[sorted(c) for c in factors.components],
        root_component=sorted(g_r),
    )
    if not report.primal:
        logger.debug(f"Comb is not primal at {root}; claims skipped")
        return report

    report.claims_checked = True
    crossing = bg.graph.edges_between(bg.class_a & g_r, bg.class_b - g_r)
    report.check(not crossing, "claim-noedge", "spine vertices of G_r touch outside teeth", sorted(crossing))

    name = contracted_label(g_r)
    try:
        contracted, _ = contract_graft(bg.graft, [g_r], [name])
        BipartiteGraft(contracted, (bg.class_a - g_r), (bg.class_b - g_r) | {name})
    except GraftError as e:
        report.fail("claim-dist-bipartite", str(e), sorted(g_r))
        return report

    rest = f - bg.graph.induced_edges(g_r)
    try:
        require_minimum(contracted, rest)
    except CathedralError as e:
        report.fail("claim-dist-join", str(e), sorted(rest))
        return report
    for x in sorted(bg.vertices - g_r):
        d = distance(contracted, x, name)
        want = 1 if x in bg.class_a else 0
        report.check(d == want, "claim-dist", f"dist({x},[G_r]) = {d}, expected {want}", x)
    return report
