"""
Minimum T-join solver.

A minimum join is assembled per component: BFS distances between terminals
give a unit-length metric closure, a minimum-weight perfect matching pairs the
terminals, and the matched shortest paths are XOR-ed together. The size ν of
a minimum join is memoized on the (hashable) graph and terminal set, since
every distance in the package is a difference of two ν values.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple, Union

from cathedral.config import SOLVER_CONFIG
from cathedral.exceptions import NoJoinExists, NotMinimumJoin, TheoremViolation
from cathedral.graft import EdgeId, EdgeSet, Graft, Graph, Label, VertexSet, odd_vertices
from cathedral.joins.matching import min_weight_perfect_matching
from cathedral.joins.oracle import circuit_masks, join_space, min_join_bruteforce_edges
from cathedral.reports import CheckReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Join:
    """An edge set together with its size."""

    edges: EdgeSet

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))

    @property
    def size(self) -> int:
        return len(self.edges)

    def __contains__(self, eid: EdgeId) -> bool:
        return eid in self.edges

    def sorted_edges(self) -> List[EdgeId]:
        return sorted(self.edges)


JoinLike = Union[Join, Iterable[EdgeId]]


def as_edges(join: JoinLike) -> EdgeSet:
    return join.edges if isinstance(join, Join) else frozenset(join)


@dataclass(frozen=True)
class FactorComponents:
    components: Tuple[VertexSet, ...]
    trivial: Tuple[VertexSet, ...]

    @property
    def trivial_vertices(self) -> VertexSet:
        return frozenset(v for c in self.trivial for v in c)

    def component_of(self, v: Label) -> VertexSet:
        for c in self.components:
            if v in c:
                return c
        raise KeyError(v)


def _path_to(parent: Dict[Label, Tuple[Label, EdgeId]], target: Label) -> List[EdgeId]:
    edges = []
    while target in parent:
        target, eid = parent[target]
        edges.append(eid)
    return edges


@lru_cache(maxsize=SOLVER_CONFIG["nu_cache_size"])
def _solve(graph: Graph, terminals: VertexSet) -> Optional[EdgeSet]:
    join = set()
    for comp in graph.components():
        ts = sorted(comp & terminals)
        if len(ts) % 2:
            return None
        if not ts:
            continue
        trees = {t: graph.bfs_tree(t) for t in ts}
        dist = [[trees[a][0][b] for b in ts] for a in ts]
        for i, j in min_weight_perfect_matching(dist):
            join.symmetric_difference_update(_path_to(trees[ts[i]][1], ts[j]))
    return frozenset(join)


def join_size(graph: Graph, terminals: Iterable[Label]) -> Optional[int]:
    """
    ν(G, T): the size of a minimum T-join, or None when no join exists.

    Works on any terminal set, including ones that break the parity
    invariant, which is what ν-difference tests need.
    """
    edges = _solve(graph, frozenset(terminals))
    return None if edges is None else len(edges)


def minimum_join_size(graft: Graft) -> int:
    return join_size(graft.graph, graft.terminals)


def is_join(graft: Graft, edges: JoinLike) -> bool:
    """True iff the odd-degree vertices of the edge set are exactly T."""
    es = graft.graph.require_edges(as_edges(edges))
    return odd_vertices(graft.graph, es) == graft.terminals


def min_join(graft: Graft) -> Join:
    """
    A minimum join via metric closure and perfect matching.

    Args:
        graft: A validated graft

    Returns:
        Join of size ν(G, T)
    """
    edges = _solve(graft.graph, graft.terminals)
    if edges is None:
        raise NoJoinExists("Some component holds an odd number of terminals")
    return Join(edges)


def min_join_bruteforce(graft: Graft) -> Join:
    """Exhaustive minimum join; lexicographically least among the minima."""
    return Join(min_join_bruteforce_edges(graft.graph, graft.terminals))


def require_minimum(graft: Graft, join: JoinLike) -> Join:
    """
    Check that an edge set is a minimum join of the graft.

    Raises:
        ForeignEdgeId: if the set uses edges outside the graft
        NotMinimumJoin: otherwise when the check fails
    """
    edges = as_edges(join)
    if not is_join(graft, edges):
        raise NotMinimumJoin(f"Edge set of size {len(edges)} is not a join of the graft")
    nu = minimum_join_size(graft)
    if len(edges) != nu:
        raise NotMinimumJoin(f"Join has size {len(edges)}, minimum is {nu}")
    return join if isinstance(join, Join) else Join(edges)


def reference_join_size(graft: Graft) -> int:
    """ν from the brute-force oracle when the graft is small enough, else from the solver."""
    if len(graft.edges) <= SOLVER_CONFIG["bruteforce_max_edges"]:
        return min_join_bruteforce(graft).size
    return minimum_join_size(graft)


def assert_minimum_join(graft: Graft, join: JoinLike, prop: str) -> Join:
    """
    Like require_minimum, but checked against the oracle and reported as a broken property.

    Raises:
        TheoremViolation: if the edge set is not a minimum join
    """
    edges = as_edges(join)
    if not is_join(graft, edges):
        raise TheoremViolation(prop, "edge set is not a join", sorted(edges))
    nu = reference_join_size(graft)
    if len(edges) != nu:
        raise TheoremViolation(prop, f"join of size {len(edges)} but the minimum is {nu}", sorted(edges))
    return Join(edges)


def is_allowed(graft: Graft, eid: EdgeId) -> bool:
    """Whether some minimum join contains the edge, by ν-difference."""
    e = graft.graph.edge(eid)
    nu = minimum_join_size(graft)
    rest = join_size(graft.graph.delete_edges([eid]), graft.terminals ^ {e.u, e.v})
    return rest is not None and rest == nu - 1


def allowed_edges(graft: Graft) -> EdgeSet:
    return frozenset(e.id for e in graft.edges if is_allowed(graft, e.id))


def factor_components(graft: Graft) -> FactorComponents:
    """Components of the allowed-edge subgraph; singletons are trivial."""
    comps = tuple(graft.graph.restrict_edges(allowed_edges(graft)).components())
    trivial = tuple(c for c in comps if len(c) == 1)
    logger.debug(f"{len(comps)} factor-components, {len(trivial)} trivial")
    return FactorComponents(comps, trivial)


def check_negative_circuits(graft: Graft, join: JoinLike, converse_max_dimension: int = 8) -> CheckReport:
    """
    Circuit characterisation of minimum joins, by exhaustive enumeration.

    Checks that a minimum join has no circuit of negative weight, that
    toggling a zero-weight circuit gives another minimum join, and (when the
    cycle space is small enough) that every join free of negative circuits
    is minimum.

    Raises:
        TooLarge: when the graft is beyond the circuit oracle
    """
    report = CheckReport(name="circuits")
    space, circuits = circuit_masks(graft.graph)
    nu = minimum_join_size(graft)
    f = space.to_mask(as_edges(join))

    def weight(circuit: int, mask: int) -> int:
        return circuit.bit_count() - 2 * (circuit & mask).bit_count()

    for c in circuits:
        w = weight(c, f)
        if w < 0:
            report.fail("negative-circuit", f"circuit of weight {w}", sorted(space.to_edges(c)))
        elif w == 0:
            toggled = f ^ c
            report.check(
                toggled.bit_count() == nu,
                "zero-circuit-toggle",
                "toggling a zero-weight circuit left the minimum",
                sorted(space.to_edges(c)),
            )

    if space.dimension <= converse_max_dimension:
        for mask in join_space(graft.graph, graft.terminals).walk():
            if mask.bit_count() == nu:
                continue
            if all(weight(c, mask) >= 0 for c in circuits):
                report.fail(
                    "no-negative-circuit-implies-minimum",
                    f"join of size {mask.bit_count()} has no negative circuit but ν = {nu}",
                    sorted(space.to_edges(mask)),
                )
    return report
