"""
Exhaustive oracles over the cycle space.

Every T-join of a graph is one fixed T-join plus an element of the cycle
space, so walking the coset in Gray-code order visits each join exactly once
with one XOR per step. Edges are indexed in sorted id order; bit i of a mask
stands for the i-th edge id.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from cathedral.config import SOLVER_CONFIG
from cathedral.exceptions import NoJoinExists, TooLarge
from cathedral.graft import EdgeId, EdgeSet, Graft, Graph, Label, VertexSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JoinSpace:
    """The coset of T-joins of a graph, as a base mask plus a cycle basis."""

    edge_ids: Tuple[EdgeId, ...]
    base: Optional[int]
    basis: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_edges(self, mask: int) -> EdgeSet:
        return frozenset(eid for i, eid in enumerate(self.edge_ids) if mask >> i & 1)

    def to_mask(self, edges: Iterable[EdgeId]) -> int:
        index = {eid: i for i, eid in enumerate(self.edge_ids)}
        mask = 0
        for eid in edges:
            mask |= 1 << index[eid]
        return mask

    def walk(self) -> Iterator[int]:
        """Yield every T-join mask once."""
        if self.base is None:
            return
        current = self.base
        yield current
        for step in range(1, 1 << len(self.basis)):
            current ^= self.basis[(step & -step).bit_length() - 1]
            yield current


def _spanning_forest(graph: Graph) -> Tuple[List[Label], Dict[Label, Tuple[Label, EdgeId]], Dict[Label, int]]:
    order: List[Label] = []
    parent: Dict[Label, Tuple[Label, EdgeId]] = {}
    depth: Dict[Label, int] = {}
    for root in sorted(graph.vertices):
        if root in depth:
            continue
        tree_depth, tree_parent = graph.bfs_tree(root)
        order.extend(tree_depth)
        depth.update(tree_depth)
        parent.update(tree_parent)
    return order, parent, depth


def join_space(graph: Graph, terminals: Iterable[Label]) -> JoinSpace:
    """
    Build the T-join coset of a graph.

    The base join is the unique T-join inside a BFS spanning forest; the basis
    is the set of fundamental cycles of the non-tree edges.
    """
    ts: VertexSet = frozenset(terminals)
    ids = tuple(e.id for e in graph.edges)
    index = {eid: i for i, eid in enumerate(ids)}
    order, parent, depth = _spanning_forest(graph)

    need = {v: v in ts for v in graph.vertices}
    base: Optional[int] = 0
    for v in reversed(order):
        if v not in parent:
            if need[v]:
                base = None
            continue
        if need[v]:
            p, eid = parent[v]
            base |= 1 << index[eid]
            need[p] = not need[p]

    tree = {eid for _, eid in parent.values()}
    basis = []
    for e in graph.edges:
        if e.id in tree:
            continue
        mask = 1 << index[e.id]
        u, v = e.u, e.v
        while u != v:
            if depth[u] < depth[v]:
                u, v = v, u
            p, eid = parent[u]
            mask ^= 1 << index[eid]
            u = p
        basis.append(mask)
    return JoinSpace(ids, base, tuple(basis))


def _guard(graph: Graph) -> None:
    limit = SOLVER_CONFIG["bruteforce_max_edges"]
    if len(graph.edges) > limit:
        raise TooLarge(f"{len(graph.edges)} edges exceeds the brute-force bound of {limit}")


def bruteforce_min_joins(graph: Graph, terminals: Iterable[Label]) -> Tuple[int, List[EdgeSet]]:
    """
    Every minimum T-join, by exhaustive enumeration.

    Returns:
        The minimum size and the minimum joins, sorted by their sorted edge lists

    Raises:
        TooLarge: above the configured edge bound
        NoJoinExists: when some component holds an odd number of terminals
    """
    _guard(graph)
    space = join_space(graph, terminals)
    if space.base is None:
        raise NoJoinExists("Some component holds an odd number of terminals")
    best = None
    masks: List[int] = []
    for mask in space.walk():
        size = mask.bit_count()
        if best is None or size < best:
            best, masks = size, [mask]
        elif size == best:
            masks.append(mask)
    joins = sorted((space.to_edges(m) for m in masks), key=sorted)
    logger.debug(f"Enumerated {1 << space.dimension} joins, {len(joins)} of minimum size {best}")
    return best, joins


def min_join_bruteforce_edges(graph: Graph, terminals: Iterable[Label]) -> EdgeSet:
    """The lexicographically least minimum T-join by sorted edge list."""
    return bruteforce_min_joins(graph, terminals)[1][0]


def enumerate_min_joins(graft: Graft) -> List[EdgeSet]:
    """All minimum joins of a graft, within the brute-force bound."""
    return bruteforce_min_joins(graft.graph, graft.terminals)[1]


def _is_circuit(graph: Graph, edges: EdgeSet) -> bool:
    sub = graph.edge_subgraph(edges)
    return all(d == 2 for _, d in sub.degree) and nx.is_connected(sub)


def circuit_masks(graph: Graph) -> Tuple[JoinSpace, List[int]]:
    """
    Every circuit of a graph as a mask over the cycle space's edge index.

    Raises:
        TooLarge: when the graph has more vertices than the circuit oracle allows
    """
    limit = SOLVER_CONFIG["circuit_oracle_max_n"]
    if len(graph.vertices) > limit:
        raise TooLarge(f"Circuit enumeration is limited to {limit} vertices")
    _guard(graph)
    space = join_space(graph, ())
    masks = [m for m in space.walk() if m and _is_circuit(graph, space.to_edges(m))]
    return space, masks


def enumerate_circuits(graph: Graph) -> List[EdgeSet]:
    """Every circuit of a graph (parallel pairs included), sorted."""
    space, masks = circuit_masks(graph)
    return sorted((space.to_edges(m) for m in masks), key=sorted)
