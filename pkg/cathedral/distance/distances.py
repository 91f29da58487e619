"""
F-weights and F-distances.

The distance between x and y in one component is ν(G, T Δ {x, y}) - ν(G, T).
It equals the least F-weight of a simple x-y path whenever F is a minimum
join, so it does not depend on which minimum join is at hand. Vertices in
different components have no distance.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

import networkx as nx

from cathedral.config import SOLVER_CONFIG
from cathedral.exceptions import Disconnected, SameVertex, TheoremViolation, TooLarge
from cathedral.graft import EdgeId, Graft, Label, VertexSet
from cathedral.joins import JoinLike, as_edges, join_size, min_join, minimum_join_size, require_minimum

logger = logging.getLogger(__name__)


def f_weight(graft: Graft, join: JoinLike, edges: Iterable[EdgeId]) -> int:
    """
    w_F of an edge set: edges outside F count +1, edges in F count -1.

    Raises:
        ForeignEdgeId: if an edge is not in the graft
    """
    f = as_edges(join)
    es = graft.graph.require_edges(edges)
    return len(es - f) - len(es & f)


def distance(graft: Graft, x: Label, y: Label) -> Optional[int]:
    """dist(x, y) as a ν-difference; None when x and y lie in different components."""
    graft.graph.require_vertices((x, y))
    if x == y:
        return 0
    if y not in graft.graph.component_of(x):
        return None
    return join_size(graft.graph, graft.terminals ^ {x, y}) - minimum_join_size(graft)


def min_distance_from_set(graft: Graft, xs: Iterable[Label], y: Label) -> Optional[int]:
    """min over x in X (within y's component) of dist(x, y)."""
    values = [d for d in (distance(graft, x, y) for x in xs) if d is not None]
    return min(values) if values else None


@dataclass(frozen=True)
class DistanceTable:
    """Distances from one source to every vertex of its component."""

    source: Label
    dist: Mapping[Label, int] = field(default_factory=dict)

    def __getitem__(self, v: Label) -> int:
        return self.dist[v]

    def __contains__(self, v: Label) -> bool:
        return v in self.dist

    def __iter__(self) -> Iterator[Label]:
        return iter(sorted(self.dist))

    def get(self, v: Label) -> Optional[int]:
        return self.dist.get(v)

    def level(self, value: int) -> VertexSet:
        return frozenset(v for v, d in self.dist.items() if d == value)

    def below(self, value: int) -> VertexSet:
        return frozenset(v for v, d in self.dist.items() if d < value)

    @property
    def minimum(self) -> int:
        return min(self.dist.values())


def f_distance_from(graft: Graft, join: JoinLike, source: Label) -> DistanceTable:
    """
    Distance table from a source.

    Args:
        graft: The graft
        join: A minimum join of the graft
        source: Source vertex

    Returns:
        DistanceTable covering the source's component; other vertices are absent
    """
    require_minimum(graft, join)
    graft.graph.require_vertices([source])
    nu = minimum_join_size(graft)
    dist: Dict[Label, int] = {source: 0}
    for x in sorted(graft.graph.component_of(source) - {source}):
        dist[x] = join_size(graft.graph, graft.terminals ^ {source, x}) - nu
    return DistanceTable(source, dist)


def brute_force_distance(graft: Graft, join: JoinLike, x: Label, y: Label) -> Optional[int]:
    """
    Least F-weight over simple x-y paths, by enumerating all of them.

    Raises:
        TooLarge: above the configured path-oracle vertex bound
    """
    limit = SOLVER_CONFIG["path_oracle_max_n"]
    if len(graft.vertices) > limit:
        raise TooLarge(f"Path enumeration is limited to {limit} vertices")
    graft.graph.require_vertices((x, y))
    if x == y:
        return 0
    f = as_edges(join)
    best = None
    for path in nx.all_simple_edge_paths(graft.graph.nx_graph, x, y):
        w = sum(-1 if key in f else 1 for _, _, key in path)
        if best is None or w < best:
            best = w
    return best


@dataclass(frozen=True)
class Path:
    vertices: Tuple[Label, ...]
    edges: Tuple[EdgeId, ...]
    weight: int

    @property
    def edge_set(self):
        return frozenset(self.edges)


def _path_within(graft: Graft, edges: frozenset, x: Label, y: Label) -> Optional[Path]:
    sub = graft.graph.edge_subgraph(edges)
    if x not in sub or y not in sub:
        return None
    try:
        vertices = nx.shortest_path(sub, x, y)
    except nx.NetworkXNoPath:
        return None
    path_edges = [min(sub[u][v]) for u, v in zip(vertices, vertices[1:])]
    return Path(tuple(vertices), tuple(path_edges), 0)


def f_shortest_path(graft: Graft, join: JoinLike, x: Label, y: Label) -> Path:
    """
    An F-shortest simple x-y path.

    F Δ F' (F' a minimum join after toggling x and y) is an x-y path plus
    circuits of zero weight, so any x-y path inside it is shortest.

    Raises:
        SameVertex: if x == y
        Disconnected: if x and y lie in different components
        TheoremViolation: if the extracted path's weight differs from dist(x, y)
    """
    f = require_minimum(graft, join).edges
    graft.graph.require_vertices((x, y))
    if x == y:
        raise SameVertex(f"Path endpoints coincide: {x}")
    if y not in graft.graph.component_of(x):
        raise Disconnected(f"{x} and {y} lie in different components")

    other = min_join(graft.toggled(x, y)).edges
    path = _path_within(graft, f ^ other, x, y)
    expected = distance(graft, x, y)
    if path is None:
        raise TheoremViolation("shortest-path-extraction", f"no {x}-{y} path inside F Δ F'", [x, y])
    weight = f_weight(graft, f, path.edges)
    if weight != expected:
        raise TheoremViolation(
            "shortest-path-weight",
            f"extracted {x}-{y} path has weight {weight}, distance is {expected}",
            list(path.edges),
        )
    return Path(path.vertices, path.edges, weight)
