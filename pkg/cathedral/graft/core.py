"""
Graph and graft value types.

Graphs are immutable. Every edge carries an id that never changes under
contraction, deletion, induction or synthesis, so an edge set computed on one
graft can be read on any graft derived from it. An input edge between u and v
gets the id (min(u, v), max(u, v)).
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from cathedral.exceptions import (
    DuplicateEdge,
    DuplicateLabel,
    ForeignEdgeId,
    GraftError,
    LabelCollision,
    LoopEdge,
    OddTerminalComponent,
    OverlappingSets,
    UnknownEndpoint,
    UnknownVertex,
)

logger = logging.getLogger(__name__)

Label = str
EdgeId = Tuple[str, str]
VertexSet = FrozenSet[Label]
EdgeSet = FrozenSet[EdgeId]


def edge_id(u: Label, v: Label) -> EdgeId:
    """Canonical id of an input edge between u and v."""
    return (u, v) if u <= v else (v, u)


def sorted_edges(edges: Iterable[EdgeId]) -> List[EdgeId]:
    return sorted(edges)


def contracted_label(members: Iterable[Label]) -> Label:
    """Default name of the vertex a set is contracted to, e.g. [u1+v1]."""
    return "[" + "+".join(sorted(members)) + "]"


@dataclass(frozen=True)
class Edge:
    """An edge record; endpoints are stored in sorted order."""

    id: EdgeId
    u: Label
    v: Label

    def __post_init__(self):
        if self.v < self.u:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    @property
    def ends(self) -> Tuple[Label, Label]:
        return (self.u, self.v)

    def other(self, x: Label) -> Label:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class Graph:
    """Undirected loopless multigraph with stable edge ids."""

    vertices: VertexSet
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.id)))
        seen = set()
        for e in self.edges:
            if e.id in seen:
                raise DuplicateEdge(f"Edge id {e.id} appears twice")
            seen.add(e.id)
            if e.u not in self.vertices or e.v not in self.vertices:
                raise UnknownEndpoint(f"Edge {e.id} has an endpoint outside the vertex set")
            if e.u == e.v:
                raise LoopEdge(f"Edge {e.id} is a loop")

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.vertices, self.edges))

    @cached_property
    def edge_map(self) -> Dict[EdgeId, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def edge_ids(self) -> EdgeSet:
        return frozenset(self.edge_map)

    @cached_property
    def adjacency(self) -> Dict[Label, Tuple[Tuple[Label, EdgeId], ...]]:
        adj: Dict[Label, List[Tuple[Label, EdgeId]]] = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.u].append((e.v, e.id))
            adj[e.v].append((e.u, e.id))
        return {v: tuple(sorted(nbrs)) for v, nbrs in adj.items()}

    @cached_property
    def nx_graph(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(sorted(self.vertices))
        for e in self.edges:
            g.add_edge(e.u, e.v, key=e.id)
        return g

    def to_networkx(self) -> nx.MultiGraph:
        return self.nx_graph.copy()

    def edge(self, eid: EdgeId) -> Edge:
        try:
            return self.edge_map[eid]
        except KeyError:
            raise ForeignEdgeId(f"Edge id {eid} is not an edge of this graph")

    def require_vertices(self, vertices: Iterable[Label]) -> VertexSet:
        vs = frozenset(vertices)
        missing = vs - self.vertices
        if missing:
            raise UnknownVertex(f"Unknown vertices: {sorted(missing)}")
        return vs

    def require_edges(self, edges: Iterable[EdgeId]) -> EdgeSet:
        es = frozenset(edges)
        foreign = es - self.edge_ids
        if foreign:
            raise ForeignEdgeId(f"Edge ids not in graph: {sorted(foreign)}")
        return es

    def incident(self, v: Label) -> List[EdgeId]:
        return [eid for _, eid in self.adjacency[v]]

    def degree(self, v: Label) -> int:
        return len(self.adjacency[v])

    def boundary(self, vertices: Iterable[Label]) -> EdgeSet:
        xs = frozenset(vertices)
        return frozenset(e.id for e in self.edges if (e.u in xs) != (e.v in xs))

    def induced_edges(self, vertices: Iterable[Label]) -> EdgeSet:
        xs = frozenset(vertices)
        return frozenset(e.id for e in self.edges if e.u in xs and e.v in xs)

    def edges_between(self, xs: Iterable[Label], ys: Iterable[Label]) -> EdgeSet:
        xs, ys = frozenset(xs), frozenset(ys)
        return frozenset(
            e.id for e in self.edges
            if (e.u in xs and e.v in ys) or (e.u in ys and e.v in xs)
        )

    def neighborhood(self, vertices: Iterable[Label]) -> VertexSet:
        """N(X): vertices outside X adjacent to some vertex of X."""
        xs = frozenset(vertices)
        out = set()
        for x in xs:
            for y, _ in self.adjacency[x]:
                if y not in xs:
                    out.add(y)
        return frozenset(out)

    def induced(self, vertices: Iterable[Label]) -> "Graph":
        xs = self.require_vertices(vertices)
        return Graph(xs, tuple(e for e in self.edges if e.u in xs and e.v in xs))

    def delete_vertices(self, vertices: Iterable[Label]) -> "Graph":
        return self.induced(self.vertices - frozenset(vertices))

    def delete_edges(self, edges: Iterable[EdgeId]) -> "Graph":
        drop = frozenset(edges)
        return Graph(self.vertices, tuple(e for e in self.edges if e.id not in drop))

    def restrict_edges(self, edges: Iterable[EdgeId]) -> "Graph":
        keep = frozenset(edges)
        return Graph(self.vertices, tuple(e for e in self.edges if e.id in keep))

    def extended(self, vertices: Iterable[Label] = (), edges: Iterable[Edge] = ()) -> "Graph":
        new_vertices = frozenset(vertices)
        clash = new_vertices & self.vertices
        if clash:
            raise LabelCollision(f"Labels already in use: {sorted(clash)}")
        return Graph(self.vertices | new_vertices, self.edges + tuple(edges))

    def components(self) -> List[VertexSet]:
        """Connected components, ordered by their least label."""
        comps = [frozenset(c) for c in nx.connected_components(self.nx_graph)]
        return sorted(comps, key=lambda c: min(c))

    def component_of(self, v: Label) -> VertexSet:
        return frozenset(nx.node_connected_component(self.nx_graph, v))

    def bfs_tree(self, source: Label) -> Tuple[Dict[Label, int], Dict[Label, Tuple[Label, EdgeId]]]:
        """
        BFS depths and parent edges from source.

        Neighbours are visited in sorted order and a parallel pair is entered
        through its least id, so the tree is a function of the graph. The depth
        dict lists vertices in discovery order.
        """
        g = self.nx_graph
        depth = {source: 0}
        parent: Dict[Label, Tuple[Label, EdgeId]] = {}
        for v, w in nx.bfs_edges(g, source, sort_neighbors=sorted):
            depth[w] = depth[v] + 1
            parent[w] = (v, min(g[v][w]))
        return depth, parent

    def edge_subgraph(self, edges: Iterable[EdgeId]) -> nx.MultiGraph:
        """Read-only networkx view on the given edge ids and their ends."""
        es = self.require_edges(edges)
        return self.nx_graph.edge_subgraph((self.edge_map[eid].u, self.edge_map[eid].v, eid) for eid in es)


@dataclass(frozen=True)
class Graft:
    """A graph with a terminal set meeting every component evenly."""

    graph: Graph
    terminals: VertexSet = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "terminals", frozenset(self.terminals))
        self.graph.require_vertices(self.terminals)
        for comp in self.graph.components():
            if len(comp & self.terminals) % 2:
                raise OddTerminalComponent(comp)

    @property
    def vertices(self) -> VertexSet:
        return self.graph.vertices

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self.graph.edges

    @property
    def edge_ids(self) -> EdgeSet:
        return self.graph.edge_ids

    def toggled(self, *vertices: Label) -> "Graft":
        """The graft (G, T Δ {vertices})."""
        return Graft(self.graph, self.terminals.symmetric_difference(vertices))

    def induced(self, vertices: Iterable[Label], terminals: Optional[Iterable[Label]] = None) -> "Graft":
        sub = self.graph.induced(vertices)
        ts = self.terminals & sub.vertices if terminals is None else frozenset(terminals)
        return Graft(sub, ts)

    def delete_vertices(self, vertices: Iterable[Label]) -> "Graft":
        sub = self.graph.delete_vertices(vertices)
        return Graft(sub, self.terminals & sub.vertices)


@dataclass(frozen=True)
class BipartiteGraft:
    graft: Graft
    class_a: VertexSet
    class_b: VertexSet

    def __post_init__(self):
        object.__setattr__(self, "class_a", frozenset(self.class_a))
        object.__setattr__(self, "class_b", frozenset(self.class_b))
        if self.class_a & self.class_b or (self.class_a | self.class_b) != self.graft.vertices:
            raise GraftError("Colour classes must partition the vertex set")
        for e in self.graft.edges:
            if (e.u in self.class_a) == (e.v in self.class_a):
                raise GraftError(f"Edge {e.id} does not cross the colour classes")

    @property
    def graph(self) -> Graph:
        return self.graft.graph

    @property
    def terminals(self) -> VertexSet:
        return self.graft.terminals

    @property
    def vertices(self) -> VertexSet:
        return self.graft.vertices

    def class_of(self, v: Label) -> VertexSet:
        if v in self.class_a:
            return self.class_a
        if v in self.class_b:
            return self.class_b
        raise UnknownVertex(f"Unknown vertex {v}")

    def opposite_class(self, v: Label) -> VertexSet:
        return self.class_b if v in self.class_a else self.class_a

    def with_graft(self, graft: Graft) -> "BipartiteGraft":
        """Same colouring restricted (or extended by the caller) to another graft."""
        return BipartiteGraft(graft, self.class_a & graft.vertices, self.class_b & graft.vertices)

    def restrict(self, vertices: Iterable[Label]) -> "BipartiteGraft":
        """Induced bipartite subgraft keeping the terminals inside."""
        return self.with_graft(self.graft.induced(vertices))


@dataclass(frozen=True)
class ComponentPartition:
    components: Tuple[VertexSet, ...]
    odd_indices: Tuple[int, ...]
    even_indices: Tuple[int, ...]

    @property
    def odd(self) -> List[VertexSet]:
        return [self.components[i] for i in self.odd_indices]

    @property
    def even(self) -> List[VertexSet]:
        return [self.components[i] for i in self.even_indices]


def build_graft(
    vertices: Sequence[Label],
    edges: Iterable[Tuple[Label, Label]],
    terminals: Iterable[Label],
) -> Graft:
    """
    Build and validate a graft from plain labels.

    Args:
        vertices: Distinct vertex labels
        edges: Endpoint pairs; no loops, no repeated pairs
        terminals: Terminal labels

    Returns:
        A validated Graft
    """
    vertex_list = list(vertices)
    vs = frozenset(vertex_list)
    if len(vs) != len(vertex_list):
        dupes = sorted({v for v in vertex_list if vertex_list.count(v) > 1})
        raise DuplicateLabel(f"Duplicate vertex labels: {dupes}")

    edge_list = []
    for u, v in edges:
        if u not in vs or v not in vs:
            raise UnknownEndpoint(f"Edge {u}-{v} has an unknown endpoint")
        if u == v:
            raise LoopEdge(f"Loop at {u}")
        edge_list.append(Edge(edge_id(u, v), u, v))

    ts = frozenset(terminals)
    if ts - vs:
        raise UnknownVertex(f"Terminals not in the vertex set: {sorted(ts - vs)}")
    graft = Graft(Graph(vs, tuple(edge_list)), ts)
    logger.debug(f"Built graft with {len(vs)} vertices, {len(edge_list)} edges, {len(ts)} terminals")
    return graft


def build_bipartite_graft(
    vertices: Sequence[Label],
    edges: Iterable[Tuple[Label, Label]],
    terminals: Iterable[Label],
    class_a: Iterable[Label],
    class_b: Iterable[Label],
) -> BipartiteGraft:
    return BipartiteGraft(build_graft(vertices, edges, terminals), frozenset(class_a), frozenset(class_b))


def bipartite_from_graft(graft: Graft) -> BipartiteGraft:
    """
    Two-colour a graft. In every component the least label lands in class A.

    Raises:
        GraftError: if the graph is not bipartite
    """
    g = graft.graph.nx_graph
    if not nx.is_bipartite(g):
        raise GraftError("Graph is not bipartite")
    colour = nx.bipartite.color(g)
    class_a = set()
    for comp in graft.graph.components():
        anchor = colour[min(comp)]
        class_a.update(v for v in comp if colour[v] == anchor)
    class_a = frozenset(class_a)
    return BipartiteGraft(graft, class_a, graft.vertices - class_a)


def boundary_and_induced(graph: Graph, vertices: Iterable[Label]) -> Tuple[EdgeSet, EdgeSet]:
    """Return the cut of X and the edges with both ends in X."""
    xs = graph.require_vertices(vertices)
    return graph.boundary(xs), graph.induced_edges(xs)


def components_with_parity(graft: Graft, removed: Iterable[Label] = ()) -> ComponentPartition:
    """Components of G - X, each flagged by the parity of its terminal count."""
    xs = graft.graph.require_vertices(removed)
    comps = tuple(graft.graph.delete_vertices(xs).components())
    odd = tuple(i for i, c in enumerate(comps) if len(c & graft.terminals) % 2)
    even = tuple(i for i in range(len(comps)) if i not in odd)
    return ComponentPartition(comps, odd, even)


def contract_sets(
    graph: Graph,
    sets: Sequence[Iterable[Label]],
    names: Optional[Sequence[Label]] = None,
) -> Tuple[Graph, Dict[Label, Label]]:
    """
    Contract each set to a single vertex.

    Edges inside a set disappear; every other edge keeps its id, so parallel
    edges may appear.

    Returns:
        The contracted graph and a map from every old vertex to its new vertex
    """
    groups = [graph.require_vertices(s) for s in sets]
    seen = set()
    for g in groups:
        if not g:
            raise OverlappingSets("Contracted sets must be nonempty")
        if g & seen:
            raise OverlappingSets(f"Sets overlap on {sorted(g & seen)}")
        seen |= g
    labels = list(names) if names is not None else [contracted_label(g) for g in groups]
    if len(labels) != len(groups):
        raise GraftError("One name is needed per contracted set")

    untouched = graph.vertices - seen
    if len(set(labels)) != len(labels) or set(labels) & untouched:
        raise LabelCollision(f"Contracted names collide: {labels}")

    mapping = {v: v for v in untouched}
    for g, name in zip(groups, labels):
        for v in g:
            mapping[v] = name

    edges = tuple(
        Edge(e.id, mapping[e.u], mapping[e.v])
        for e in graph.edges
        if mapping[e.u] != mapping[e.v]
    )
    return Graph(frozenset(mapping.values()), edges), mapping


def contract_graft(
    graft: Graft,
    sets: Sequence[Iterable[Label]],
    names: Optional[Sequence[Label]] = None,
) -> Tuple[Graft, Dict[Label, Label]]:
    """Contract a graft; a contracted vertex is a terminal iff its set meets T oddly."""
    graph, mapping = contract_sets(graft.graph, sets, names)
    counts: Dict[Label, int] = {}
    for t in graft.terminals:
        counts[mapping[t]] = counts.get(mapping[t], 0) + 1
    terminals = frozenset(v for v, c in counts.items() if c % 2)
    return Graft(graph, terminals), mapping


def symmetric_difference(
    first: Iterable[EdgeId],
    second: Iterable[EdgeId],
    graph: Optional[Graph] = None,
) -> EdgeSet:
    a, b = frozenset(first), frozenset(second)
    if graph is not None:
        graph.require_edges(a | b)
    return a ^ b


def odd_vertices(graph: Graph, edges: Iterable[EdgeId]) -> VertexSet:
    """Vertices of odd degree in the given edge set."""
    odd = set()
    for eid in edges:
        e = graph.edge(eid)
        odd ^= {e.u}
        odd ^= {e.v}
    return frozenset(odd)
