#!/usr/bin/env python3
"""
Unit tests for graph and graft value types: validation, contraction and edge ids.
"""

import os
import sys
import unittest

import pytest

# Add parent directory to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

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
from cathedral.graft import (
    BipartiteGraft,
    bipartite_from_graft,
    boundary_and_induced,
    build_graft,
    components_with_parity,
    contract_graft,
    contracted_label,
    edge_id,
    odd_vertices,
    symmetric_difference,
)


class TestBuildGraft(unittest.TestCase):
    """Validation performed when grafts are built from plain labels."""

    def test_edge_ids_are_sorted_pairs(self):
        self.assertEqual(edge_id("b", "a"), ("a", "b"))
        graft = build_graft(["b", "a"], [("b", "a")], [])
        self.assertEqual(graft.edges[0].id, ("a", "b"))
        self.assertEqual(graft.edges[0].ends, ("a", "b"))

    def test_duplicate_label(self):
        with self.assertRaises(DuplicateLabel):
            build_graft(["a", "a"], [], [])

    def test_loop(self):
        with self.assertRaises(LoopEdge):
            build_graft(["a"], [("a", "a")], [])

    def test_unknown_endpoint(self):
        with self.assertRaises(UnknownEndpoint):
            build_graft(["a"], [("a", "b")], [])

    def test_repeated_pair(self):
        with self.assertRaises(DuplicateEdge):
            build_graft(["a", "b"], [("a", "b"), ("b", "a")], [])

    def test_terminal_outside(self):
        with self.assertRaises(UnknownVertex):
            build_graft(["a", "b"], [("a", "b")], ["c"])

    def test_odd_terminal_component(self):
        with self.assertRaises(OddTerminalComponent) as ctx:
            build_graft(["x"], [], ["x"])
        self.assertEqual(ctx.exception.component, ("x",))

    def test_parity_is_per_component(self):
        with self.assertRaises(OddTerminalComponent):
            build_graft(["a", "b", "c", "d"], [("a", "b"), ("c", "d")], ["a", "c"])

    def test_equal_builds_hash_equal(self):
        first = build_graft(["a", "b"], [("a", "b")], ["a", "b"])
        second = build_graft(["b", "a"], [("b", "a")], ["b", "a"])
        self.assertEqual(first, second)
        self.assertEqual(hash(first.graph), hash(second.graph))


def test_neighbourhood_and_boundary(path5):
    graph = path5.graph
    assert graph.neighborhood({"a"}) == {"u1", "u2"}
    assert graph.boundary({"v1", "u1"}) == {("a", "u1")}
    assert graph.induced_edges({"v1", "u1", "a"}) == {("u1", "v1"), ("a", "u1")}


def test_boundary_and_induced(path5):
    cut, inside = boundary_and_induced(path5.graph, {"a", "u2"})
    assert cut == {("a", "u1"), ("u2", "v2")}
    assert inside == {("a", "u2")}
    with pytest.raises(UnknownVertex):
        boundary_and_induced(path5.graph, {"q"})


def test_symmetric_difference(path5):
    first = {("u1", "v1"), ("a", "u1")}
    assert symmetric_difference(first, {("a", "u1"), ("a", "u2")}) == {("u1", "v1"), ("a", "u2")}
    assert symmetric_difference(first, first, path5.graph) == frozenset()
    with pytest.raises(ForeignEdgeId):
        symmetric_difference(first, {("a", "v1")}, path5.graph)


def test_odd_vertices(path5):
    assert odd_vertices(path5.graph, [("u1", "v1"), ("a", "u1")]) == {"v1", "a"}
    assert odd_vertices(path5.graph, path5.graph.edge_ids) == {"v1", "v2"}


def test_components_with_parity(path5_pendant):
    parts = components_with_parity(path5_pendant.graft, {"a"})
    assert sorted(map(sorted, parts.odd)) == [["u1", "v1"], ["u2", "v2"]]
    assert parts.even == [frozenset({"z"})]


def test_components_sorted_by_least_label(two_k2):
    assert two_k2.graph.components() == [frozenset({"u1", "v1"}), frozenset({"u2", "v2"})]


def test_to_networkx_is_a_copy(path5):
    g = path5.graph.to_networkx()
    assert sorted(g.nodes) == sorted(path5.vertices)
    assert g.number_of_edges() == 4
    g.remove_node("a")
    assert path5.graph.nx_graph.has_node("a")


def test_bfs_tree_depths_and_parents(path5):
    depth, parent = path5.graph.bfs_tree("a")
    assert list(depth) == ["a", "u1", "u2", "v1", "v2"]
    assert depth == {"a": 0, "u1": 1, "u2": 1, "v1": 2, "v2": 2}
    assert parent["v1"] == ("u1", ("u1", "v1"))
    assert "a" not in parent


def test_bfs_tree_enters_parallel_pair_by_least_id(four_cycle):
    contracted, _ = contract_graft(four_cycle.graft, [{"b1", "a2", "b2"}], ["B"])
    assert len(contracted.edges) == 2
    depth, parent = contracted.graph.bfs_tree("a1")
    assert depth == {"a1": 0, "B": 1}
    assert parent["B"] == ("a1", ("a1", "b1"))


def test_edge_subgraph_view(path5):
    sub = path5.graph.edge_subgraph([("a", "u1"), ("a", "u2")])
    assert sorted(sub.nodes) == ["a", "u1", "u2"]
    assert sorted(k for _, _, k in sub.edges(keys=True)) == [("a", "u1"), ("a", "u2")]
    with pytest.raises(ForeignEdgeId):
        path5.graph.edge_subgraph([("a", "v1")])


def test_contraction_keeps_edge_ids(path5):
    contracted, mapping = contract_graft(path5.graft, [{"v1", "u1"}])
    name = contracted_label({"v1", "u1"})
    assert name == "[u1+v1]"
    assert mapping["v1"] == mapping["u1"] == name
    assert contracted.vertices == {name, "a", "u2", "v2"}
    assert contracted.terminals == {name, "v2"}
    assert contracted.graph.edge(("a", "u1")).ends == (name, "a")
    assert ("u1", "v1") not in contracted.edge_ids


def test_contraction_terminal_parity(path5):
    contracted, _ = contract_graft(path5.graft, [{"v1", "u1", "a", "u2", "v2"}], ["all"])
    assert contracted.vertices == {"all"}
    assert contracted.terminals == frozenset()


def test_contraction_errors(path5):
    with pytest.raises(OverlappingSets):
        contract_graft(path5.graft, [{"v1", "u1"}, {"u1", "a"}])
    with pytest.raises(LabelCollision):
        contract_graft(path5.graft, [{"v1", "u1"}], ["a"])


def test_two_colouring_puts_least_label_in_a(path5):
    coloured = bipartite_from_graft(path5.graft)
    assert coloured == path5
    assert coloured.class_of("u1") == {"u1", "u2"}
    assert coloured.opposite_class("u1") == {"v1", "a", "v2"}


def test_two_colouring_rejects_odd_cycle():
    triangle = build_graft(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")], [])
    with pytest.raises(GraftError):
        bipartite_from_graft(triangle)


def test_bipartite_classes_must_be_crossed(k2):
    with pytest.raises(GraftError):
        BipartiteGraft(k2, frozenset({"u", "v"}), frozenset())


def test_restrict_keeps_classes(path5, path5_pendant):
    trimmed = path5_pendant.restrict(path5.vertices)
    assert trimmed == path5
    assert trimmed.class_b == {"u1", "u2"}
