#!/usr/bin/env python3
"""
Tests for extreme sets, combic sets and skeletons, fringe operations and rootlization.
"""

import os
import sys
import unittest

import pytest

# Add parent directory to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cathedral.exceptions import (
    IllegalAttachment,
    LabelCollision,
    NotCombic,
    NotExtreme,
    NotMaximalExtreme,
)
from cathedral.distance import distance, root_profile
from cathedral.graft import build_bipartite_graft
from cathedral.joins import min_join
from cathedral.structure import (
    check_path_to_trivial,
    check_rootlized_initial_component,
    even_component_joins,
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


class TestExtremeSets(unittest.TestCase):
    """Extreme and bipartitic extreme sets on PATH5 and the 4-cycle."""

    def setUp(self):
        self.path5 = build_bipartite_graft(
            ["v1", "u1", "a", "u2", "v2"],
            [("v1", "u1"), ("u1", "a"), ("a", "u2"), ("u2", "v2")],
            ["v1", "v2"],
            ["v1", "a", "v2"],
            ["u1", "u2"],
        )
        self.join = min_join(self.path5.graft)

    def test_is_extreme(self):
        self.assertTrue(is_extreme(self.path5.graft, self.join, {"a"}))
        self.assertFalse(is_extreme(self.path5.graft, self.join, {"v1", "v2"}))

    def test_grow(self):
        self.assertEqual(grow_maximal_bipartitic_extreme(self.path5, self.join, "a"), {"a"})
        self.assertEqual(grow_maximal_bipartitic_extreme(self.path5, self.join, "v1"), {"v1"})

    def test_maximality(self):
        self.assertTrue(is_maximal_bipartitic_extreme(self.path5, self.join, {"u1"}))
        self.assertFalse(is_maximal_bipartitic_extreme(self.path5, self.join, {"a", "u1"}))
        self.assertFalse(is_maximal_bipartitic_extreme(self.path5, self.join, set()))

    def test_partition_rejects_non_extreme(self):
        with self.assertRaises(NotExtreme):
            extreme_partition(self.path5, self.join, {"v1", "a"})


def test_grow_on_comb(four_cycle):
    f = min_join(four_cycle.graft)
    assert grow_maximal_bipartitic_extreme(four_cycle, f, "a1") == {"a1", "a2"}
    assert grow_maximal_bipartitic_extreme(four_cycle, f, "b2") == {"b1", "b2"}


def test_extreme_partition_with_fringe(path5_pendant):
    part = extreme_partition(path5_pendant, min_join(path5_pendant.graft), {"a"})
    assert part.maximal
    assert part.d_x == {"v1", "u1", "u2", "v2"}
    assert part.c_x == {"z"}


def test_is_combic(path5, four_cycle):
    f = min_join(path5.graft)
    assert is_combic(path5.graft, f, {"a"})
    assert not is_combic(path5.graft, f, {"v1", "a"})
    assert is_combic(four_cycle.graft, min_join(four_cycle.graft), {"a1", "a2"})


def test_skeleton(path5):
    f = min_join(path5.graft)
    skeleton = skeleton_of(path5.graft, f, {"a"})
    assert skeleton.tooth_labels() == ["[u1+v1]", "[u2+v2]"]
    assert skeleton.teeth["[u1+v1]"] == {"u1", "v1"}
    assert skeleton.attachments == {"[u1+v1]": ("a", "u1"), "[u2+v2]": ("a", "u2")}
    assert skeleton.join.edges == {("a", "u1"), ("a", "u2")}
    assert skeleton.graft.terminals == {"[u1+v1]", "[u2+v2]"}
    assert skeleton.skeleton.class_a == {"a"}


def test_skeleton_rejects_non_combic(path5):
    with pytest.raises(NotCombic):
        skeleton_of(path5.graft, min_join(path5.graft), {"v1", "a"})


def test_skeleton_drops_even_components(path5_pendant):
    skeleton = skeleton_of(path5_pendant.graft, min_join(path5_pendant.graft), {"a"})
    assert skeleton.even_components == (frozenset({"z"}),)
    assert "z" not in skeleton.graft.vertices


def test_tooth_extract(path5, path5_pendant):
    f = min_join(path5.graft)
    cut = tooth_extract(path5.graft, f, {"a"}, {"u1", "v1"})
    assert cut.root == "u1"
    assert cut.attachment == ("a", "u1")
    assert cut.graft.terminals == {"u1", "v1"}
    assert cut.join.edges == {("u1", "v1")}
    with pytest.raises(NotCombic):
        tooth_extract(path5_pendant.graft, min_join(path5_pendant.graft), {"a"}, {"z"})


def test_even_component_joins(path5_pendant):
    [(component, join)] = even_component_joins(path5_pendant.graft, min_join(path5_pendant.graft), {"a"})
    assert component == {"z"}
    assert join.size == 0


class TestFringe(unittest.TestCase):

    def setUp(self):
        self.pendant = build_bipartite_graft(
            ["v1", "u1", "a", "u2", "v2", "z"],
            [("v1", "u1"), ("u1", "a"), ("a", "u2"), ("u2", "v2"), ("a", "z")],
            ["v1", "v2"],
            ["v1", "a", "v2"],
            ["u1", "u2", "z"],
        )
        self.path5 = self.pendant.restrict({"v1", "u1", "a", "u2", "v2"})
        self.join = min_join(self.path5.graft)

    def test_remove(self):
        self.assertEqual(fringe_remove(self.pendant, {"a"}, self.join), self.path5)

    def test_remove_without_fringe_is_identity(self):
        self.assertIs(fringe_remove(self.path5, {"a"}), self.path5)

    def test_add(self):
        self.assertEqual(fringe_add(self.path5, {"a"}, ["z"], [("a", "z")], self.join), self.pendant)

    def test_add_rejects_foreign_edges(self):
        with self.assertRaises(IllegalAttachment):
            fringe_add(self.path5, {"a"}, ["z"], [("u1", "z")], self.join)

    def test_add_rejects_used_labels(self):
        with self.assertRaises(LabelCollision):
            fringe_add(self.path5, {"a"}, ["v1"], [("a", "v1")], self.join)

    def test_requires_maximal(self):
        with self.assertRaises(NotMaximalExtreme):
            fringe_remove(self.pendant, {"v1", "a"}, self.join)


def test_path_to_trivial(path5_pendant):
    from cathedral.graft import Edge, Graft, edge_id
    f = min_join(path5_pendant.graft)
    part = extreme_partition(path5_pendant, f, {"a"})
    grown = Graft(path5_pendant.graph.extended(["w"], [Edge(edge_id("a", "w"), "a", "w")]), path5_pendant.terminals)
    report = check_path_to_trivial(path5_pendant.graft, f, part.x, part.d_x, part.c_x, grown)
    assert report.passed


class TestRootlize(unittest.TestCase):

    def setUp(self):
        self.path5 = build_bipartite_graft(
            ["v1", "u1", "a", "u2", "v2"],
            [("v1", "u1"), ("u1", "a"), ("a", "u2"), ("u2", "v2")],
            ["v1", "v2"],
            ["v1", "a", "v2"],
            ["u1", "u2"],
        )
        self.join = min_join(self.path5.graft)

    def test_join_extends_by_root_edge(self):
        rooted = rootlize(self.path5.graft, self.join, {"a"})
        self.assertEqual(rooted.join.edges, self.join.edges | {("r", "s")})
        self.assertEqual(rooted.root_edge, ("r", "s"))
        self.assertEqual(distance(rooted.graft, "r", "s"), -1)
        self.assertEqual(distance(rooted.graft, "r", "v1"), distance(self.path5.graft, "a", "v1"))

    def test_classes(self):
        big, rooted = rootlize_bipartite(self.path5, self.join, {"a"})
        self.assertIn("r", big.class_a)
        self.assertIn("s", big.class_b)
        profile = root_profile(big.graft, rooted.join, "r")
        self.assertEqual(profile.a_set, {"a", "r"})

    def test_initial_component(self):
        check_rootlized_initial_component(self.path5, self.join, {"a"})

    def test_mount_must_be_extreme(self):
        with self.assertRaises(NotExtreme):
            rootlize(self.path5.graft, self.join, {"v1", "v2"})

    def test_fresh_labels(self):
        with self.assertRaises(LabelCollision):
            rootlize(self.path5.graft, self.join, {"a"}, root="u1")
