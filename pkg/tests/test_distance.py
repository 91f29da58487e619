#!/usr/bin/env python3
"""
Tests for F-distances, root profiles, primality and the join-switching lemmas.
"""

import os
import sys
import unittest
from itertools import combinations

import pytest

# Add parent directory to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cathedral.exceptions import Disconnected, NotInA, NotPrimal, SameVertex
from cathedral.distance import (
    brute_force_distance,
    distance,
    f_distance_from,
    f_shortest_path,
    f_weight,
    is_primal,
    join_switch,
    min_distance_from_set,
    profile_summary,
    root_profile,
    tower_shift,
)
from cathedral.joins import min_join

PATH5_FROM_V1 = {"v1": 0, "u1": -1, "a": -2, "u2": -3, "v2": -4}


def test_k2_distance(k2):
    assert distance(k2, "u", "v") == -1
    assert distance(k2, "u", "u") == 0


def test_no_distance_across_components(two_k2):
    assert distance(two_k2, "u1", "u2") is None
    assert distance(two_k2, "u1", "v1") == -1


def test_distance_table(path5):
    table = f_distance_from(path5.graft, min_join(path5.graft), "v1")
    assert dict(table.dist) == PATH5_FROM_V1
    assert table.minimum == -4
    assert table.level(0) == {"v1"}
    assert list(table) == ["a", "u1", "u2", "v1", "v2"]


def test_distance_table_skips_other_components(two_k2):
    table = f_distance_from(two_k2, min_join(two_k2), "u1")
    assert dict(table.dist) == {"u1": 0, "v1": -1}
    assert "u2" not in table


def test_path_oracle_agrees(path5_pendant):
    f = min_join(path5_pendant.graft)
    for y in sorted(path5_pendant.vertices - {"a"}):
        assert brute_force_distance(path5_pendant.graft, f, "a", y) == distance(path5_pendant.graft, "a", y)
    assert distance(path5_pendant.graft, "a", "z") == 1


def test_symmetry_and_colour_parity(path5_pendant):
    g = path5_pendant.graft
    for x, y in combinations(sorted(g.vertices), 2):
        d = distance(g, x, y)
        assert d == distance(g, y, x)
        assert d % 2 == (0 if y in path5_pendant.class_of(x) else 1)


def test_min_distance_from_set(path5):
    assert min_distance_from_set(path5.graft, {"v1", "v2"}, "a") == -2
    assert min_distance_from_set(path5.graft, {"v1", "v2"}, "u2") == -3


def test_f_weight(path5):
    f = min_join(path5.graft)
    assert f_weight(path5.graft, f, [("u1", "v1"), ("a", "u1")]) == -2


class TestShortestPath(unittest.TestCase):

    def test_end_to_end(self):
        from cathedral.graft import build_graft
        graft = build_graft(["a", "b", "c"], [("a", "b"), ("b", "c")], ["a", "c"])
        path = f_shortest_path(graft, min_join(graft), "a", "c")
        self.assertEqual(path.vertices, ("a", "b", "c"))
        self.assertEqual(path.weight, -2)

    def test_same_vertex(self):
        from cathedral.graft import build_graft
        graft = build_graft(["a", "b"], [("a", "b")], [])
        with self.assertRaises(SameVertex):
            f_shortest_path(graft, min_join(graft), "a", "a")

    def test_disconnected(self):
        from cathedral.graft import build_graft
        graft = build_graft(["a", "b"], [], [])
        with self.assertRaises(Disconnected):
            f_shortest_path(graft, min_join(graft), "a", "b")


def test_root_profile_primal(path5):
    profile = root_profile(path5.graft, min_join(path5.graft), "a")
    assert profile.primal
    assert profile.a_set == {"a"}
    assert profile.d_set == {"v1", "u1", "u2", "v2"}
    assert profile.c_set == frozenset()
    assert profile.minimum_level == -2


def test_root_profile_with_fringe(path5_pendant):
    profile = root_profile(path5_pendant.graft, min_join(path5_pendant.graft), "a")
    assert not profile.primal
    assert profile.a_set == {"a"}
    assert profile.c_set == {"z"}


def test_primality(path5, path5_pendant, single_vertex, two_k2, double_star):
    assert all(is_primal(path5.graft, r) for r in path5.vertices)
    assert not is_primal(path5_pendant.graft, "a")
    assert is_primal(single_vertex, "x")
    assert not is_primal(two_k2, "u1")
    assert is_primal(double_star.graft, "a1")
    assert not is_primal(double_star.graft, "a2")


def test_join_switch(path5):
    switched, join = join_switch(path5.graft, min_join(path5.graft), "v1", "a")
    assert switched.terminals == {"a", "v2"}
    assert join.edges == {("a", "u2"), ("u2", "v2")}


def test_tower_shift(four_cycle):
    f = min_join(four_cycle.graft)
    shifted, join = tower_shift(four_cycle.graft, f, "a1", "a2")
    assert shifted.terminals == {"b1", "b2"}
    assert join.size == 2
    after = root_profile(shifted, join, "a2")
    assert after.a_set == {"a1", "a2"}
    assert after.d_set == {"b1", "b2"}


def test_tower_shift_errors(path5, path5_pendant):
    with pytest.raises(NotInA):
        tower_shift(path5.graft, min_join(path5.graft), "a", "v1")
    with pytest.raises(NotPrimal):
        tower_shift(path5_pendant.graft, min_join(path5_pendant.graft), "a", "z")


def test_profile_summary(path5_pendant):
    summary = profile_summary(path5_pendant.graft, min_join(path5_pendant.graft), "a")
    assert summary["primal"] is False
    assert summary["C"] == ["z"]
    assert summary["rows"][0] == ["a", 0, "A"]
    assert summary["rows"][-1] == ["z", 1, "C"]
