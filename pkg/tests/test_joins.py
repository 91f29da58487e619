#!/usr/bin/env python3
"""
Tests for the minimum join solver, the matching backends and the exhaustive oracles.
"""

import os
import sys
import unittest

import pytest

# Add parent directory to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cathedral.config import SOLVER_CONFIG
from cathedral.exceptions import NotMinimumJoin, TooLarge
from cathedral.graft import build_graft
from cathedral.joins import (
    Join,
    allowed_edges,
    check_negative_circuits,
    enumerate_circuits,
    enumerate_min_joins,
    factor_components,
    is_join,
    join_size,
    min_join,
    min_join_bruteforce,
    min_weight_perfect_matching,
    require_minimum,
)

DOUBLE_STAR_JOIN = {("a1", "b1"), ("a1", "b2"), ("a2", "b3"), ("a2", "b4")}


class TestMatchingBackends(unittest.TestCase):
    """All backends must agree on the optimum."""

    def setUp(self):
        self.dist = [
            [0, 1, 3, 2],
            [1, 0, 2, 3],
            [3, 2, 0, 1],
            [2, 3, 1, 0],
        ]

    def test_backends_agree(self):
        for backend in ("exhaustive", "branch-and-bound", "networkx"):
            with self.subTest(backend=backend):
                self.assertEqual(min_weight_perfect_matching(self.dist, backend), [(0, 1), (2, 3)])

    def test_empty(self):
        self.assertEqual(min_weight_perfect_matching([]), [])

    def test_odd_size_rejected(self):
        with self.assertRaises(ValueError):
            min_weight_perfect_matching([[0]])

    def test_unknown_backend(self):
        with self.assertRaises(ValueError):
            min_weight_perfect_matching(self.dist, "simplex")


def test_k2(k2):
    join = min_join(k2)
    assert join.size == 1
    assert join.sorted_edges() == [("u", "v")]
    assert is_join(k2, join)


def test_no_terminals(single_vertex):
    assert min_join(single_vertex).size == 0


def test_path_join_is_whole_path(path5):
    assert min_join(path5.graft).edges == path5.graph.edge_ids


def test_disconnected(two_k2):
    assert min_join(two_k2).edges == {("u1", "v1"), ("u2", "v2")}


def test_double_star_unique_join(double_star):
    assert min_join(double_star.graft).edges == DOUBLE_STAR_JOIN
    assert [set(j) for j in enumerate_min_joins(double_star.graft)] == [DOUBLE_STAR_JOIN]


def test_oracle_is_lexicographically_least(four_cycle):
    assert min_join_bruteforce(four_cycle.graft).sorted_edges() == [("a1", "b1"), ("a2", "b2")]
    assert len(enumerate_min_joins(four_cycle.graft)) == 2
    assert min_join(four_cycle.graft).size == 2


def test_join_size_without_parity(path5):
    assert join_size(path5.graph, {"v1", "v2"}) == 4
    assert join_size(path5.graph, {"v1"}) is None


def test_require_minimum(path5, four_cycle):
    assert require_minimum(path5.graft, path5.graph.edge_ids).size == 4
    with pytest.raises(NotMinimumJoin):
        require_minimum(four_cycle.graft, four_cycle.graph.edge_ids)


def test_allowed_edges_and_factor_components(double_star, path5_pendant):
    assert allowed_edges(double_star.graft) == DOUBLE_STAR_JOIN
    factors = factor_components(double_star.graft)
    assert factors.components == (frozenset({"a1", "b1", "b2"}), frozenset({"a2", "b3", "b4"}))
    assert factors.trivial == ()
    assert factor_components(path5_pendant.graft).trivial == (frozenset({"z"}),)


def test_circuits(four_cycle, path5):
    assert [len(c) for c in enumerate_circuits(four_cycle.graph)] == [4]
    assert enumerate_circuits(path5.graph) == []


def test_negative_circuit_lemmas(four_cycle):
    assert check_negative_circuits(four_cycle.graft, min_join(four_cycle.graft)).passed


def test_negative_circuit_found_for_long_join():
    graft = build_graft(["a1", "a2", "b1", "b2"], [("a1", "b1"), ("b1", "a2"), ("a2", "b2"), ("b2", "a1")], ["a1", "b1"])
    detour = Join({("a2", "b1"), ("a2", "b2"), ("a1", "b2")})
    assert is_join(graft, detour)
    report = check_negative_circuits(graft, detour)
    assert not report.passed
    assert "negative-circuit" in {v.property for v in report.violations}


def test_oracle_bound(monkeypatch, four_cycle):
    monkeypatch.setitem(SOLVER_CONFIG, "bruteforce_max_edges", 3)
    with pytest.raises(TooLarge):
        min_join_bruteforce(four_cycle.graft)
