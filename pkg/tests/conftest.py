"""
Pytest configuration file.

Shared graft fixtures. Labels are chosen so that sorted order matches the
order in which the tests reason about vertices.
"""

import os

import pytest


def pytest_configure(config):
    """Configure test environment."""
    os.environ['LOG_LEVEL'] = 'DEBUG'
    os.environ['GRAFT_SEED'] = '42'
    os.environ['GRAFT_PROGRESS'] = 'False'


@pytest.fixture
def k2():
    """A single edge u-v with both ends terminals."""
    from cathedral.graft import build_graft
    return build_graft(["u", "v"], [("u", "v")], ["u", "v"])


@pytest.fixture
def single_vertex():
    from cathedral.graft import build_graft
    return build_graft(["x"], [], [])


@pytest.fixture
def two_k2():
    from cathedral.graft import build_graft
    return build_graft(["u1", "u2", "v1", "v2"], [("u1", "v1"), ("u2", "v2")], ["u1", "u2", "v1", "v2"])


@pytest.fixture
def path5():
    """v1 - u1 - a - u2 - v2 with terminals at both ends; every vertex is primal."""
    from cathedral.graft import build_bipartite_graft
    return build_bipartite_graft(
        ["v1", "u1", "a", "u2", "v2"],
        [("v1", "u1"), ("u1", "a"), ("a", "u2"), ("u2", "v2")],
        ["v1", "v2"],
        ["v1", "a", "v2"],
        ["u1", "u2"],
    )


@pytest.fixture
def path5_pendant():
    """PATH5 with a non-terminal leaf z hanging off a; z is the fringe of {a}."""
    from cathedral.graft import build_bipartite_graft
    return build_bipartite_graft(
        ["v1", "u1", "a", "u2", "v2", "z"],
        [("v1", "u1"), ("u1", "a"), ("a", "u2"), ("u2", "v2"), ("a", "z")],
        ["v1", "v2"],
        ["v1", "a", "v2"],
        ["u1", "u2", "z"],
    )


@pytest.fixture
def four_cycle():
    """a1 - b1 - a2 - b2 - a1, all four terminals: a factor-connected comb."""
    from cathedral.graft import build_bipartite_graft
    return build_bipartite_graft(
        ["a1", "b1", "a2", "b2"],
        [("a1", "b1"), ("b1", "a2"), ("a2", "b2"), ("b2", "a1")],
        ["a1", "a2", "b1", "b2"],
        ["a1", "a2"],
        ["b1", "b2"],
    )


@pytest.fixture
def double_star():
    """
    Spine a1, a2; teeth b1..b4 with a1 ~ b1, b2 and a2 ~ b2, b3, b4.
    The unique minimum join is {a1b1, a1b2, a2b3, a2b4}; primal at a1 only.
    """
    from cathedral.graft import build_bipartite_graft
    return build_bipartite_graft(
        ["a1", "a2", "b1", "b2", "b3", "b4"],
        [("a1", "b1"), ("a1", "b2"), ("a2", "b2"), ("a2", "b3"), ("a2", "b4")],
        ["b1", "b2", "b3", "b4"],
        ["a1", "a2"],
        ["b1", "b2", "b3", "b4"],
    )


@pytest.fixture
def k2_tooth():
    """Factory: a K2 tooth u-v, both terminals, rooted at u."""
    from cathedral.decomposition import ToothSpec
    from cathedral.graft import build_bipartite_graft

    def make(u, v):
        return ToothSpec(build_bipartite_graft([u, v], [(u, v)], [u, v], [u], [v]), u)

    return make


@pytest.fixture
def star_comb():
    """Spine a with teeth b1, b2, both terminals."""
    from cathedral.graft import build_bipartite_graft
    return build_bipartite_graft(["a", "b1", "b2"], [("a", "b1"), ("a", "b2")], ["b1", "b2"], ["a"], ["b1", "b2"])


@pytest.fixture
def star_spec(star_comb, k2_tooth):
    """Gluing K2 teeth into the star comb gives PATH5 back."""
    from cathedral.decomposition import SynthesisSpec
    return SynthesisSpec(star_comb, {"b1": k2_tooth("u1", "v1"), "b2": k2_tooth("u2", "v2")})
