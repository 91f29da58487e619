"""
Minimum-weight perfect matching on a complete metric over an even node set.

Three interchangeable backends: an exhaustive subset recursion (exact, used
for small node sets), a branch-and-bound search (exact, used above the
exhaustive bound), and networkx's blossom-based min_weight_matching.
"""

import logging
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from cathedral.config import SOLVER_CONFIG

logger = logging.getLogger(__name__)

Pairs = List[Tuple[int, int]]


def _exhaustive(dist: Sequence[Sequence[int]]) -> Pairs:
    n = len(dist)

    @lru_cache(maxsize=None)
    def best(mask: int) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        if mask == 0:
            return 0, ()
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        result = None
        j = 0
        while rest >> j:
            if rest >> j & 1:
                cost, pairs = best(rest & ~(1 << j))
                cost += dist[i][j]
                if result is None or cost < result[0]:
                    result = (cost, ((i, j),) + pairs)
            j += 1
        return result

    return list(best((1 << n) - 1)[1])


def _greedy(dist: Sequence[Sequence[int]]) -> Tuple[int, Pairs]:
    unmatched = list(range(len(dist)))
    cost, pairs = 0, []
    while unmatched:
        i = unmatched.pop(0)
        j = min(unmatched, key=lambda k: (dist[i][k], k))
        unmatched.remove(j)
        cost += dist[i][j]
        pairs.append((i, j))
    return cost, pairs


def _branch_and_bound(dist: Sequence[Sequence[int]]) -> Pairs:
    best_cost, best_pairs = _greedy(dist)

    def lower_bound(unmatched: List[int]) -> float:
        return sum(min(dist[i][j] for j in unmatched if j != i) for i in unmatched) / 2

    def search(unmatched: List[int], cost: int, pairs: Pairs) -> None:
        nonlocal best_cost, best_pairs
        if not unmatched:
            if cost < best_cost:
                best_cost, best_pairs = cost, list(pairs)
            return
        if cost + lower_bound(unmatched) >= best_cost:
            return
        i = unmatched[0]
        for j in sorted(unmatched[1:], key=lambda k: (dist[i][k], k)):
            rest = [k for k in unmatched if k != i and k != j]
            pairs.append((i, j))
            search(rest, cost + dist[i][j], pairs)
            pairs.pop()

    search(list(range(len(dist))), 0, [])
    return best_pairs


def _blossom(dist: Sequence[Sequence[int]]) -> Pairs:
    g = nx.Graph()
    n = len(dist)
    for i in range(n):
        for j in range(i + 1, n):
            g.add_edge(i, j, weight=dist[i][j])
    return sorted(tuple(sorted(p)) for p in nx.min_weight_matching(g))


def min_weight_perfect_matching(dist: Sequence[Sequence[int]], backend: Optional[str] = None) -> Pairs:
    """
    Pair up indices 0..n-1 (n even) minimising the summed distance.

    Args:
        dist: Symmetric distance matrix
        backend: auto, exhaustive, branch-and-bound or networkx; defaults to configuration

    Returns:
        List of index pairs (i, j) with i < j
    """
    n = len(dist)
    if n % 2:
        raise ValueError("Perfect matching needs an even number of nodes")
    if n == 0:
        return []
    backend = backend or SOLVER_CONFIG["matching_backend"]
    if backend == "auto":
        backend = "exhaustive" if n <= SOLVER_CONFIG["exhaustive_matching_max"] else "branch-and-bound"

    if backend == "exhaustive":
        return _exhaustive(dist)
    if backend == "branch-and-bound":
        logger.debug(f"Branch-and-bound matching over {n} nodes")
        return _branch_and_bound(dist)
    if backend == "networkx":
        return _blossom(dist)
    raise ValueError(f"Unknown matching backend: {backend}")
