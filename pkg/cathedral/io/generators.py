"""
Seeded and exhaustive graft generators for the CLI and the verification harness.
"""

import logging
from itertools import combinations
from typing import Iterator, List, Optional, Union

import networkx as nx
import numpy as np

from cathedral.config import VERIFY_CONFIG
from cathedral.decomposition import SynthesisSpec, ToothSpec, bare_tooth, is_comb
from cathedral.distance import is_primal, root_profile
from cathedral.exceptions import InfeasibleParameters
from cathedral.graft import BipartiteGraft, Graft, bipartite_from_graft, build_bipartite_graft, build_graft
from cathedral.io.documents import GraftClasses, GraftDocument, relabel_document
from cathedral.joins import min_join

logger = logging.getLogger(__name__)

SeedLike = Union[int, np.random.Generator]

# graph_atlas_g() covers every graph on at most this many vertices
ATLAS_MAX_N = 7


def _rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)


def _labels(prefix: str, n: int) -> List[str]:
    width = len(str(max(n - 1, 0)))
    return [f"{prefix}{i:0{width}d}" for i in range(n)]


def max_edges(n: int, bipartite: bool = False) -> int:
    if bipartite:
        return (n + 1) // 2 * (n // 2)
    return n * (n - 1) // 2


def gen_random_graft(n: int, m: int, density: float, seed: SeedLike, bipartite: bool = False) -> GraftDocument:
    """
    A connected random graft.

    A random spanning tree is laid first (across the two classes when
    bipartite), then m - n + 1 further edges are drawn without repetition.
    Each vertex is a terminal with probability density; an odd draw drops the
    lexicographically last terminal.

    Args:
        n: Number of vertices, at least 1
        m: Number of edges, between n - 1 and the most the graph can hold
        density: Terminal probability in [0, 1]
        seed: Integer seed or numpy Generator
        bipartite: Split the vertices into two classes and only join across them

    Returns:
        A canonical GraftDocument; classes are set when bipartite

    Raises:
        InfeasibleParameters: if n, m or density are out of range
    """
    if n < 1:
        raise InfeasibleParameters(f"Need at least one vertex, got {n}")
    if not 0.0 <= density <= 1.0:
        raise InfeasibleParameters(f"Terminal density {density} is outside [0, 1]")
    if m < n - 1 or m > max_edges(n, bipartite):
        raise InfeasibleParameters(f"{m} edges cannot make a connected {'bipartite ' if bipartite else ''}graph on {n} vertices")

    rng = _rng(seed)
    labels = _labels("v", n)
    order = [labels[i] for i in rng.permutation(n)]
    class_a = frozenset(order[: (n + 1) // 2]) if bipartite else frozenset(labels)
    class_b = frozenset(labels) - class_a if bipartite else frozenset()

    def allowed(u: str, v: str) -> bool:
        return not bipartite or ((u in class_a) != (v in class_a))

    tree = []
    if bipartite and n >= 2:
        placed = [sorted(class_a)[0], sorted(class_b)[0]]
        tree.append((placed[0], placed[1]))
        rest = [v for v in order if v not in placed]
    else:
        placed, rest = order[:1], order[1:]
    for v in rest:
        options = [u for u in placed if allowed(u, v)]
        tree.append((options[int(rng.integers(len(options)))], v))
        placed.append(v)

    used = {frozenset(e) for e in tree}
    spare = [(u, v) for u, v in combinations(labels, 2) if allowed(u, v) and frozenset((u, v)) not in used]
    extra = m - len(tree)
    picked = rng.choice(len(spare), size=extra, replace=False) if extra else []
    edges = tree + [spare[int(i)] for i in sorted(picked)]

    sampled = sorted(v for v, p in zip(labels, rng.random(n)) if p < density)
    if len(sampled) % 2:
        sampled = sampled[:-1]

    classes = GraftClasses(A=sorted(class_a), B=sorted(class_b)) if bipartite else None
    logger.debug(f"Generated graft n={n} m={m} with {len(sampled)} terminals")
    return GraftDocument(vertices=labels, edges=edges, terminals=sampled, classes=classes).canonical()


def random_instance(rng: np.random.Generator, max_n: int, bipartite: bool = False) -> GraftDocument:
    """One random graft with n <= max_n and at most max_random_edges edges."""
    n = int(rng.integers(1, max_n + 1))
    top = min(max_edges(n, bipartite), max(n - 1, VERIFY_CONFIG["max_random_edges"]))
    m = int(rng.integers(n - 1, top + 1))
    return gen_random_graft(n, m, float(rng.random()), rng, bipartite)


def enumerate_small_grafts(max_n: int, bipartite: bool = False) -> Iterator[Union[Graft, BipartiteGraft]]:
    """
    Every connected graph on 1..max_n vertices (up to isomorphism, from the
    networkx atlas) with every even terminal set.
    """
    limit = min(max_n, ATLAS_MAX_N)
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n < 1 or n > limit or not nx.is_connected(g):
            continue
        if bipartite and not nx.is_bipartite(g):
            continue
        labels = _labels("v", n)
        edges = [(labels[u], labels[v]) for u, v in g.edges()]
        for size in range(0, n + 1, 2):
            for terminals in combinations(labels, size):
                graft = build_graft(labels, edges, terminals)
                yield bipartite_from_graft(graft) if bipartite else graft


def _star_comb(spine: str, teeth: List[str]) -> BipartiteGraft:
    terminals = list(teeth) + ([spine] if len(teeth) % 2 else [])
    return build_bipartite_graft([spine] + teeth, [(spine, t) for t in teeth], terminals, [spine], teeth)


def gen_random_comb(seed: SeedLike, max_n: Optional[int] = None) -> BipartiteGraft:
    """
    A random comb with spine a0.. and terminal teeth b0...

    Every tooth takes a partner on the spine; spine vertices with an odd
    number of partners become terminals, so tooth-to-partner edges form a
    minimum join. Candidates failing the comb test are redrawn, falling back
    to a star.
    """
    rng = _rng(seed)
    max_n = max_n or VERIFY_CONFIG["max_skeleton_n"]
    for _ in range(VERIFY_CONFIG["generator_attempts"]):
        s = int(rng.integers(1, max(1, max_n // 2) + 1))
        k = int(rng.integers(0, max_n - s + 1))
        spine, teeth = _labels("a", s), _labels("b", k)
        edges, partners = set(), {}
        for t in teeth:
            p = spine[int(rng.integers(s))]
            partners[p] = partners.get(p, 0) + 1
            edges.add((p, t))
            for a in spine:
                if a != p and rng.random() < 0.3:
                    edges.add((a, t))
        terminals = list(teeth) + [a for a, c in partners.items() if c % 2]
        comb = build_bipartite_graft(spine + teeth, sorted(edges), terminals, spine, teeth)
        if is_comb(comb):
            return comb
    logger.debug("Falling back to a star comb")
    k = int(rng.integers(0, max_n))
    return _star_comb("a0", _labels("b", k))


def gen_random_primal_tooth(seed: SeedLike, label: str, max_n: Optional[int] = None) -> ToothSpec:
    """A random connected bipartite graft primal at some root, labelled label.0, label.1, ..."""
    rng = _rng(seed)
    max_n = max_n or VERIFY_CONFIG["max_tooth_n"]
    for _ in range(VERIFY_CONFIG["generator_attempts"]):
        doc = random_instance(rng, max_n, bipartite=True)
        doc = relabel_document(doc, {v: f"{label}.{i}" for i, v in enumerate(doc.vertices)})
        bg = doc.to_bipartite()
        roots = [r for r in sorted(bg.vertices) if is_primal(bg.graft, r)]
        if roots:
            return ToothSpec(bg, roots[int(rng.integers(len(roots)))])
    return bare_tooth(f"{label}.0")


def gen_random_synthesis_spec(
    seed: SeedLike,
    max_skeleton_n: Optional[int] = None,
    max_tooth_n: Optional[int] = None,
) -> SynthesisSpec:
    """A random comb, a random primal tooth per tooth vertex, and random landings inside each A(r_v)."""
    rng = _rng(seed)
    comb = gen_random_comb(rng, max_skeleton_n)
    teeth, attachments = {}, {}
    for v in sorted(comb.class_b):
        tooth = gen_random_primal_tooth(rng, v, max_tooth_n)
        teeth[v] = tooth
        a_set = sorted(root_profile(tooth.graft.graft, min_join(tooth.graft.graft), tooth.root).a_set)
        for eid in sorted(comb.graph.incident(v)):
            attachments[eid] = a_set[int(rng.integers(len(a_set)))]
    return SynthesisSpec(comb, teeth, attachments)
