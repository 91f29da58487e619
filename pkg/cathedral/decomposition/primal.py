"""
Recursive certificates for primal bipartite grafts.

A graft primal at r is a synthesis of the skeleton of A(r), which is a comb
primal at r, with teeth that are again primal. Recursing on the teeth ends at
grafts whose skeleton has only single-vertex teeth.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple

from cathedral.decomposition.cathedral import CathedralDecomposition, decompose
from cathedral.decomposition.combs import is_comb
from cathedral.decomposition.synthesis import SynthesisSpec, ToothSpec, spec_from_decomposition, synthesize
from cathedral.distance import is_primal, root_profile
from cathedral.exceptions import NotPrimal, TheoremViolation
from cathedral.graft import BipartiteGraft, EdgeId, Label
from cathedral.joins import JoinLike, min_join, require_minimum
from cathedral.structure import Skeleton, is_extreme, is_maximal_bipartitic_extreme

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimalCertificate:
    graft: BipartiteGraft
    root: Label
    skeleton: Skeleton
    attachments: Dict[EdgeId, Label]
    tooth_roots: Dict[Label, Label]
    children: Dict[Label, "PrimalCertificate"] = field(default_factory=dict)
    base_case: bool = False

    @property
    def comb(self) -> BipartiteGraft:
        return self.skeleton.skeleton

    @property
    def depth(self) -> int:
        return 1 + max((c.depth for c in self.children.values()), default=0)


def _decompose_at_root(bg: BipartiteGraft, join: JoinLike, root: Label) -> CathedralDecomposition:
    a = root_profile(bg.graft, join, root).a_set
    if not is_extreme(bg.graft, join, a):
        raise TheoremViolation("primal-a-extreme", f"A({root}) is not extreme", sorted(a))
    if not is_maximal_bipartitic_extreme(bg, join, a):
        raise TheoremViolation("primal-a-maximal", f"A({root}) is not maximal bipartitic extreme", sorted(a))
    decomposition = decompose(bg, join, a)
    if decomposition.fringe:
        raise TheoremViolation("primal-no-fringe", "a primal graft left a fringe", sorted(decomposition.fringe))
    comb = decomposition.skeleton.skeleton
    if not is_comb(comb, a) or not is_primal(comb.graft, root):
        raise TheoremViolation("primal-skeleton", f"skeleton of A({root}) is not a comb primal at {root}", sorted(a))
    return decomposition


def primal_decompose(
    bg: BipartiteGraft,
    root: Label,
    join: Optional[JoinLike] = None,
    verify: bool = True,
) -> PrimalCertificate:
    """
    Build the recursive certificate of a graft primal at root.

    Each level decomposes around A(root); each tooth is certified at the end
    of its join cut edge. Teeth are strictly smaller than the graft, so the
    recursion ends.

    Args:
        bg: Bipartite graft primal at root
        root: The root vertex
        join: Optional minimum join; one is computed when omitted
        verify: Re-synthesize the certificate and compare with the input

    Raises:
        NotPrimal: if the graft is not primal at root
        TheoremViolation: if a structural fact fails at some level
    """
    if not is_primal(bg.graft, root):
        raise NotPrimal(f"Graft is not primal at {root}")
    f = require_minimum(bg.graft, join) if join is not None else min_join(bg.graft)
    decomposition = _decompose_at_root(bg, f, root)

    children = {}
    for tooth in decomposition.teeth:
        children[tooth.label] = primal_decompose(tooth.graft, tooth.root, tooth.join, verify=False)

    spec = spec_from_decomposition(decomposition)
    certificate = PrimalCertificate(
        graft=bg,
        root=root,
        skeleton=decomposition.skeleton,
        attachments=dict(spec.attachments),
        tooth_roots={t.label: t.root for t in decomposition.teeth},
        children=children,
        base_case=all(len(t.component) == 1 for t in decomposition.teeth),
    )
    if verify:
        rebuilt = resynthesize(certificate)
        if rebuilt.graft != bg.graft:
            raise TheoremViolation("primal-resynthesis", "re-synthesis of the certificate differs from the graft", root)
        logger.info(f"Certified primal graft at {root}: depth {certificate.depth}, {len(children)} teeth at the top")
    return certificate


def resynthesize(certificate: PrimalCertificate) -> BipartiteGraft:
    """Rebuild the certified graft bottom-up, label for label."""
    teeth = {}
    for label, child in certificate.children.items():
        teeth[label] = ToothSpec(resynthesize(child), child.root)
    return synthesize(SynthesisSpec(certificate.comb, teeth, certificate.attachments))


def walk_certificate(certificate: PrimalCertificate) -> Iterator[Tuple[BipartiteGraft, Label]]:
    """Every (graft, root) pair of the certificate, top level first."""
    yield certificate.graft, certificate.root
    for label in sorted(certificate.children):
        yield from walk_certificate(certificate.children[label])
