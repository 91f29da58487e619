"""
JSON and DOT emitters for grafts, decompositions and primal certificates.
"""

import json
import logging
from typing import Any, Dict, Iterable, List, Mapping, Optional, Union

from cathedral.config import OUTPUT_CONFIG
from cathedral.decomposition import CathedralDecomposition, PrimalCertificate
from cathedral.graft import BipartiteGraft, EdgeId, Graft, sorted_edges
from cathedral.io.documents import document_from_graft
from cathedral.joins import JoinLike, as_edges

logger = logging.getLogger(__name__)


def _edges(edges: Iterable[EdgeId]) -> List[List[str]]:
    return [list(e) for e in sorted_edges(edges)]


def _to_bytes(payload: Any) -> bytes:
    return (json.dumps(payload, indent=OUTPUT_CONFIG["json_indent"]) + "\n").encode("utf-8")


def certificate_to_dict(certificate: PrimalCertificate) -> Dict[str, Any]:
    return {
        "root": certificate.root,
        "base_case": certificate.base_case,
        "depth": certificate.depth,
        "vertices": sorted(certificate.graft.vertices),
        "spine": sorted(certificate.skeleton.spine),
        "skeleton": document_from_graft(certificate.comb).model_dump(exclude_none=True, exclude={"attachments"}),
        "teeth": [
            {
                "label": label,
                "root": certificate.tooth_roots[label],
                "vertices": sorted(certificate.skeleton.teeth[label]),
                "certificate": certificate_to_dict(certificate.children[label]),
            }
            for label in sorted(certificate.children)
        ],
    }


def decomposition_to_dict(
    decomposition: CathedralDecomposition,
    certificates: Optional[Mapping[str, PrimalCertificate]] = None,
) -> Dict[str, Any]:
    """Spine, skeleton, teeth (with roots, attachment edges and optional certificates), fringe and join."""
    certificates = certificates or {}
    teeth = []
    for tooth in sorted(decomposition.teeth, key=lambda t: t.label):
        entry = {
            "label": tooth.label,
            "vertices": sorted(tooth.component),
            "root": tooth.root,
            "attachment": list(tooth.attachment),
            "terminals": sorted(tooth.graft.terminals),
            "join": _edges(tooth.join.edges),
        }
        if tooth.label in certificates:
            entry["certificate"] = certificate_to_dict(certificates[tooth.label])
        teeth.append(entry)
    return {
        "spine": sorted(decomposition.spine),
        "skeleton": document_from_graft(decomposition.skeleton.skeleton).model_dump(exclude_none=True, exclude={"attachments"}),
        "teeth": teeth,
        "fringe": sorted(decomposition.fringe),
        "join": _edges(decomposition.join.edges),
    }


def emit_decomposition(
    decomposition: CathedralDecomposition,
    certificates: Optional[Mapping[str, PrimalCertificate]] = None,
) -> bytes:
    return _to_bytes(decomposition_to_dict(decomposition, certificates))


def emit_certificate(certificate: PrimalCertificate) -> bytes:
    return _to_bytes(certificate_to_dict(certificate))


def emit_json(payload: Any) -> bytes:
    return _to_bytes(payload)


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(
    subject: Union[Graft, BipartiteGraft, CathedralDecomposition],
    join: Optional[JoinLike] = None,
) -> bytes:
    """
    DOT text for a graft or a decomposition.

    Terminals are double circles and join edges dashed. For a decomposition,
    spine, tooth and fringe vertices are filled with their configured colours
    and each tooth is drawn as a cluster.
    """
    colours = OUTPUT_CONFIG["dot_colors"]
    fill: Dict[str, str] = {}
    clusters: List[tuple] = []
    if isinstance(subject, CathedralDecomposition):
        graft = subject.graft.graft
        f = subject.join.edges if join is None else as_edges(join)
        fill.update({v: colours["spine"] for v in subject.spine})
        fill.update({v: colours["fringe"] for v in subject.fringe})
        for tooth in sorted(subject.teeth, key=lambda t: t.label):
            fill.update({v: colours["tooth"] for v in tooth.component})
            clusters.append((tooth.label, sorted(tooth.component)))
    else:
        graft = subject.graft if isinstance(subject, BipartiteGraft) else subject
        f = as_edges(join) if join is not None else frozenset()

    lines = ["graph G {"]
    in_cluster = {v for _, members in clusters for v in members}

    def node(v: str, indent: str) -> str:
        attrs = []
        if v in graft.terminals:
            attrs.append("shape=doublecircle")
        if v in fill:
            attrs.append(f'style=filled, fillcolor="{fill[v]}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        return f"{indent}{_quote(v)}{suffix};"

    for i, (label, members) in enumerate(clusters):
        lines.append(f"  subgraph cluster{i} {{")
        lines.append(f"    label = {_quote(label)};")
        lines.extend(node(v, "    ") for v in members)
        lines.append("  }")
    lines.extend(node(v, "  ") for v in sorted(graft.vertices) if v not in in_cluster)

    for e in sorted(graft.edges, key=lambda e: e.id):
        style = " [style=dashed]" if e.id in f else ""
        lines.append(f"  {_quote(e.u)} -- {_quote(e.v)}{style};")
    lines.append("}")
    logger.debug(f"Emitted DOT with {len(graft.vertices)} nodes")
    return ("\n".join(lines) + "\n").encode("utf-8")
