"""
JSON graft documents: parsing, validation and canonical dumping.
"""

import json
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple, Union

from pydantic import BaseModel, Field, ValidationError

from cathedral.config import OUTPUT_CONFIG
from cathedral.decomposition import SynthesisSpec, ToothSpec
from cathedral.exceptions import CathedralError, DocumentValidationError, ParseError
from cathedral.graft import BipartiteGraft, Graft, bipartite_from_graft, build_bipartite_graft, build_graft, edge_id

logger = logging.getLogger(__name__)


class GraftClasses(BaseModel):
    A: List[str]
    B: List[str]


class GraftDocument(BaseModel):
    """
    A graft as stored on disk.

    root and tooth_of mark tooth files for synthesis; attachments are
    [spine, tooth, tooth-vertex] triples on skeleton files.
    """

    vertices: List[str]
    edges: List[Tuple[str, str]] = Field(default_factory=list)
    terminals: List[str] = Field(default_factory=list)
    classes: Optional[GraftClasses] = None
    root: Optional[str] = None
    tooth_of: Optional[str] = None
    attachments: List[Tuple[str, str, str]] = Field(default_factory=list)

    def canonical(self) -> "GraftDocument":
        """Sorted copy: vertices, edges (each pair sorted), terminals, classes and attachments."""
        classes = None
        if self.classes is not None:
            classes = GraftClasses(A=sorted(self.classes.A), B=sorted(self.classes.B))
        return GraftDocument(
            vertices=sorted(self.vertices),
            edges=sorted(edge_id(u, v) for u, v in self.edges),
            terminals=sorted(self.terminals),
            classes=classes,
            root=self.root,
            tooth_of=self.tooth_of,
            attachments=sorted(self.attachments),
        )

    def to_graft(self) -> Graft:
        return build_graft(self.vertices, self.edges, self.terminals)

    def to_bipartite(self) -> BipartiteGraft:
        """Use the stored classes, or two-colour the graph when there are none."""
        if self.classes is None:
            return bipartite_from_graft(self.to_graft())
        return build_bipartite_graft(self.vertices, self.edges, self.terminals, self.classes.A, self.classes.B)

    def attachment_map(self) -> Dict[Tuple[str, str], str]:
        return {edge_id(a, v): x for a, v, x in self.attachments}


def document_from_graft(
    graft: Union[Graft, BipartiteGraft],
    root: Optional[str] = None,
    tooth_of: Optional[str] = None,
) -> GraftDocument:
    """Document for a graft; edges are written by their endpoints."""
    base = graft.graft if isinstance(graft, BipartiteGraft) else graft
    classes = None
    if isinstance(graft, BipartiteGraft):
        classes = GraftClasses(A=sorted(graft.class_a), B=sorted(graft.class_b))
    doc = GraftDocument(
        vertices=list(base.vertices),
        edges=[e.ends for e in base.edges],
        terminals=list(base.terminals),
        classes=classes,
        root=root,
        tooth_of=tooth_of,
    )
    return doc.canonical()


def _location(error: dict) -> str:
    return ".".join(str(part) for part in error["loc"]) or "<document>"


def parse_graft_file(data: Union[bytes, str]) -> GraftDocument:
    """
    Parse and validate a graft document.

    Args:
        data: UTF-8 JSON text

    Returns:
        A validated GraftDocument

    Raises:
        ParseError: if the text is not UTF-8 JSON (with line and column)
        DocumentValidationError: if fields are missing or the graft is invalid
    """
    try:
        text = data.decode("utf-8") if isinstance(data, bytes) else data
    except UnicodeDecodeError as e:
        raise ParseError(f"Document is not UTF-8: {e}")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno}, column {e.colno}: {e.msg}")

    try:
        doc = GraftDocument.model_validate(raw)
    except ValidationError as e:
        details = "; ".join(f"{_location(err)}: {err['msg']}" for err in e.errors())
        raise DocumentValidationError(details)

    try:
        if doc.classes is not None:
            doc.to_bipartite()
        else:
            doc.to_graft()
    except CathedralError as e:
        raise DocumentValidationError(f"{type(e).__name__}: {e}")
    logger.debug(f"Parsed graft document with {len(doc.vertices)} vertices")
    return doc


def load_graft_file(path: Union[str, Path]) -> GraftDocument:
    return parse_graft_file(Path(path).read_bytes())


def dump_document(doc: GraftDocument) -> bytes:
    """Canonical JSON; byte-identical for equal documents."""
    payload = doc.canonical().model_dump(exclude_none=True)
    if not payload["attachments"]:
        del payload["attachments"]
    return (json.dumps(payload, indent=OUTPUT_CONFIG["json_indent"]) + "\n").encode("utf-8")


def save_graft_file(doc: GraftDocument, path: Union[str, Path]) -> None:
    Path(path).write_bytes(dump_document(doc))


def relabel_document(doc: GraftDocument, mapping: Dict[str, str]) -> GraftDocument:
    def rename(labels: Iterable[str]) -> List[str]:
        return [mapping.get(v, v) for v in labels]

    classes = None
    if doc.classes is not None:
        classes = GraftClasses(A=rename(doc.classes.A), B=rename(doc.classes.B))
    return GraftDocument(
        vertices=rename(doc.vertices),
        edges=[(mapping.get(u, u), mapping.get(v, v)) for u, v in doc.edges],
        terminals=rename(doc.terminals),
        classes=classes,
        root=mapping.get(doc.root, doc.root) if doc.root is not None else None,
        tooth_of=doc.tooth_of,
        attachments=[tuple(rename(t)) for t in doc.attachments],
    ).canonical()


def spec_from_documents(skeleton: GraftDocument, teeth: Iterable[GraftDocument]) -> SynthesisSpec:
    """
    Assemble a synthesis spec from a skeleton file and tooth files.

    Raises:
        DocumentValidationError: if a tooth file lacks tooth_of or root, or two files claim one tooth
    """
    comb = skeleton.to_bipartite()
    tooth_specs: Dict[str, ToothSpec] = {}
    for doc in teeth:
        if doc.tooth_of is None or doc.root is None:
            raise DocumentValidationError("Tooth documents need both tooth_of and root")
        if doc.tooth_of in tooth_specs:
            raise DocumentValidationError(f"Two tooth documents for {doc.tooth_of}")
        tooth_specs[doc.tooth_of] = ToothSpec(doc.to_bipartite(), doc.root)
    return SynthesisSpec(comb, tooth_specs, skeleton.attachment_map())
