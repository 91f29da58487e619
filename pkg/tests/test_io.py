#!/usr/bin/env python3
"""
Tests for graft documents, generators and the JSON / DOT emitters.
"""

import json
import os
import sys
import unittest

import networkx as nx
import pytest

# Add parent directory to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cathedral.decomposition import decompose, is_comb, primal_decompose, synthesize
from cathedral.distance import is_primal
from cathedral.exceptions import DocumentValidationError, InfeasibleParameters, ParseError
from cathedral.io import (
    GraftDocument,
    certificate_to_dict,
    document_from_graft,
    dump_document,
    emit_decomposition,
    emit_dot,
    enumerate_small_grafts,
    gen_random_comb,
    gen_random_graft,
    gen_random_primal_tooth,
    gen_random_synthesis_spec,
    load_graft_file,
    parse_graft_file,
    relabel_document,
    save_graft_file,
    spec_from_documents,
)
from cathedral.joins import min_join

K2_TEXT = '{"vertices": ["u", "v"], "edges": [["u", "v"]], "terminals": ["u", "v"]}'

PATH5_DOC = {
    "vertices": ["v1", "u1", "a", "u2", "v2"],
    "edges": [["v1", "u1"], ["u1", "a"], ["a", "u2"], ["u2", "v2"]],
    "terminals": ["v1", "v2"],
    "classes": {"A": ["v1", "a", "v2"], "B": ["u1", "u2"]},
}


class TestParse(unittest.TestCase):
    """Parsing and validation of graft documents."""

    def test_k2(self):
        doc = parse_graft_file(K2_TEXT.encode("utf-8"))
        graft = doc.to_graft()
        self.assertEqual(graft.terminals, {"u", "v"})
        self.assertEqual([e.id for e in graft.edges], [("u", "v")])

    def test_path5_with_classes(self):
        bg = parse_graft_file(json.dumps(PATH5_DOC)).to_bipartite()
        self.assertEqual(bg.class_a, {"v1", "a", "v2"})
        self.assertEqual(len(bg.graph.edges), 4)

    def test_terminal_outside_vertices(self):
        with self.assertRaises(DocumentValidationError):
            parse_graft_file('{"vertices": ["u"], "terminals": ["w"]}')

    def test_odd_terminals(self):
        with self.assertRaises(DocumentValidationError):
            parse_graft_file('{"vertices": ["u"], "terminals": ["u"]}')

    def test_missing_field(self):
        with self.assertRaises(DocumentValidationError) as ctx:
            parse_graft_file('{"edges": []}')
        self.assertIn("vertices", str(ctx.exception))

    def test_bad_json_has_position(self):
        with self.assertRaises(ParseError) as ctx:
            parse_graft_file('{"vertices": ["u",\n]}')
        self.assertIn("line 2", str(ctx.exception))

    def test_not_utf8(self):
        with self.assertRaises(ParseError):
            parse_graft_file(b"\xff\xfe")


def test_dump_is_canonical():
    shuffled = GraftDocument(vertices=["v", "u"], edges=[("v", "u")], terminals=["v", "u"])
    ordered = GraftDocument(vertices=["u", "v"], edges=[("u", "v")], terminals=["u", "v"])
    assert dump_document(shuffled) == dump_document(ordered)
    assert dump_document(ordered) == dump_document(parse_graft_file(dump_document(ordered)))
    assert dump_document(ordered).endswith(b"}\n")
    assert "attachments" not in json.loads(dump_document(ordered))


def test_save_and_load(tmp_path, path5):
    target = tmp_path / "path5.json"
    save_graft_file(document_from_graft(path5), target)
    assert load_graft_file(target).to_bipartite() == path5


def test_relabel():
    doc = parse_graft_file(K2_TEXT)
    renamed = relabel_document(doc, {"u": "x"})
    assert renamed.vertices == ["v", "x"]
    assert renamed.edges == [("v", "x")]


def test_spec_from_documents(path5):
    skeleton = GraftDocument(
        vertices=["a", "b1", "b2"],
        edges=[("a", "b1"), ("a", "b2")],
        terminals=["b1", "b2"],
        classes={"A": ["a"], "B": ["b1", "b2"]},
        attachments=[("a", "b1", "u1")],
    )
    teeth = [
        GraftDocument(vertices=[u, v], edges=[(u, v)], terminals=[u, v], classes={"A": [u], "B": [v]}, root=u, tooth_of=t)
        for t, u, v in (("b1", "u1", "v1"), ("b2", "u2", "v2"))
    ]
    spec = spec_from_documents(skeleton, teeth)
    assert spec.attachments == {("a", "b1"): "u1"}
    assert synthesize(spec) == path5


def test_spec_from_documents_needs_roots():
    skeleton = GraftDocument(vertices=["a"])
    with pytest.raises(DocumentValidationError):
        spec_from_documents(skeleton, [GraftDocument(vertices=["q"], tooth_of="a")])


class TestGenerators(unittest.TestCase):

    def test_single_vertex(self):
        doc = gen_random_graft(1, 0, 0.0, 7)
        self.assertEqual(doc.vertices, ["v0"])
        self.assertEqual(doc.edges, [])
        self.assertEqual(doc.terminals, [])

    def test_k2(self):
        doc = gen_random_graft(2, 1, 1.0, 7)
        self.assertEqual(doc.edges, [("v0", "v1")])
        self.assertEqual(doc.terminals, ["v0", "v1"])

    def test_deterministic(self):
        self.assertEqual(dump_document(gen_random_graft(8, 12, 0.5, 2024)), dump_document(gen_random_graft(8, 12, 0.5, 2024)))

    def test_connected_with_even_terminals(self):
        for seed in range(10):
            graft = gen_random_graft(7, 9, 0.6, seed).to_graft()
            self.assertEqual(len(graft.edges), 9)
            self.assertEqual(len(graft.graph.components()), 1)
            self.assertEqual(len(graft.terminals) % 2, 0)

    def test_bipartite(self):
        doc = gen_random_graft(6, 8, 0.5, 11, bipartite=True)
        bg = doc.to_bipartite()
        self.assertTrue(nx.is_bipartite(bg.graph.nx_graph))
        self.assertEqual(len(bg.graph.components()), 1)

    def test_large_seed(self):
        doc = gen_random_graft(3, 2, 0.5, 2**64 + 5)
        self.assertEqual(len(doc.edges), 2)

    def test_infeasible(self):
        with self.assertRaises(InfeasibleParameters):
            gen_random_graft(0, 0, 0.5, 1)
        with self.assertRaises(InfeasibleParameters):
            gen_random_graft(4, 7, 0.5, 1)
        with self.assertRaises(InfeasibleParameters):
            gen_random_graft(4, 3, 1.5, 1)
        with self.assertRaises(InfeasibleParameters):
            gen_random_graft(4, 5, 0.5, 1, bipartite=True)


def test_enumerate_small_grafts():
    assert len(list(enumerate_small_grafts(3))) == 11
    assert len(list(enumerate_small_grafts(3, bipartite=True))) == 7
    assert list(enumerate_small_grafts(0)) == []


def test_random_comb_and_tooth():
    for seed in range(5):
        assert is_comb(gen_random_comb(seed))
        tooth = gen_random_primal_tooth(seed, "t")
        assert is_primal(tooth.graft.graft, tooth.root)
        assert all(v.startswith("t.") for v in tooth.graft.vertices)


def test_random_synthesis_spec_synthesizes():
    for seed in range(3):
        spec = gen_random_synthesis_spec(seed)
        graft = synthesize(spec)
        expected = set(spec.spine).union(*(spec.tooth(v).graft.vertices for v in spec.tooth_labels))
        assert graft.vertices == expected


def test_emit_decomposition(path5):
    decomposition = decompose(path5, min_join(path5.graft), {"a"})
    first = emit_decomposition(decomposition)
    assert first == emit_decomposition(decomposition)
    payload = json.loads(first)
    assert payload["spine"] == ["a"]
    assert [t["root"] for t in payload["teeth"]] == ["u1", "u2"]
    assert payload["teeth"][0]["attachment"] == ["a", "u1"]
    assert payload["fringe"] == []
    assert len(payload["join"]) == 4


def test_certificate_dict(path5):
    payload = certificate_to_dict(primal_decompose(path5, "a"))
    assert payload["root"] == "a"
    assert payload["depth"] == 3
    assert [t["root"] for t in payload["teeth"]] == ["u1", "u2"]
    assert payload["teeth"][0]["certificate"]["base_case"] is True


def test_dot_single_vertex(single_vertex):
    text = emit_dot(single_vertex).decode("utf-8")
    assert text == 'graph G {\n  "x";\n}\n'


def test_dot_decomposition(path5_pendant):
    decomposition = decompose(path5_pendant, min_join(path5_pendant.graft), {"a"})
    text = emit_dot(decomposition).decode("utf-8")
    assert text.startswith("graph G {")
    assert "subgraph cluster0" in text
    assert "subgraph cluster1" in text
    assert '"u1" -- "v1" [style=dashed];' in text
    assert '"a" -- "z";' in text
    assert 'fillcolor="lightgray"' in text
    assert text == emit_dot(decomposition).decode("utf-8")
