import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spiralchain import corpus
from spiralchain.coloring import color_graph
from spiralchain.document import (
    GraphDocument,
    parse_coloring,
    parse_document,
    parse_faces,
    parse_graph,
    serialize_coloring,
    serialize_document,
    serialize_faces,
    serialize_graph,
)
from spiralchain.errors import BadRotation, DocumentSyntaxError, NotCubic
from spiralchain.generate import gen_random
from spiralchain.graph import CubicGraph
from spiralchain.nonplanar import NearPlanarSpec


def _canon(text):
    return "\n".join(line.split("#")[0].strip() for line in text.splitlines() if line.split("#")[0].strip())


@pytest.mark.parametrize("name", corpus.NAMES)
def test_corpus_round_trip(name):
    text = corpus.load_text(name)
    doc = parse_document(text)
    assert _canon(serialize_document(doc)) == _canon(text)
    assert parse_document(serialize_document(doc)) == doc


def test_k4_document_is_cubic_graph():
    assert isinstance(corpus.load_graph("k4"), CubicGraph)


def test_tutte_document():
    g = corpus.load_graph("tutte")
    assert (g.n, g.m) == (46, 69)


def test_nonplanar_documents_become_specs():
    assert isinstance(corpus.load_graph("k33_apex"), NearPlanarSpec)
    assert isinstance(corpus.load_graph("k33_doublecross"), NearPlanarSpec)


def test_missing_rotation_entry():
    lines = [ln for ln in corpus.load_text("k4").splitlines() if not ln.startswith("rotation 3 ")]
    with pytest.raises(BadRotation):
        parse_graph("\n".join(lines))


def test_syntax_error_carries_line():
    text = "format cubic-embedding-v1\nvertices 4\nedge 0 0 x\n"
    with pytest.raises(DocumentSyntaxError) as ei:
        parse_document(text)
    assert ei.value.line == 3
    assert "line 3" in str(ei.value)


def test_unknown_keyword():
    with pytest.raises(DocumentSyntaxError):
        parse_document("format cubic-embedding-v1\nvertices 2\nbogus 1\n")


def test_wrong_format_tag():
    with pytest.raises(DocumentSyntaxError):
        parse_document("format something-else\nvertices 2\n")


def test_validation_errors_propagate():
    text = corpus.load_text("k4").replace("edge 5 2 3", "edge 5 2 0")
    with pytest.raises((NotCubic, BadRotation)):
        parse_graph(text)


def test_comments_and_blank_lines_ignored():
    text = "# hello\n\n" + corpus.load_text("k4") + "\n# bye\n"
    assert parse_graph(text) == corpus.load_graph("k4")


@given(st.integers(2, 15).map(lambda k: 2 * k), st.integers(0, 5000))
def test_generated_round_trip(n, seed):
    g = gen_random(n, seed)
    text = serialize_graph(g)
    h = parse_graph(text)
    assert h == g and h.outer_face == g.outer_face
    assert serialize_graph(h) == text


def test_declarations_round_trip():
    base = corpus.load_document("k33_doublecross")
    for doc in (
        GraphDocument(6, base.edges, base.rotation, crossings=[(1, 5), (0, 8)]),
        GraphDocument(6, base.edges, base.rotation, outer=[0, 3, 1], apex=2),
    ):
        assert parse_document(serialize_document(doc)) == doc


def test_coloring_text_round_trip(k4):
    c, report = color_graph(k4)
    text = serialize_coloring(c, report)
    assert parse_coloring(text) == c
    assert "outcome \"success\"" in text


def test_coloring_json_round_trip(k4):
    c, report = color_graph(k4)
    text = serialize_coloring(c, report, fmt="json")
    payload = json.loads(text)
    assert payload["report"]["outcome"] == "success"
    assert parse_coloring(text) == c


def test_coloring_rejects_bad_color():
    with pytest.raises(DocumentSyntaxError):
        parse_coloring("format edge-coloring-v1\ncolor 0 4\n")


def test_faces_round_trip():
    f = {0: 0, 1: 3, 2: 1, 3: 2}
    assert parse_faces(serialize_faces(f)) == f
