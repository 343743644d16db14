import json

import pytest

from src.model.grid import CellCoord, build
from src.model.polyfile import (
    document_from_dict, document_to_dict, load_document, parse, parse_document, polyomino_from_dict,
    polyomino_to_dict, serialize,
)
from src.utils.errors import PolySyntaxError
from tests.conftest import THREE_SLITS_TEXT


def test_parse_three_slits(three_slits):
    assert parse(THREE_SLITS_TEXT) == three_slits


def test_parse_single_cell():
    poly = parse("poly 1 1\n")
    assert poly.cells == (CellCoord(0, 0),)


def test_comments_and_blank_lines(three_slits):
    text = "# three slits\n\n" + THREE_SLITS_TEXT.replace("hole slit2 v 2 1", "hole slit2 v 2 1  # central")
    assert parse(text) == three_slits


def test_unknown_axis_names_token():
    with pytest.raises(PolySyntaxError) as info:
        parse("poly 4 5\nhole slit2 q 1 2\n")
    assert info.value.token == 'q'
    assert info.value.line == 2


@pytest.mark.parametrize('text, token', [
    ("poly 4 x\n", 'x'),
    ("hole square 1 1\n", 'hole'),
    ("poly 4 5\nhole blob 1 1\n", 'blob'),
    ("poly 4 5\nwiggle 1 1\n", 'wiggle'),
])
def test_syntax_errors(text, token):
    with pytest.raises(PolySyntaxError) as info:
        parse(text)
    assert info.value.token == token


def test_hole_and_raw_lines_do_not_mix():
    with pytest.raises(PolySyntaxError):
        parse("poly 4 5\nhole slit2 v 1 2\ncut v 2 2\n")


def test_raw_cuts():
    poly = parse("poly 4 5\ncut v 1 2\ncut v 1 3\nremove 2 1\n")
    assert poly.is_raw
    assert len(poly.cuts) == 2
    assert poly.removed == {CellCoord(2, 1)}


def test_faces_block_top_row_first():
    doc = parse_document(THREE_SLITS_TEXT + "faces:\n  1155\n  6156\n  4223\n  2222\n  1155\n")
    assert doc.faces[CellCoord(0, 4)] == 1
    assert doc.faces[CellCoord(1, 3)] == 1
    assert doc.faces[CellCoord(0, 1)] == 2
    assert len(doc.faces) == 20


def test_faces_block_skips_removed_cells():
    doc = parse_document("poly 3 3\nhole square 1 1\nfaces:\n  236\n  2.4\n  134\n")
    assert CellCoord(1, 1) not in doc.faces
    assert doc.faces[CellCoord(2, 1)] == 4


def test_faces_block_wrong_shape():
    with pytest.raises(PolySyntaxError):
        parse_document("poly 2 2\nfaces:\n  12\n")
    with pytest.raises(PolySyntaxError):
        parse_document("poly 2 1\nfaces:\n  17\n")


def test_meta_lines():
    doc = parse_document("poly 2 2\nmeta id sample square\nmeta family none\n")
    assert doc.meta == {'id': 'sample square', 'family': 'none'}


def test_serialize_is_parseable(three_slits):
    faces = {cell: 1 for cell in three_slits.cells}
    doc = parse_document(serialize(three_slits, faces, meta={'id': 'x'}))
    assert doc.polyomino == three_slits
    assert doc.faces == faces
    assert doc.meta == {'id': 'x'}


def test_dict_form(three_slits):
    assert polyomino_from_dict(polyomino_to_dict(three_slits)) == three_slits
    square = build(3, 3, [])
    assert polyomino_from_dict(polyomino_to_dict(square)) == square


def test_document_dict_form(three_slits):
    faces = {cell: 1 + cell.x for cell in three_slits.cells}
    doc = parse_document(serialize(three_slits, faces, meta={'id': 'x'}))
    data = document_to_dict(doc)
    assert data['width'] == 4 and len(data['holes']) == 3
    assert data['faces'][0] == {'x': 0, 'y': 0, 'face': 1}
    assert document_from_dict(data) == doc


def test_load_document_accepts_json(three_slits):
    text = json.dumps(document_to_dict(parse_document(THREE_SLITS_TEXT)))
    assert load_document(text).polyomino == three_slits
    assert load_document(THREE_SLITS_TEXT).polyomino == three_slits


@pytest.mark.parametrize('text', [
    '{"width": 4',
    '{"height": 5}',
    '{"width": 4, "height": 5, "holes": [{"kind": "spiral", "x": 1, "y": 1}]}',
    '{"width": 3, "height": 3, "faces": [{"x": 0, "y": 0, "face": 9}]}',
], ids=['truncated', 'no-width', 'bad-kind', 'bad-face'])
def test_bad_json_documents(text):
    with pytest.raises(PolySyntaxError):
        load_document(text)
