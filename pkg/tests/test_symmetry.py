import pytest

from src.model.grid import Axis, CellCoord, HoleKind, HoleSpec, build
from src.model.symmetry import (
    ALL_SYMMETRIES, IDENTITY, TRANSPOSE, transform_facemapping, transform_labels, transform_polyomino,
)
from src.tools.constructions import fixture_witness
from src.tools.engine import covered_faces, is_consistent


def test_eight_distinct_symmetries():
    assert len(set(ALL_SYMMETRIES)) == 8
    assert IDENTITY in ALL_SYMMETRIES


def test_transpose_swaps_axes(three_slits):
    turned = transform_polyomino(three_slits, TRANSPOSE)
    assert (turned.width, turned.height) == (5, 4)
    assert all(h.axis is Axis.HORIZONTAL for h in turned.holes)
    assert transform_polyomino(turned, TRANSPOSE) == three_slits


@pytest.mark.parametrize('sym', ALL_SYMMETRIES)
def test_inverse_undoes_symmetry(sym, three_slits):
    turned = transform_polyomino(three_slits, sym)
    assert transform_polyomino(turned, sym.inverse()) == three_slits


@pytest.mark.parametrize('sym', ALL_SYMMETRIES)
def test_l_hole_keeps_its_kind(sym):
    poly = build(6, 4, [HoleSpec(HoleKind.L, 2, 2, rotation=0), HoleSpec(HoleKind.SQUARE, 4, 1)])
    turned = transform_polyomino(poly, sym)
    assert [h.kind for h in turned.holes] == [HoleKind.L, HoleKind.SQUARE]
    assert len(turned.cells) == len(poly.cells)


@pytest.mark.parametrize('sym', ALL_SYMMETRIES)
def test_facemapping_follows_the_grid(sym, three_slits):
    fm = fixture_witness('three-slits')
    turned = transform_polyomino(three_slits, sym)
    mapped = transform_facemapping(fm, sym, three_slits.width, three_slits.height)
    assert is_consistent(turned, mapped)
    assert covered_faces(mapped) == covered_faces(fm)


def test_labels_follow_cells():
    labels = {CellCoord(0, 0): 1, CellCoord(2, 0): 3}
    mirrored = transform_labels(labels, ALL_SYMMETRIES[4], 3, 1)
    assert mirrored == {CellCoord(2, 0): 1, CellCoord(0, 0): 3}
