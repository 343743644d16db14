import itertools

import pytest

from src.model.grid import (
    Axis, CellCoord, H, HoleKind, HoleSpec, SeparationParity, V, build, edge_between, expand_hole,
    fill_holes, from_cuts, hole_free, separation_parity,
)
from src.model.recognize import as_hole_polyomino, match_hole, recognize_holes
from src.utils.errors import BoundaryError, DisconnectedError, OverlapError, WrongFamily
from tests.conftest import slit, square


def test_build_square_hole():
    poly = build(3, 3, [square(1, 1)])
    assert poly.removed == {CellCoord(1, 1)}
    assert not poly.cuts
    assert len(poly.cells) == 8


def test_build_three_slits(three_slits):
    assert len(three_slits.cuts) == 6
    assert not three_slits.removed
    assert len(three_slits.cells) == 20


def test_hole_free_two_by_two():
    poly = hole_free(2, 2)
    assert len(poly.cells) == 4
    assert set(poly.attached_edges) == {V(1, 0), V(1, 1), H(0, 1), H(1, 1)}
    assert poly.is_hole_free and not poly.is_raw


def test_expand_hole():
    assert expand_hole(square(1, 1)) == ({CellCoord(1, 1)}, set())
    assert expand_hole(slit(1, 1)) == (set(), {V(1, 1), V(1, 2)})
    assert expand_hole(slit(1, 1, 'h')) == (set(), {H(1, 1), H(2, 1)})
    assert expand_hole(slit(1, 1, kind=HoleKind.SLIT1)) == (set(), {V(1, 1)})
    assert expand_hole(HoleSpec(HoleKind.U, 1, 1)) == (set(), {H(1, 1), V(1, 1), V(2, 1)})


def test_l_hole_arms_share_a_vertex():
    for rotation in (0, 90, 180, 270):
        _, cuts = expand_hole(HoleSpec(HoleKind.L, 2, 2, rotation=rotation))
        first, second = sorted(cuts)
        assert first.axis is not second.axis
        assert set(first.endpoints) & set(second.endpoints) == {(2, 2)}


def test_flipped_l_is_another_rotation():
    flipped = HoleSpec(HoleKind.L, 2, 2, rotation=0, flipped=True)
    assert flipped.rotation == 90
    assert not flipped.flipped


def test_u_hole_leaves_flap_attached_once():
    poly = build(3, 3, [HoleSpec(HoleKind.U, 1, 1)])
    assert [cell for _, cell in poly.neighbors(CellCoord(1, 1))] == [CellCoord(1, 2)]


@pytest.mark.parametrize('spec', [
    dict(kind=HoleKind.SQUARE, x=1, y=1, axis='v'),
    dict(kind=HoleKind.SLIT2, x=1, y=1),
    dict(kind=HoleKind.SQUARE, x=1, y=1, rotation=90),
    dict(kind=HoleKind.U, x=1, y=1, rotation=45),
    dict(kind=HoleKind.U, x=1, y=1, flipped=True),
])
def test_invalid_hole_specs(spec):
    with pytest.raises(ValueError):
        HoleSpec(**spec)


def test_hole_on_boundary():
    with pytest.raises(BoundaryError):
        build(3, 3, [square(0, 0)])
    with pytest.raises(BoundaryError):
        build(4, 5, [slit(1, 0)])


def test_holes_touching_at_a_vertex():
    with pytest.raises(OverlapError):
        build(4, 7, [slit(1, 1), slit(1, 3)])
    with pytest.raises(OverlapError):
        build(5, 5, [square(1, 1), square(2, 2)])
    # the same cuts given raw are one length-4 slit, not two simple holes
    raw = from_cuts(4, 7, [('v', 1, y) for y in range(1, 5)])
    assert as_hole_polyomino(raw) is None


def test_disconnected_cell():
    with pytest.raises(DisconnectedError):
        from_cuts(4, 4, [('v', 1, 1), ('v', 2, 1), ('h', 1, 1), ('h', 1, 2)])


def test_fill_holes(three_slits):
    outer = fill_holes(three_slits, {0, 1})
    assert outer.holes == (slit(1, 2), slit(3, 2))
    assert len(outer.cuts) == 4
    assert fill_holes(three_slits, {0, 1, 2}) is three_slits
    assert fill_holes(three_slits, set()) == hole_free(4, 5)
    with pytest.raises(IndexError):
        fill_holes(three_slits, {3})


def test_fill_holes_on_raw_polyomino():
    raw = from_cuts(4, 5, [('v', 1, 2), ('v', 1, 3)])
    with pytest.raises(WrongFamily):
        fill_holes(raw, [])


def test_separation_parity(three_slits):
    outer_left, outer_right, central = three_slits.holes
    assert separation_parity(outer_left, outer_right) is SeparationParity.EVEN
    assert separation_parity(outer_left, central) is SeparationParity.ODD
    assert separation_parity(outer_left, slit(1, 1, 'h')) is SeparationParity.INCOMPARABLE
    assert separation_parity(outer_left, square(2, 2)) is SeparationParity.INCOMPARABLE


def test_crease_and_midpoint():
    hole = slit(3, 2)
    assert hole.crease == 3
    assert hole.midpoint2 == 6
    with pytest.raises(WrongFamily):
        square(1, 1).crease


def test_edge_between():
    assert edge_between(CellCoord(0, 0), CellCoord(1, 0)) == V(1, 0)
    assert edge_between(CellCoord(0, 1), CellCoord(0, 0)) == H(0, 1)
    with pytest.raises(ValueError):
        edge_between(CellCoord(0, 0), CellCoord(1, 1))


def test_recognize_simple_holes(three_slits):
    raw = from_cuts(4, 5, three_slits.cuts)
    assert raw.is_raw
    components = recognize_holes(raw)
    assert all(c.is_simple for c in components)
    rebuilt = as_hole_polyomino(raw)
    assert rebuilt.cuts == three_slits.cuts
    assert sorted(rebuilt.holes, key=str) == sorted(three_slits.holes, key=str)


def test_long_slit_is_not_simple():
    raw = from_cuts(4, 6, [('v', 1, 1), ('v', 1, 2), ('v', 1, 3)])
    assert as_hole_polyomino(raw) is None
    assert match_hole([], [V(1, 1), V(1, 2), V(1, 3)]) is None


def test_match_hole_finds_l():
    spec = HoleSpec(HoleKind.L, 2, 2, rotation=180)
    cells, cuts = expand_hole(spec)
    assert match_hole(cells, cuts) == spec
    assert Axis('h') is Axis.HORIZONTAL


def test_unit_slit_against_long_slit():
    assert separation_parity(slit(1, 2, kind=HoleKind.SLIT1), slit(3, 2)) is SeparationParity.INCOMPARABLE
    assert separation_parity(slit(1, 1, kind=HoleKind.SLIT1), slit(3, 2, kind=HoleKind.SLIT1)) \
        is SeparationParity.ODD
    assert separation_parity(slit(1, 1, kind=HoleKind.SLIT1), slit(3, 1)) is SeparationParity.INCOMPARABLE


@pytest.fixture
def four_holes():
    return build(8, 8, [slit(2, 1), slit(5, 4), square(2, 5), slit(4, 1, 'h')])


def _subsets(n):
    return [set(c) for r in range(n + 1) for c in itertools.combinations(range(n), r)]


@pytest.mark.parametrize('keep', _subsets(4), ids=lambda s: ''.join(map(str, sorted(s))) or 'none')
def test_fill_holes_idempotent_and_monotone(four_holes, keep):
    filled = fill_holes(four_holes, keep)
    assert fill_holes(filled, range(len(filled.holes))) == filled
    for larger in _subsets(4):
        if not keep <= larger:
            continue
        wider = fill_holes(four_holes, larger)
        order = sorted(larger)
        assert fill_holes(wider, [order.index(i) for i in keep]) == filled
        assert filled.cuts <= wider.cuts
        assert filled.removed <= wider.removed
