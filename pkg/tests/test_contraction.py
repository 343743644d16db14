import itertools

import pytest

from src.model.contraction import (
    BandAxis, Contraction, LiftSide, contract, contract_plain_band, contraction_side, plain_bands,
)
from src.model.grid import build, separation_parity
from src.model.symmetry import TRANSPOSE, transform_polyomino
from src.tools.engine import is_consistent, lift_contraction, project_contraction
from src.tools.search import FacemappingSearch
from src.utils.errors import NotPlainError
from tests.conftest import slit


@pytest.fixture
def tall():
    """6x7 with two plain rows at the bottom"""
    return build(6, 7, [slit(2, 3), slit(3, 4)])


def test_contract_bottom_rows(tall):
    assert contraction_side(tall, BandAxis.ROWS, 0) is LiftSide.ABOVE
    reduced = contract_plain_band(tall, BandAxis.ROWS, 0)
    assert (reduced.width, reduced.height) == (6, 5)
    assert reduced.holes == (slit(2, 1), slit(3, 2))


def test_band_through_a_slit(tall):
    with pytest.raises(NotPlainError):
        contract_plain_band(tall, BandAxis.ROWS, 3)


def test_no_plain_band_in_three_slits(three_slits):
    assert plain_bands(three_slits) == []


def test_contract_columns(tall):
    wide = transform_polyomino(tall, TRANSPOSE)
    reduced = contract_plain_band(wide, BandAxis.COLUMNS, 0)
    assert (reduced.width, reduced.height) == (5, 6)
    assert transform_polyomino(reduced, TRANSPOSE) == contract_plain_band(tall, BandAxis.ROWS, 0)


def test_lift_then_project(tall):
    step = Contraction(BandAxis.ROWS, 0, LiftSide.ABOVE)
    reduced = contract(tall, step)
    fm = next(iter(FacemappingSearch(reduced)))
    lifted = lift_contraction(tall, reduced, fm, step)
    assert is_consistent(tall, lifted)
    assert project_contraction(tall, lifted, step) == fm


def test_lift_columns(tall):
    wide = transform_polyomino(tall, TRANSPOSE)
    step = next(b for b in plain_bands(wide) if b.axis is BandAxis.COLUMNS)
    reduced = contract(wide, step)
    fm = next(iter(FacemappingSearch(reduced)))
    lifted = lift_contraction(wide, reduced, fm, step)
    assert is_consistent(wide, lifted)
    assert project_contraction(wide, lifted, step) == fm


def test_band_between_cut_rows_has_no_lift_side():
    # rows 3 and 4 are hole-free, but both neighbouring rows carry a slit
    poly = build(6, 8, [slit(2, 1), slit(3, 5)])
    assert contraction_side(poly, BandAxis.ROWS, 3) is None
    with pytest.raises(NotPlainError):
        contract_plain_band(poly, BandAxis.ROWS, 3)


@pytest.mark.parametrize('poly', [
    build(6, 7, [slit(2, 3), slit(3, 4)]),
    build(6, 10, [slit(2, 1), slit(3, 6)]),
    build(8, 9, [slit(2, 5), slit(5, 6), slit(3, 2)]),
], ids=['6x7', '6x10', '8x9'])
def test_contraction_keeps_separation_parity(poly):
    bands = plain_bands(poly)
    assert bands
    pairs = list(itertools.combinations(range(len(poly.holes)), 2))
    for band in bands:
        reduced = contract(poly, band)
        for i, j in pairs:
            assert separation_parity(reduced.holes[i], reduced.holes[j]) \
                is separation_parity(poly.holes[i], poly.holes[j])
