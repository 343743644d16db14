"""
Shared polyominoes and helpers for the foldlab tests.
"""

import itertools

import pytest

from src.model.grid import Axis, HoleKind, HoleSpec, SeparationParity, build, separation_parity
from src.utils.config import load_settings
from src.utils.errors import PolyominoError

THREE_SLITS_TEXT = """\
poly 4 5
hole slit2 v 1 2
hole slit2 v 3 2
hole slit2 v 2 1
"""


def slit(x, y, axis='v', kind=HoleKind.SLIT2):
    return HoleSpec(kind, x, y, Axis(axis))


def square(x, y):
    return HoleSpec(HoleKind.SQUARE, x, y)


def vertical_slit_layouts(width, height, counts, kinds=(HoleKind.SLIT2,)):
    """Every valid polyomino with the given numbers of vertical slits, in a fixed order"""
    spots = [
        slit(x, y, kind=kind)
        for kind in kinds
        for x in range(1, width)
        for y in range(1, height - (2 if kind is HoleKind.SLIT2 else 1))
    ]
    for count in counts:
        for holes in itertools.combinations(spots, count):
            try:
                yield build(width, height, holes)
            except PolyominoError:
                continue


def pairwise_even(poly):
    return all(separation_parity(a, b) is SeparationParity.EVEN
               for a, b in itertools.combinations(poly.holes, 2))


@pytest.fixture
def three_slits():
    """4x5 with two outer slits and a central one a row lower"""
    return build(4, 5, [slit(1, 2), slit(3, 2), slit(2, 1)])


@pytest.fixture
def odd_six():
    """6x6, vertical slits one column and one row apart"""
    return build(6, 6, [slit(2, 1), slit(3, 2)])


@pytest.fixture
def even_six():
    return build(6, 6, [slit(1, 1), slit(4, 1)])


@pytest.fixture
def settings(tmp_path, monkeypatch):
    """Defaults only, whatever the user has in ~/.config"""
    monkeypatch.setenv('FOLDLAB_CONFIG', str(tmp_path / 'missing.toml'))
    monkeypatch.delenv('FOLDLAB_NODE_LIMIT', raising=False)
    return load_settings()


@pytest.fixture
def write_poly(tmp_path):
    def write(text, name='input.poly'):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write
