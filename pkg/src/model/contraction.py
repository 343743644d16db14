"""
Plain-band contraction: deleting two hole-free rows (or columns) at once.

A contraction is only offered when the deleted band can be put back as two
180 degree folded copies of a neighbouring row, so every facemapping of the
result lifts to the original (see tools.engine.lift_contraction).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from ..utils.errors import NotPlainError
from .grid import Axis, CellCoord, CutSegment, Polyomino, build
from .symmetry import TRANSPOSE, transform_polyomino

logger = logging.getLogger(__name__)


class BandAxis(str, Enum):
    ROWS = 'rows'
    COLUMNS = 'columns'


class LiftSide(str, Enum):
    """Which neighbour of the band is copied back in when lifting (below = left for columns)"""
    BELOW = 'below'
    ABOVE = 'above'


@dataclass(frozen=True)
class Contraction:
    axis: BandAxis
    index: int
    side: LiftSide

    def __str__(self):
        return f"{self.axis.value}[{self.index},{self.index + 1}]<-{self.side.value}"


def _row_is_clean(poly: Polyomino, y: int) -> bool:
    """No removed cell and no vertical cut in row y"""
    return all(
        CellCoord(x, y) not in poly.removed and CutSegment(Axis.VERTICAL, x, y) not in poly.cuts
        for x in range(poly.width)
    )


def _line_is_clean(poly: Polyomino, y: int) -> bool:
    """No horizontal cut on grid line y"""
    return all(CutSegment(Axis.HORIZONTAL, x, y) not in poly.cuts for x in range(poly.width))


def _row_side(poly: Polyomino, index: int) -> Optional[LiftSide]:
    if not 0 <= index or index + 1 >= poly.height or poly.height - 2 < 1:
        return None
    if not (_row_is_clean(poly, index) and _row_is_clean(poly, index + 1)
            and _line_is_clean(poly, index + 1)):
        return None
    if index >= 1 and _line_is_clean(poly, index) and _row_is_clean(poly, index - 1):
        return LiftSide.BELOW
    if index + 2 <= poly.height - 1 and _line_is_clean(poly, index + 2) and _row_is_clean(poly, index + 2):
        return LiftSide.ABOVE
    return None


def contraction_side(poly: Polyomino, axis: BandAxis, index: int) -> Optional[LiftSide]:
    """Side the band can be lifted from, or None when the band is not plain"""
    if axis is BandAxis.COLUMNS:
        return _row_side(transform_polyomino(poly, TRANSPOSE), index)
    return _row_side(poly, index)


def plain_bands(poly: Polyomino) -> List[Contraction]:
    bands = []
    for axis, length in ((BandAxis.ROWS, poly.height), (BandAxis.COLUMNS, poly.width)):
        for index in range(length - 1):
            side = contraction_side(poly, axis, index)
            if side is not None:
                bands.append(Contraction(axis, index, side))
    return bands


def _contract_rows(poly: Polyomino, index: int) -> Polyomino:
    def shifted(y):
        return y - 2 if y >= index + 2 else y

    if poly.holes:
        holes = []
        for hole in poly.holes:
            cells, cuts = hole.expand()
            lowest = min([c.y for c in cells] + [s.y for s in cuts])
            holes.append(hole.translated(0, -2) if lowest >= index + 2 else hole)
        return build(poly.width, poly.height - 2, holes)

    return Polyomino(
        poly.width, poly.height - 2,
        frozenset(CellCoord(c.x, shifted(c.y)) for c in poly.removed),
        frozenset(CutSegment(s.axis, s.x, shifted(s.y)) for s in poly.cuts),
        (),
    )


def contract_plain_band(poly: Polyomino, axis: BandAxis, index: int) -> Polyomino:
    """Delete rows (columns) index and index+1; holes beyond them move back by two"""
    if contraction_side(poly, axis, index) is None:
        raise NotPlainError(f"{axis.value} {index},{index + 1} of {poly} are not a plain band")
    if axis is BandAxis.COLUMNS:
        reduced = _contract_rows(transform_polyomino(poly, TRANSPOSE), index)
        return transform_polyomino(reduced, TRANSPOSE)
    return _contract_rows(poly, index)


def contract(poly: Polyomino, contraction: Contraction) -> Polyomino:
    return contract_plain_band(poly, contraction.axis, contraction.index)
