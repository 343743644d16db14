"""
The eight symmetries of a rectangle acting on polyominoes and facemappings.

A symmetry mirrors x first (when `mirror` is set) and then rotates by
`rotation` quarter turns counter-clockwise, swapping width and height on odd
turns.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from ..geometry.cube import Placement
from .facemapping import Facemapping
from .grid import Axis, CellCoord, CutSegment, HoleSpec, Polyomino, build, expand_hole
from .recognize import match_hole

_CORNER_SLOTS = {(0, 0): 0, (1, 0): 1, (1, 1): 2, (0, 1): 3}


@dataclass(frozen=True)
class GridSymmetry:
    rotation: int = 0
    mirror: bool = False

    def dimensions(self, width: int, height: int) -> Tuple[int, int]:
        return (height, width) if self.rotation % 2 else (width, height)

    def map_vertex(self, x: int, y: int, width: int, height: int) -> Tuple[int, int]:
        if self.mirror:
            x = width - x
        for _ in range(self.rotation):
            x, y = height - y, x
            width, height = height, width
        return x, y

    def map_cell(self, cell: CellCoord, width: int, height: int) -> CellCoord:
        points = [self.map_vertex(px, py, width, height) for px, py in cell.corners()]
        return CellCoord(min(p[0] for p in points), min(p[1] for p in points))

    def map_segment(self, seg: CutSegment, width: int, height: int) -> CutSegment:
        (ax, ay), (bx, by) = [self.map_vertex(px, py, width, height) for px, py in seg.endpoints]
        if ax == bx:
            return CutSegment(Axis.VERTICAL, ax, min(ay, by))
        return CutSegment(Axis.HORIZONTAL, min(ax, bx), ay)

    def map_placement(self, cell: CellCoord, p: Placement, width: int, height: int
                      ) -> Tuple[CellCoord, Placement]:
        """Image of a cell and its placement; corner vertices follow the grid corners"""
        points = [self.map_vertex(px, py, width, height) for px, py in cell.corners()]
        nx = min(q[0] for q in points)
        ny = min(q[1] for q in points)
        corners = [0] * 4
        for (qx, qy), vertex in zip(points, p):
            corners[_CORNER_SLOTS[(qx - nx, qy - ny)]] = vertex
        return CellCoord(nx, ny), Placement(*corners)

    def map_hole(self, hole: HoleSpec, width: int, height: int) -> HoleSpec:
        cells, cuts = expand_hole(hole)
        mapped = match_hole(
            {self.map_cell(c, width, height) for c in cells},
            {self.map_segment(s, width, height) for s in cuts},
        )
        if mapped is None or mapped.kind is not hole.kind:
            raise ValueError(f"{hole} has no image of the same kind under {self}")
        return mapped

    def inverse(self) -> 'GridSymmetry':
        # probe on a rectangle with distinct sides so rotations are told apart
        probe = [(0, 0), (1, 0), (0, 1), (2, 1)]
        width, height = 3, 2
        new_w, new_h = self.dimensions(width, height)
        for candidate in ALL_SYMMETRIES:
            images = [self.map_vertex(x, y, width, height) for x, y in probe]
            back = [candidate.map_vertex(x, y, new_w, new_h) for x, y in images]
            if back == probe:
                return candidate
        raise AssertionError(f"no inverse for {self}")


ALL_SYMMETRIES = tuple(GridSymmetry(r, m) for m in (False, True) for r in range(4))
IDENTITY = GridSymmetry(0, False)
# reflection in the main diagonal: (x, y) -> (y, x)
TRANSPOSE = GridSymmetry(3, True)


def transform_polyomino(poly: Polyomino, sym: GridSymmetry) -> Polyomino:
    width, height = poly.width, poly.height
    new_w, new_h = sym.dimensions(width, height)
    if poly.holes:
        return build(new_w, new_h, [sym.map_hole(h, width, height) for h in poly.holes])
    return Polyomino(
        new_w, new_h,
        frozenset(sym.map_cell(c, width, height) for c in poly.removed),
        frozenset(sym.map_segment(s, width, height) for s in poly.cuts),
        (),
    )


def transform_facemapping(fm: Facemapping, sym: GridSymmetry, width: int, height: int) -> Facemapping:
    """Facemapping of the transformed polyomino; width/height are the source dimensions"""
    mapped: Dict[CellCoord, Placement] = {}
    for cell, p in fm.items():
        new_cell, new_p = sym.map_placement(cell, p, width, height)
        mapped[new_cell] = new_p
    return Facemapping.from_dict(mapped)


def transform_labels(labels: Dict[CellCoord, int], sym: GridSymmetry, width: int, height: int
                     ) -> Dict[CellCoord, int]:
    return {sym.map_cell(c, width, height): v for c, v in labels.items()}
