"""
Rectangular polyominoes with holes.

Coordinates: origin bottom-left, x to the right, y up. Cells are unit squares
addressed by their bottom-left vertex. A cut segment is a unit grid edge that
no longer attaches the two cells on either side of it.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

from ..geometry.cube import Direction
from ..utils.errors import BoundaryError, DisconnectedError, OverlapError, WrongFamily

logger = logging.getLogger(__name__)

ROTATIONS = (0, 90, 180, 270)


class Axis(str, Enum):
    VERTICAL = 'v'
    HORIZONTAL = 'h'

    @property
    def other(self):
        return Axis.HORIZONTAL if self is Axis.VERTICAL else Axis.VERTICAL


class CellCoord(NamedTuple):
    x: int
    y: int

    def step(self, direction: Direction) -> 'CellCoord':
        return CellCoord(self.x + direction.dx, self.y + direction.dy)

    def corners(self) -> Tuple[Tuple[int, int], ...]:
        """Grid vertices in placement order: BL, BR, TR, TL"""
        x, y = self
        return ((x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1))


class CutSegment(NamedTuple):
    """Unit grid edge from (x, y) up to (x, y+1) or right to (x+1, y)"""
    axis: Axis
    x: int
    y: int

    @property
    def endpoints(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        if self.axis is Axis.VERTICAL:
            return (self.x, self.y), (self.x, self.y + 1)
        return (self.x, self.y), (self.x + 1, self.y)

    @property
    def cells(self) -> Tuple[CellCoord, CellCoord]:
        """The two cells on either side, lower/left one first"""
        if self.axis is Axis.VERTICAL:
            return CellCoord(self.x - 1, self.y), CellCoord(self.x, self.y)
        return CellCoord(self.x, self.y - 1), CellCoord(self.x, self.y)

    def __str__(self):
        return f"{'V' if self.axis is Axis.VERTICAL else 'H'}({self.x},{self.y})"


def V(x, y) -> CutSegment:
    return CutSegment(Axis.VERTICAL, x, y)


def H(x, y) -> CutSegment:
    return CutSegment(Axis.HORIZONTAL, x, y)


def edge_between(a: CellCoord, b: CellCoord) -> CutSegment:
    """Grid edge shared by two edge-adjacent cells"""
    if a.y == b.y and abs(a.x - b.x) == 1:
        return V(max(a.x, b.x), a.y)
    if a.x == b.x and abs(a.y - b.y) == 1:
        return H(a.x, max(a.y, b.y))
    raise ValueError(f"cells {a} and {b} are not adjacent")


class HoleKind(str, Enum):
    SQUARE = 'square'
    L = 'L'
    U = 'U'
    SLIT2 = 'slit2'
    SLIT1 = 'slit1'


class SeparationParity(str, Enum):
    EVEN = 'even'
    ODD = 'odd'
    INCOMPARABLE = 'incomparable'


# L arms from the corner vertex (x, y), per rotation
_L_CUTS = {
    0: lambda x, y: (H(x, y), V(x, y)),
    90: lambda x, y: (V(x, y), H(x - 1, y)),
    180: lambda x, y: (H(x - 1, y), V(x, y - 1)),
    270: lambda x, y: (V(x, y - 1), H(x, y)),
}
# mirroring left/right maps rotation r to this one
_L_MIRROR = {0: 90, 90: 0, 180: 270, 270: 180}

# U around the flap cell (x, y), named by the open side
_U_CUTS = {
    0: lambda x, y: (H(x, y), V(x, y), V(x + 1, y)),
    90: lambda x, y: (V(x + 1, y), H(x, y), H(x, y + 1)),
    180: lambda x, y: (H(x, y + 1), V(x, y), V(x + 1, y)),
    270: lambda x, y: (V(x, y), H(x, y), H(x, y + 1)),
}


@dataclass(frozen=True)
class HoleSpec:
    """One simple hole.

    The anchor (x, y) is the removed cell for squares, the lower/left endpoint
    for slits, the corner vertex for L holes and the flap cell for U holes.
    """
    kind: HoleKind
    x: int
    y: int
    axis: Optional[Axis] = None
    rotation: int = 0
    flipped: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'kind', HoleKind(self.kind))
        if self.axis is not None:
            object.__setattr__(self, 'axis', Axis(self.axis))
        if self.rotation not in ROTATIONS:
            raise ValueError(f"rotation must be one of {ROTATIONS}, got {self.rotation}")
        if self.is_slit and self.axis is None:
            raise ValueError(f"{self.kind.value} hole needs an axis")
        if not self.is_slit and self.axis is not None:
            raise ValueError(f"{self.kind.value} hole takes no axis")
        if self.flipped:
            if self.kind is not HoleKind.L:
                raise ValueError("only L holes can be flipped")
            # a mirrored L is an L at another rotation
            object.__setattr__(self, 'rotation', _L_MIRROR[self.rotation])
            object.__setattr__(self, 'flipped', False)
        if self.kind in (HoleKind.SQUARE, HoleKind.SLIT1, HoleKind.SLIT2) and self.rotation:
            raise ValueError(f"{self.kind.value} hole takes no rotation")

    @property
    def is_slit(self) -> bool:
        return self.kind in (HoleKind.SLIT2, HoleKind.SLIT1)

    @property
    def length(self) -> int:
        return {HoleKind.SLIT2: 2, HoleKind.SLIT1: 1}.get(self.kind, 0)

    @property
    def crease(self) -> int:
        """Grid line the slit lies on"""
        if not self.is_slit:
            raise WrongFamily(f"{self.kind.value} hole has no crease")
        return self.x if self.axis is Axis.VERTICAL else self.y

    @property
    def midpoint2(self) -> int:
        """Twice the slit midpoint along its own axis"""
        if not self.is_slit:
            raise WrongFamily(f"{self.kind.value} hole has no midpoint")
        start = self.y if self.axis is Axis.VERTICAL else self.x
        return 2 * start + self.length

    def translated(self, dx: int, dy: int) -> 'HoleSpec':
        return HoleSpec(self.kind, self.x + dx, self.y + dy, self.axis, self.rotation)

    def expand(self) -> Tuple[FrozenSet[CellCoord], FrozenSet[CutSegment]]:
        return expand_hole(self)

    def __str__(self):
        if self.kind is HoleKind.SQUARE:
            return f"square@({self.x},{self.y})"
        if self.is_slit:
            return f"{self.kind.value}-{self.axis.value}@({self.x},{self.y})"
        return f"{self.kind.value}-r{self.rotation}@({self.x},{self.y})"


def expand_hole(h: HoleSpec) -> Tuple[FrozenSet[CellCoord], FrozenSet[CutSegment]]:
    """Removed cells and cut segments of a hole"""
    x, y = h.x, h.y
    if h.kind is HoleKind.SQUARE:
        return frozenset({CellCoord(x, y)}), frozenset()
    if h.kind is HoleKind.SLIT1:
        return frozenset(), frozenset({CutSegment(h.axis, x, y)})
    if h.kind is HoleKind.SLIT2:
        if h.axis is Axis.VERTICAL:
            return frozenset(), frozenset({V(x, y), V(x, y + 1)})
        return frozenset(), frozenset({H(x, y), H(x + 1, y)})
    if h.kind is HoleKind.L:
        return frozenset(), frozenset(_L_CUTS[h.rotation](x, y))
    return frozenset(), frozenset(_U_CUTS[h.rotation](x, y))


def _vertices(cells: Iterable[CellCoord], cuts: Iterable[CutSegment]) -> Set[Tuple[int, int]]:
    points = set()
    for c in cells:
        points.update(c.corners())
    for s in cuts:
        points.update(s.endpoints)
    return points


def separation_parity(h1: HoleSpec, h2: HoleSpec) -> SeparationParity:
    """Parity of the row (column) distance between two same-axis slit midpoints.

    Even or Odd only when the midpoints are a whole number of rows apart. A
    unit slit against a length-2 slit has midpoints an odd number of half
    rows apart and is Incomparable, as is any pair of differently oriented
    slits or a pair involving a non-slit hole.
    """
    if not (h1.is_slit and h2.is_slit) or h1.axis is not h2.axis:
        return SeparationParity.INCOMPARABLE
    diff = abs(h1.midpoint2 - h2.midpoint2)
    if diff % 2:
        return SeparationParity.INCOMPARABLE
    return SeparationParity.EVEN if (diff // 2) % 2 == 0 else SeparationParity.ODD


@dataclass(frozen=True)
class Polyomino:
    width: int
    height: int
    removed: FrozenSet[CellCoord] = field(default_factory=frozenset)
    cuts: FrozenSet[CutSegment] = field(default_factory=frozenset)
    holes: Tuple[HoleSpec, ...] = ()

    @property
    def is_raw(self) -> bool:
        """Built from bare cuts and removed cells rather than hole specs"""
        return not self.holes and bool(self.removed or self.cuts)

    @property
    def is_hole_free(self) -> bool:
        return not self.removed and not self.cuts

    @cached_property
    def cells(self) -> Tuple[CellCoord, ...]:
        """Present cells, ordered by row then column"""
        return tuple(
            CellCoord(x, y)
            for y in range(self.height)
            for x in range(self.width)
            if CellCoord(x, y) not in self.removed
        )

    @cached_property
    def cell_set(self) -> FrozenSet[CellCoord]:
        return frozenset(self.cells)

    @cached_property
    def anchor(self) -> CellCoord:
        """Lexicographically least present cell"""
        return min(self.cells)

    def has_cell(self, c) -> bool:
        return c in self.cell_set

    def is_attached(self, a: CellCoord, b: CellCoord) -> bool:
        return (a in self.cell_set and b in self.cell_set
                and edge_between(a, b) not in self.cuts)

    def edge_attached(self, edge: CutSegment) -> bool:
        a, b = edge.cells
        return a in self.cell_set and b in self.cell_set and edge not in self.cuts

    def neighbors(self, cell: CellCoord) -> List[Tuple[Direction, CellCoord]]:
        """Attached neighbours, in direction order right, up, left, down"""
        result = []
        for direction in (Direction.RIGHT, Direction.UP, Direction.LEFT, Direction.DOWN):
            other = cell.step(direction)
            if self.is_attached(cell, other):
                result.append((direction, other))
        return result

    @cached_property
    def attached_edges(self) -> Tuple[CutSegment, ...]:
        """Interior creases: edges between two attached cells"""
        edges = set()
        for cell in self.cells:
            for direction in (Direction.RIGHT, Direction.UP):
                other = cell.step(direction)
                if self.is_attached(cell, other):
                    edges.add(edge_between(cell, other))
        return tuple(sorted(edges))

    def hole_indices(self) -> List[int]:
        return list(range(len(self.holes)))

    @property
    def slit_only(self) -> bool:
        return bool(self.holes) and all(h.is_slit for h in self.holes)

    def __str__(self):
        return f"{self.width}x{self.height} polyomino with {len(self.holes) or 'raw'} holes"


def _check_cut_interior(cut: CutSegment, width: int, height: int):
    (x0, y0), (x1, y1) = cut.endpoints
    if not (1 <= x0 and x1 <= width - 1 and 1 <= y0 and y1 <= height - 1):
        raise BoundaryError(f"cut {cut} touches the boundary of a {width}x{height} rectangle")


def _check_cell_interior(cell: CellCoord, width: int, height: int):
    if not (1 <= cell.x <= width - 2 and 1 <= cell.y <= height - 2):
        raise BoundaryError(f"removed cell {tuple(cell)} is not strictly interior")


def _check_connected(poly: Polyomino):
    if not poly.cells:
        raise DisconnectedError("polyomino has no cells")
    start = poly.cells[0]
    seen = {start}
    queue = deque([start])
    while queue:
        cell = queue.popleft()
        for _, other in poly.neighbors(cell):
            if other not in seen:
                seen.add(other)
                queue.append(other)
    if len(seen) != len(poly.cells):
        raise DisconnectedError(f"{len(poly.cells) - len(seen)} cells are cut off")


def build(width: int, height: int, holes: Sequence[HoleSpec] = ()) -> Polyomino:
    """Build a polyomino from simple holes, validating every invariant"""
    if width < 1 or height < 1:
        raise ValueError(f"dimensions must be positive, got {width}x{height}")

    removed: Set[CellCoord] = set()
    cuts: Set[CutSegment] = set()
    used_vertices: Dict[Tuple[int, int], int] = {}

    for index, hole in enumerate(holes):
        hole_cells, hole_cuts = expand_hole(hole)
        for cell in hole_cells:
            _check_cell_interior(cell, width, height)
        for cut in hole_cuts:
            _check_cut_interior(cut, width, height)
        if hole_cells & removed or hole_cuts & cuts:
            raise OverlapError(f"hole {index} ({hole}) overlaps an earlier hole")
        for point in _vertices(hole_cells, hole_cuts):
            if point in used_vertices:
                raise OverlapError(
                    f"hole {index} ({hole}) touches hole {used_vertices[point]} at {point}")
        for point in _vertices(hole_cells, hole_cuts):
            used_vertices[point] = index
        removed |= hole_cells
        cuts |= hole_cuts

    poly = Polyomino(width, height, frozenset(removed), frozenset(cuts), tuple(holes))
    _check_connected(poly)
    return poly


def from_cuts(width: int, height: int, cuts: Iterable[CutSegment] = (),
              removed: Iterable[CellCoord] = ()) -> Polyomino:
    """Build a raw polyomino from bare cuts and removed cells"""
    if width < 1 or height < 1:
        raise ValueError(f"dimensions must be positive, got {width}x{height}")
    cuts = frozenset(CutSegment(Axis(c[0]), c[1], c[2]) for c in cuts)
    removed = frozenset(CellCoord(*c) for c in removed)
    for cut in cuts:
        _check_cut_interior(cut, width, height)
    for cell in removed:
        _check_cell_interior(cell, width, height)
    poly = Polyomino(width, height, removed, cuts, ())
    _check_connected(poly)
    return poly


def fill_holes(poly: Polyomino, keep: Iterable[int]) -> Polyomino:
    """Keep only the holes listed by index, reattaching everything else.

    Kept holes are renumbered in their original order.
    """
    keep = sorted(set(keep))
    if poly.is_raw:
        raise WrongFamily("raw polyominoes have no hole indices to fill")
    for index in keep:
        if not 0 <= index < len(poly.holes):
            raise IndexError(f"no hole {index} in {poly}")
    if len(keep) == len(poly.holes):
        return poly
    return build(poly.width, poly.height, [poly.holes[i] for i in keep])


def hole_free(width: int, height: int) -> Polyomino:
    return build(width, height, [])
