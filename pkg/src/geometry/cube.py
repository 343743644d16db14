"""
Rolling-cube algebra.

A cell of the grid sits on the unit cube as a Placement: the cube vertices that
its bottom-left, bottom-right, top-right and top-left corners map to. Vertex ids
are 0..7 with bit i holding the coordinate along axis i. Moving to the adjacent
cell across a 90 degree crease rolls the placement onto the neighbouring face,
across a 180 degree crease it flips back onto the same face.
"""

import logging
from enum import Enum
from functools import lru_cache
from itertools import permutations
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple

import numpy as np

logger = logging.getLogger(__name__)

FACE_COUNT = 6
ALL_FACES = frozenset(range(1, FACE_COUNT + 1))

# (axis bit, coordinate on that axis) -> face label of the standard net
_FACE_BY_AXIS = {
    (4, 0): 1, (4, 1): 4,
    (2, 1): 2, (2, 0): 6,
    (1, 1): 3, (1, 0): 5,
}
_AXIS_BY_FACE = {label: key for key, label in _FACE_BY_AXIS.items()}
OPPOSITE_FACE = {1: 4, 4: 1, 2: 6, 6: 2, 3: 5, 5: 3}


class Direction(Enum):
    RIGHT = (1, 0)
    UP = (0, 1)
    LEFT = (-1, 0)
    DOWN = (0, -1)

    @property
    def dx(self):
        return self.value[0]

    @property
    def dy(self):
        return self.value[1]

    @property
    def opposite(self):
        return _OPPOSITE_DIRECTION[self]

    @property
    def is_horizontal(self):
        return self.dy == 0


_OPPOSITE_DIRECTION = {
    Direction.RIGHT: Direction.LEFT,
    Direction.LEFT: Direction.RIGHT,
    Direction.UP: Direction.DOWN,
    Direction.DOWN: Direction.UP,
}
DIRECTIONS = (Direction.RIGHT, Direction.UP, Direction.LEFT, Direction.DOWN)


class FoldAngle(Enum):
    FOLD90 = 90
    FOLD180 = 180


class Placement(NamedTuple):
    """Cube vertices of a cell's corners, counter-clockwise from bottom-left"""
    bl: int
    br: int
    tr: int
    tl: int

    def to_list(self):
        return list(self)


def normal_mask(p: Placement) -> int:
    """Bit of the axis all four corners agree on"""
    for bit in (1, 2, 4):
        values = {v & bit for v in p}
        if len(values) == 1:
            return bit
    raise ValueError(f"{p} is not a cube face")


def is_valid_placement(p) -> bool:
    """Check that p lists the vertices of one cube face in cyclic order"""
    if len(p) != 4 or len(set(p)) != 4 or any(not 0 <= v < 8 for v in p):
        return False
    try:
        normal_mask(Placement(*p))
    except ValueError:
        return False
    # consecutive corners differ in exactly one bit
    return all(bin(p[i] ^ p[(i + 1) % 4]).count('1') == 1 for i in range(4))


def face_of(p: Placement) -> int:
    mask = normal_mask(p)
    return _FACE_BY_AXIS[(mask, 1 if p.bl & mask else 0)]


def opposite_face(label: int) -> int:
    return OPPOSITE_FACE[label]


def face_vertices(label: int) -> FrozenSet[int]:
    """The four vertex ids of a face"""
    mask, value = _AXIS_BY_FACE[label]
    return frozenset(v for v in range(8) if bool(v & mask) == bool(value))


def canonical_placement() -> Placement:
    """Anchor placement: face 1 (z = 0), corners along the x and y axes"""
    return Placement(0, 1, 3, 2)


def roll(p: Placement, direction: Direction) -> Placement:
    """Placement of the neighbour across a 90 degree crease"""
    m = normal_mask(p)
    if direction is Direction.UP:
        return Placement(p.tl, p.tr, p.tr ^ m, p.tl ^ m)
    if direction is Direction.DOWN:
        return Placement(p.bl ^ m, p.br ^ m, p.br, p.bl)
    if direction is Direction.RIGHT:
        return Placement(p.br, p.br ^ m, p.tr ^ m, p.tr)
    return Placement(p.bl ^ m, p.bl, p.tl, p.tl ^ m)


def flip(p: Placement, direction: Direction) -> Placement:
    """Placement of the neighbour across a 180 degree crease"""
    if direction.is_horizontal:
        return Placement(p.br, p.bl, p.tl, p.tr)
    return Placement(p.tl, p.tr, p.br, p.bl)


def transition(p: Placement, direction: Direction, angle: FoldAngle) -> Placement:
    if angle is FoldAngle.FOLD90:
        return roll(p, direction)
    return flip(p, direction)


def relation(p: Placement, q: Placement, direction: Direction) -> Optional[FoldAngle]:
    """Fold angle taking p to its neighbour q in the given direction, if any"""
    if roll(p, direction) == q:
        return FoldAngle.FOLD90
    if flip(p, direction) == q:
        return FoldAngle.FOLD180
    return None


def rotate_in_face(p: Placement) -> Placement:
    """Same face, corners shifted a quarter turn"""
    return Placement(p.br, p.tr, p.tl, p.bl)


@lru_cache(maxsize=None)
def _closure() -> Tuple[Placement, ...]:
    seen = {canonical_placement()}
    frontier = [canonical_placement()]
    while frontier:
        p = frontier.pop()
        for direction in DIRECTIONS:
            for q in (roll(p, direction), flip(p, direction)):
                if q not in seen:
                    seen.add(q)
                    frontier.append(q)
    placements = tuple(sorted(seen))
    logger.debug(f"Built placement table with {len(placements)} entries")
    return placements


def all_placements() -> FrozenSet[Placement]:
    return frozenset(_closure())


# Integer tables for the search core. Index order is sorted placement order.
PLACEMENTS: Tuple[Placement, ...] = _closure()
PLACEMENT_INDEX: Dict[Placement, int] = {p: i for i, p in enumerate(PLACEMENTS)}
FACE_BY_INDEX: Tuple[int, ...] = tuple(face_of(p) for p in PLACEMENTS)
# TRANSITIONS[placement][direction][0 = 90 degrees, 1 = 180 degrees]
TRANSITIONS: Tuple[Tuple[Tuple[int, int], ...], ...] = tuple(
    tuple(
        (PLACEMENT_INDEX[roll(p, d)], PLACEMENT_INDEX[flip(p, d)])
        for d in DIRECTIONS
    )
    for p in PLACEMENTS
)
DIRECTION_INDEX = {d: i for i, d in enumerate(DIRECTIONS)}


# Geometric reference construction, independent of the tables above

def vertex_coordinates(v: int) -> np.ndarray:
    return np.array([v & 1, (v >> 1) & 1, (v >> 2) & 1], dtype=int)


def outward_normal(label: int) -> np.ndarray:
    mask, value = _AXIS_BY_FACE[label]
    normal = np.zeros(3, dtype=int)
    normal[mask.bit_length() - 1] = 1 if value else -1
    return normal


def handedness(p: Placement) -> int:
    """+1 if the corners run counter-clockwise seen from outside the cube, else -1"""
    corners = [vertex_coordinates(v) for v in p]
    cross = np.cross(corners[1] - corners[0], corners[3] - corners[0])
    return int(np.sign(np.dot(cross, outward_normal(face_of(p)))))


def reference_placements() -> FrozenSet[Placement]:
    """All corner orderings that trace a cube face as a unit square"""
    found = set()
    for label in sorted(ALL_FACES):
        vertices = sorted(face_vertices(label))
        for order in permutations(vertices):
            points = [vertex_coordinates(v) for v in order]
            sides = [points[(i + 1) % 4] - points[i] for i in range(4)]
            unit_sides = all(int(np.abs(s).sum()) == 1 for s in sides)
            right_angles = all(int(np.dot(sides[i], sides[(i + 1) % 4])) == 0 for i in range(4))
            if unit_sides and right_angles:
                found.add(Placement(*order))
    return frozenset(found)


def placements_on_face(label: int) -> List[Placement]:
    return [p for p in PLACEMENTS if face_of(p) == label]
