"""
Reducing a polyomino to a stored fixture.

Plain bands are contracted until what is left is one of a family's fixtures
(under any of the eight grid symmetries) sitting inside a margin of hole-free
rows and columns. The margin is folded away by 180 degree flips outwards from
the fixture, then every contraction is undone with lift_contraction, giving a
facemapping of the original polyomino.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..geometry.cube import Direction, Placement, flip
from ..model.contraction import Contraction, contract, plain_bands
from ..model.facemapping import Facemapping
from ..model.grid import CellCoord, CutSegment, Polyomino
from ..model.symmetry import ALL_SYMMETRIES, GridSymmetry, transform_facemapping, transform_polyomino
from .constructions import family, fixture, fixture_witness
from .engine import is_consistent, is_onto, lift_contraction

logger = logging.getLogger(__name__)

DEFAULT_MAX_STATES = 4000


@dataclass(frozen=True)
class FixtureImage:
    """One fixture under one grid symmetry"""
    fixture_id: str
    symmetry: GridSymmetry
    width: int
    height: int
    cuts: FrozenSet[CutSegment]
    removed: FrozenSet[CellCoord]
    witness: Facemapping


@dataclass(frozen=True)
class Reduction:
    fixture_id: str
    symmetry: GridSymmetry
    offset: Tuple[int, int]
    contractions: Tuple[Contraction, ...]
    witness: Facemapping

    def describe(self) -> str:
        steps = ', '.join(str(c) for c in self.contractions) or 'no contractions'
        return (f"{self.fixture_id} (rotation {self.symmetry.rotation}, "
                f"mirror {self.symmetry.mirror}) at {self.offset} after {steps}")


@lru_cache(maxsize=None)
def fixture_images(fixture_id: str) -> Tuple[FixtureImage, ...]:
    f = fixture(fixture_id)
    fm = fixture_witness(fixture_id)
    if fm is None:
        logger.warning(f"Fixture {fixture_id} has no consistent witness, skipping it")
        return ()
    images, seen = [], set()
    width, height = f.polyomino.width, f.polyomino.height
    for sym in ALL_SYMMETRIES:
        poly = transform_polyomino(f.polyomino, sym)
        key = (poly.width, poly.height, poly.cuts, poly.removed)
        if key in seen:
            continue
        seen.add(key)
        images.append(FixtureImage(fixture_id, sym, poly.width, poly.height, poly.cuts, poly.removed,
                                   transform_facemapping(fm, sym, width, height)))
    return tuple(images)


def family_images(name: str) -> List[FixtureImage]:
    return [image for f in family(name) for image in fixture_images(f.fixture_id)]


def _low_corner(cuts, removed) -> Optional[Tuple[int, int]]:
    points = [p for s in cuts for p in s.endpoints] + [p for c in removed for p in c.corners()]
    if not points:
        return None
    return min(p[0] for p in points), min(p[1] for p in points)


def find_offset(poly: Polyomino, image: FixtureImage) -> Optional[Tuple[int, int]]:
    """Offset at which the image's holes are exactly the polyomino's holes"""
    if image.width > poly.width or image.height > poly.height:
        return None
    if len(image.cuts) != len(poly.cuts) or len(image.removed) != len(poly.removed):
        return None
    ours, theirs = _low_corner(poly.cuts, poly.removed), _low_corner(image.cuts, image.removed)
    if ours is None or theirs is None:
        return None
    dx, dy = ours[0] - theirs[0], ours[1] - theirs[1]
    if not (0 <= dx <= poly.width - image.width and 0 <= dy <= poly.height - image.height):
        return None
    if {CutSegment(s.axis, s.x + dx, s.y + dy) for s in image.cuts} != poly.cuts:
        return None
    if {CellCoord(c.x + dx, c.y + dy) for c in image.removed} != poly.removed:
        return None
    return dx, dy


def pad_witness(poly: Polyomino, image: FixtureImage, offset: Tuple[int, int]) -> Facemapping:
    """Extend the image's witness over the hole-free margin by outward flips"""
    dx, dy = offset
    placed: Dict[CellCoord, Placement] = {
        CellCoord(c.x + dx, c.y + dy): p for c, p in image.witness.items()
    }
    for x in range(dx, dx + image.width):
        for y in range(dy + image.height, poly.height):
            placed[CellCoord(x, y)] = flip(placed[CellCoord(x, y - 1)], Direction.UP)
        for y in range(dy - 1, -1, -1):
            placed[CellCoord(x, y)] = flip(placed[CellCoord(x, y + 1)], Direction.DOWN)
    for y in range(poly.height):
        for x in range(dx + image.width, poly.width):
            placed[CellCoord(x, y)] = flip(placed[CellCoord(x - 1, y)], Direction.RIGHT)
        for x in range(dx - 1, -1, -1):
            placed[CellCoord(x, y)] = flip(placed[CellCoord(x + 1, y)], Direction.LEFT)
    return Facemapping.from_dict(placed)


def _state_key(poly: Polyomino):
    return poly.width, poly.height, poly.cuts, poly.removed


def reduce_to_fixture(poly: Polyomino, family_name: str,
                      max_states: int = DEFAULT_MAX_STATES) -> Optional[Reduction]:
    """Find contractions taking poly to a fixture of the family and lift its witness back.

    Returns None when no fixture is reached within max_states explored polyominoes.
    """
    images = family_images(family_name)
    if not images:
        logger.warning(f"No fixtures in family {family_name!r}")
        return None
    min_short = min(min(i.width, i.height) for i in images)
    min_long = min(max(i.width, i.height) for i in images)

    stack: List[Tuple[Tuple[Polyomino, ...], Tuple[Contraction, ...]]] = [((poly,), ())]
    seen = {_state_key(poly)}
    while stack:
        states, steps = stack.pop()
        state = states[-1]
        for image in images:
            offset = find_offset(state, image)
            if offset is None:
                continue
            witness = pad_witness(state, image, offset)
            for before, after, step in zip(reversed(states[:-1]), reversed(states[1:]), reversed(steps)):
                witness = lift_contraction(before, after, witness, step)
            if not (is_consistent(poly, witness) and is_onto(witness)):
                logger.warning(f"Lift of {image.fixture_id} to {poly} failed verification")
                continue
            reduction = Reduction(image.fixture_id, image.symmetry, offset, steps, witness)
            logger.info(f"Reduced {poly} to {reduction.describe()}")
            return reduction

        candidates = []
        for step in plain_bands(state):
            smaller = contract(state, step)
            short, long_ = sorted((smaller.width, smaller.height))
            if short < min_short or long_ < min_long:
                continue
            key = _state_key(smaller)
            if key in seen:
                continue
            seen.add(key)
            candidates.append((states + (smaller,), steps + (step,)))
        stack.extend(reversed(candidates))
        if len(seen) > max_states:
            logger.debug(f"Gave up reducing {poly} to {family_name} after {len(seen)} states")
            return None
    return None
