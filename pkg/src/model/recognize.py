"""
Recognition of simple holes in raw cut/removed-cell sets.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional

from .grid import (
    Axis, CellCoord, CutSegment, HoleKind, HoleSpec, Polyomino, ROTATIONS,
    _vertices, build, expand_hole,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HoleComponent:
    """Vertex-connected group of removed cells and cuts"""
    cells: FrozenSet[CellCoord]
    cuts: FrozenSet[CutSegment]
    hole: Optional[HoleSpec]

    @property
    def is_simple(self) -> bool:
        return self.hole is not None


def _candidate_specs(x: int, y: int) -> Iterator[HoleSpec]:
    yield HoleSpec(HoleKind.SQUARE, x, y)
    for axis in (Axis.VERTICAL, Axis.HORIZONTAL):
        yield HoleSpec(HoleKind.SLIT1, x, y, axis)
        yield HoleSpec(HoleKind.SLIT2, x, y, axis)
    for rotation in ROTATIONS:
        yield HoleSpec(HoleKind.L, x, y, rotation=rotation)
        yield HoleSpec(HoleKind.U, x, y, rotation=rotation)


def match_hole(cells: Iterable[CellCoord], cuts: Iterable[CutSegment]) -> Optional[HoleSpec]:
    """The simple hole whose expansion is exactly these cells and cuts"""
    target = (frozenset(cells), frozenset(cuts))
    if len(target[0]) + len(target[1]) > 3:
        return None
    # every simple hole has its anchor on one of its own vertices
    for x, y in sorted(_vertices(*target)):
        for spec in _candidate_specs(x, y):
            if expand_hole(spec) == target:
                return spec
    return None


def hole_components(cells: Iterable[CellCoord], cuts: Iterable[CutSegment]) -> List[HoleComponent]:
    """Split cells and cuts into groups that touch at grid vertices"""
    elements = [('cell', c) for c in sorted(cells)] + [('cut', s) for s in sorted(cuts)]
    parent = list(range(len(elements)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner = {}
    for i, (kind, item) in enumerate(elements):
        points = item.corners() if kind == 'cell' else item.endpoints
        for point in points:
            if point in owner:
                parent[find(i)] = find(owner[point])
            else:
                owner[point] = i

    groups = {}
    for i, element in enumerate(elements):
        groups.setdefault(find(i), []).append(element)

    components = []
    for members in groups.values():
        comp_cells = frozenset(item for kind, item in members if kind == 'cell')
        comp_cuts = frozenset(item for kind, item in members if kind == 'cut')
        components.append(HoleComponent(comp_cells, comp_cuts, match_hole(comp_cells, comp_cuts)))
    components.sort(key=lambda c: min(_vertices(c.cells, c.cuts)))
    return components


def recognize_holes(poly: Polyomino) -> List[HoleComponent]:
    return hole_components(poly.removed, poly.cuts)


def as_hole_polyomino(poly: Polyomino) -> Optional[Polyomino]:
    """Rebuild a raw polyomino from recognized simple holes, None if some hole is not simple"""
    if not poly.is_raw:
        return poly
    components = recognize_holes(poly)
    if not all(c.is_simple for c in components):
        logger.debug(f"{poly} has {sum(not c.is_simple for c in components)} non-simple holes")
        return None
    return build(poly.width, poly.height, [c.hole for c in components])
