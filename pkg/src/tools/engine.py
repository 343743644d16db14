"""
Checks on facemappings: consistency, fold angles, coverage, layers, hole
fold classes, and lifting facemappings through band contractions.
"""

import logging
from enum import Enum
from typing import Dict, FrozenSet, Mapping, Optional

from ..geometry.cube import (
    Direction, FoldAngle, Placement, all_placements, face_of, flip, relation,
)
from ..model.contraction import BandAxis, Contraction, LiftSide
from ..model.facemapping import Facemapping
from ..model.grid import Axis, CellCoord, CutSegment, H, HoleKind, Polyomino, V
from ..model.symmetry import TRANSPOSE, transform_facemapping, transform_polyomino
from ..utils.errors import FacemappingMismatch, InconsistentEdge
from .propagation import audit_rules, crease_rules

logger = logging.getLogger(__name__)


class HoleFoldClass(str, Enum):
    TRIVIAL = 'trivial'
    SLIT_FLAP = 'slit-flap'
    SLIT_RING = 'slit-ring'
    SQUARE_NONTRIVIAL = 'square-nontrivial'
    L_NONTRIVIAL = 'L-nontrivial'
    U_AS_UNIT_SQUARE = 'U-as-unit-square'
    U_T_FOLDED = 'U-T-folded'


def _edge_relation(fm: Facemapping, edge: CutSegment) -> Optional[FoldAngle]:
    low, high = edge.cells
    direction = Direction.RIGHT if edge.axis is Axis.VERTICAL else Direction.UP
    return relation(fm[low], fm[high], direction)


def is_consistent(poly: Polyomino, fm: Facemapping) -> bool:
    """Every present cell placed, every attached edge a roll or a flip"""
    if set(fm.cells) != poly.cell_set:
        return False
    return all(_edge_relation(fm, edge) is not None for edge in poly.attached_edges)


def implied_angle(poly: Polyomino, fm: Facemapping, edge: CutSegment) -> FoldAngle:
    if not poly.edge_attached(edge):
        raise ValueError(f"{edge} is not an attached crease of {poly}")
    angle = _edge_relation(fm, edge)
    if angle is None:
        raise InconsistentEdge(edge)
    return angle


def implied_angles(poly: Polyomino, fm: Facemapping) -> Dict[CutSegment, FoldAngle]:
    return {edge: implied_angle(poly, fm, edge) for edge in poly.attached_edges}


def covered_faces(fm: Facemapping) -> FrozenSet[int]:
    return frozenset(face_of(p) for _, p in fm.items())


def is_onto(fm: Facemapping) -> bool:
    return len(covered_faces(fm)) == 6


def check_layers(poly: Polyomino, fm: Facemapping, layers: Mapping[CellCoord, int]) -> bool:
    """Per cube face, the layer values of its cells are exactly 1..k"""
    if set(layers) != poly.cell_set:
        return False
    by_face: Dict[int, list] = {}
    for cell, p in fm.items():
        by_face.setdefault(face_of(p), []).append(layers[cell])
    return all(sorted(values) == list(range(1, len(values) + 1)) for values in by_face.values())


def normalize_layers(layers: Mapping[CellCoord, int]) -> Dict[CellCoord, int]:
    """Shift 0-based printed layer digits to 1-based"""
    if layers and min(layers.values()) == 0:
        return {cell: value + 1 for cell, value in layers.items()}
    return dict(layers)


def audit_slit_rules(poly: Polyomino, fm: Facemapping):
    """Crease rules violated by a facemapping (empty for every consistent one)"""
    return audit_rules(implied_angles(poly, fm), crease_rules(poly))


def _fits_neighbours(poly: Polyomino, fm: Facemapping, cell: CellCoord) -> bool:
    """Some placement at cell is fold-related to every present neighbour"""
    neighbours = []
    for direction in (Direction.RIGHT, Direction.UP, Direction.LEFT, Direction.DOWN):
        other = cell.step(direction)
        if other in fm:
            neighbours.append((direction, fm[other]))
    return any(
        all(relation(q, p, direction) is not None for direction, p in neighbours)
        for q in all_placements()
    )


def _cuts_reattach(fm: Facemapping, cuts) -> bool:
    return all(_edge_relation(fm, cut) is not None for cut in cuts)


def _crease_angle(poly: Polyomino, fm: Facemapping, *edges) -> Optional[FoldAngle]:
    for edge in edges:
        if poly.edge_attached(edge):
            return implied_angle(poly, fm, edge)
    return None


def hole_fold_class(poly: Polyomino, fm: Facemapping, hole_index: int) -> HoleFoldClass:
    hole = poly.holes[hole_index]
    cells, cuts = hole.expand()

    if hole.kind is HoleKind.SQUARE:
        (cell,) = cells
        if _fits_neighbours(poly, fm, cell):
            return HoleFoldClass.TRIVIAL
        return HoleFoldClass.SQUARE_NONTRIVIAL

    if _cuts_reattach(fm, cuts):
        return HoleFoldClass.TRIVIAL

    x, y = hole.x, hole.y
    if hole.kind is HoleKind.SLIT2:
        if hole.axis is Axis.VERTICAL:
            centre = _crease_angle(poly, fm, H(x - 1, y + 1), H(x, y + 1))
        else:
            centre = _crease_angle(poly, fm, V(x + 1, y - 1), V(x + 1, y))
        return HoleFoldClass.SLIT_RING if centre is FoldAngle.FOLD90 else HoleFoldClass.SLIT_FLAP

    if hole.kind is HoleKind.SLIT1:
        if hole.axis is Axis.VERTICAL:
            crossing = [H(x - 1, y), H(x, y), H(x - 1, y + 1), H(x, y + 1)]
        else:
            crossing = [V(x, y - 1), V(x, y), V(x + 1, y - 1), V(x + 1, y)]
        ring = any(
            poly.edge_attached(e) and implied_angle(poly, fm, e) is FoldAngle.FOLD90 for e in crossing
        )
        return HoleFoldClass.SLIT_RING if ring else HoleFoldClass.SLIT_FLAP

    if hole.kind is HoleKind.L:
        return HoleFoldClass.L_NONTRIVIAL

    # U: does the ring around the flap close up as if the flap were missing?
    flap = CellCoord(x, y)
    others = fm.restricted(c for c in fm.cells if c != flap)
    if _fits_neighbours(poly, others, flap):
        return HoleFoldClass.U_T_FOLDED
    return HoleFoldClass.U_AS_UNIT_SQUARE


def _lift_rows(poly: Polyomino, fm: Facemapping, index: int, side: LiftSide) -> Dict[CellCoord, Placement]:
    lifted = {}
    for cell in poly.cells:
        x, y = cell
        if y < index:
            source = fm[CellCoord(x, y)]
        elif y >= index + 2:
            source = fm[CellCoord(x, y - 2)]
        elif side is LiftSide.BELOW:
            below = fm[CellCoord(x, index - 1)]
            source = flip(below, Direction.UP) if y == index else below
        else:
            above = fm[CellCoord(x, index)]
            source = above if y == index else flip(above, Direction.DOWN)
        lifted[cell] = source
    return lifted


def lift_contraction(original: Polyomino, reduced: Polyomino, fm: Facemapping,
                     contraction: Contraction) -> Facemapping:
    """Put the contracted band back as two 180 degree folded copies of its neighbour row"""
    if set(fm.cells) != reduced.cell_set:
        raise FacemappingMismatch(f"facemapping does not cover {reduced}")
    if contraction.axis is BandAxis.COLUMNS:
        turned = transform_facemapping(fm, TRANSPOSE, reduced.width, reduced.height)
        rows = _lift_rows(transform_polyomino(original, TRANSPOSE), turned,
                          contraction.index, contraction.side)
        return transform_facemapping(Facemapping.from_dict(rows), TRANSPOSE,
                                     original.height, original.width)
    return Facemapping.from_dict(_lift_rows(original, fm, contraction.index, contraction.side))


def project_contraction(original: Polyomino, lifted: Facemapping, contraction: Contraction) -> Facemapping:
    """Inverse of lift_contraction on the surviving cells"""
    kept = {}
    for cell, p in lifted.items():
        coord = cell.y if contraction.axis is BandAxis.ROWS else cell.x
        if contraction.index <= coord <= contraction.index + 1:
            continue
        if coord >= contraction.index + 2:
            cell = (CellCoord(cell.x, cell.y - 2) if contraction.axis is BandAxis.ROWS
                    else CellCoord(cell.x - 2, cell.y))
        kept[cell] = p
    return Facemapping.from_dict(kept)
