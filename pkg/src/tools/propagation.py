"""
Crease rules: constraints between fold angles that hold in every consistent
facemapping, used to prune the search.

Two kinds of rule are enough:

    EQUAL          both creases carry the same angle
    NOT_BOTH_90    at most one of the two creases folds 90 degrees

They come from three sources. Around an interior vertex with four attached
creases the opposite creases agree and the two directions cannot both fold 90
degrees. Collinear creases joined by two attached columns (rows) of cells
agree, also across a slit lying between them. A 2-tall slit with its ring of
cells intact ties the two creases through its centre together and forbids 90
degree folds both along the slit and through its centre.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..geometry.cube import FoldAngle
from ..model.grid import CellCoord, CutSegment, H, Polyomino, V

logger = logging.getLogger(__name__)

UNSET, A90, A180 = 0, 1, 2
ANGLE_CODE = {FoldAngle.FOLD90: A90, FoldAngle.FOLD180: A180}
CODE_ANGLE = {A90: FoldAngle.FOLD90, A180: FoldAngle.FOLD180}


class RuleKind(Enum):
    EQUAL = 'equal'
    NOT_BOTH_90 = 'not-both-90'


@dataclass(frozen=True)
class CreaseRule:
    kind: RuleKind
    first: CutSegment
    second: CutSegment
    source: str

    def holds(self, a: FoldAngle, b: FoldAngle) -> bool:
        if self.kind is RuleKind.EQUAL:
            return a is b
        return not (a is FoldAngle.FOLD90 and b is FoldAngle.FOLD90)

    def __str__(self):
        return f"{self.kind.value}({self.first}, {self.second}) [{self.source}]"


@dataclass(frozen=True)
class Conflict:
    """Both angles forced on one crease"""
    crease: CutSegment
    rule: Optional[CreaseRule] = None


def _cells_present(poly, cells) -> bool:
    return all(poly.has_cell(CellCoord(x, y)) for x, y in cells)


def _vertex_rules(poly: Polyomino) -> List[CreaseRule]:
    rules = []
    for vx in range(1, poly.width):
        for vy in range(1, poly.height):
            block = [(vx - 1, vy - 1), (vx, vy - 1), (vx - 1, vy), (vx, vy)]
            below, above = V(vx, vy - 1), V(vx, vy)
            left, right = H(vx - 1, vy), H(vx, vy)
            if not _cells_present(poly, block):
                continue
            if not all(poly.edge_attached(e) for e in (below, above, left, right)):
                continue
            rules.append(CreaseRule(RuleKind.EQUAL, below, above, 'vertex'))
            rules.append(CreaseRule(RuleKind.EQUAL, left, right, 'vertex'))
            rules.append(CreaseRule(RuleKind.NOT_BOTH_90, below, left, 'vertex'))
    return rules


def _vertical_chain(poly: Polyomino, x: int, y1: int, y2: int) -> bool:
    """Columns x-1 and x are present and vertically attached from row y1 to y2"""
    for y in range(y1, y2 + 1):
        if not _cells_present(poly, [(x - 1, y), (x, y)]):
            return False
    return all(poly.edge_attached(H(x - 1, y)) and poly.edge_attached(H(x, y))
               for y in range(y1 + 1, y2 + 1))


def _horizontal_chain(poly: Polyomino, y: int, x1: int, x2: int) -> bool:
    for x in range(x1, x2 + 1):
        if not _cells_present(poly, [(x, y - 1), (x, y)]):
            return False
    return all(poly.edge_attached(V(x, y - 1)) and poly.edge_attached(V(x, y))
               for x in range(x1 + 1, x2 + 1))


def _collinear_rules(poly: Polyomino) -> List[CreaseRule]:
    rules = []
    for x in range(1, poly.width):
        creases = [y for y in range(poly.height) if poly.edge_attached(V(x, y))]
        for y1, y2 in zip(creases, creases[1:]):
            if _vertical_chain(poly, x, y1, y2):
                rules.append(CreaseRule(RuleKind.EQUAL, V(x, y1), V(x, y2), 'collinear'))
    for y in range(1, poly.height):
        creases = [x for x in range(poly.width) if poly.edge_attached(H(x, y))]
        for x1, x2 in zip(creases, creases[1:]):
            if _horizontal_chain(poly, y, x1, x2):
                rules.append(CreaseRule(RuleKind.EQUAL, H(x1, y), H(x2, y), 'collinear'))
    return rules


def _slit_rules(poly: Polyomino) -> List[CreaseRule]:
    rules = []
    for x in range(1, poly.width):
        for y0 in range(1, poly.height - 2):
            if V(x, y0) not in poly.cuts or V(x, y0 + 1) not in poly.cuts:
                continue
            ring = [(cx, cy) for cx in (x - 1, x) for cy in range(y0 - 1, y0 + 3)]
            if not _cells_present(poly, ring):
                continue
            edges = [V(x, y0 - 1), V(x, y0 + 2)]
            edges += [H(cx, cy) for cx in (x - 1, x) for cy in range(y0, y0 + 3)]
            if not all(poly.edge_attached(e) for e in edges):
                continue
            left, right = H(x - 1, y0 + 1), H(x, y0 + 1)
            rules.append(CreaseRule(RuleKind.EQUAL, left, right, 'slit-centre'))
            rules.append(CreaseRule(RuleKind.NOT_BOTH_90, V(x, y0 - 1), left, 'slit-cross'))
            rules.append(CreaseRule(RuleKind.NOT_BOTH_90, V(x, y0 + 2), right, 'slit-cross'))
    for y in range(1, poly.height):
        for x0 in range(1, poly.width - 2):
            if H(x0, y) not in poly.cuts or H(x0 + 1, y) not in poly.cuts:
                continue
            ring = [(cx, cy) for cx in range(x0 - 1, x0 + 3) for cy in (y - 1, y)]
            if not _cells_present(poly, ring):
                continue
            edges = [H(x0 - 1, y), H(x0 + 2, y)]
            edges += [V(cx, cy) for cx in range(x0, x0 + 3) for cy in (y - 1, y)]
            if not all(poly.edge_attached(e) for e in edges):
                continue
            below, above = V(x0 + 1, y - 1), V(x0 + 1, y)
            rules.append(CreaseRule(RuleKind.EQUAL, below, above, 'slit-centre'))
            rules.append(CreaseRule(RuleKind.NOT_BOTH_90, H(x0 - 1, y), below, 'slit-cross'))
            rules.append(CreaseRule(RuleKind.NOT_BOTH_90, H(x0 + 2, y), above, 'slit-cross'))
    return rules


def crease_rules(poly: Polyomino) -> List[CreaseRule]:
    rules = _vertex_rules(poly) + _collinear_rules(poly) + _slit_rules(poly)
    logger.debug(f"{poly}: {len(rules)} crease rules")
    return rules


class RuleIndex:
    """Crease rules compiled to integer ids with a watch list per crease"""

    def __init__(self, creases: Sequence[CutSegment], rules: Sequence[CreaseRule]):
        self.creases = tuple(creases)
        self.crease_id = {c: i for i, c in enumerate(self.creases)}
        self.rules = tuple(rules)
        self.compiled: Tuple[Tuple[bool, int, int], ...] = tuple(
            (r.kind is RuleKind.EQUAL, self.crease_id[r.first], self.crease_id[r.second])
            for r in self.rules
        )
        watches = [[] for _ in self.creases]
        for index, (_, a, b) in enumerate(self.compiled):
            watches[a].append(index)
            watches[b].append(index)
        self.watches: Tuple[Tuple[int, ...], ...] = tuple(tuple(w) for w in watches)


def propagate_codes(assign: List[int], queue: List[int], compiled, watches) -> int:
    """Unit propagation in place over integer angle codes.

    Returns -1 on success, otherwise the index of the violated rule.
    """
    while queue:
        crease = queue.pop()
        for index in watches[crease]:
            equal, a, b = compiled[index]
            va, vb = assign[a], assign[b]
            if equal:
                if va and vb:
                    if va != vb:
                        return index
                elif va:
                    assign[b] = va
                    queue.append(b)
                elif vb:
                    assign[a] = vb
                    queue.append(a)
            elif va == A90:
                if vb == A90:
                    return index
                if vb == UNSET:
                    assign[b] = A180
                    queue.append(b)
            elif vb == A90 and va == UNSET:
                assign[a] = A180
                queue.append(a)
    return -1


def propagate(poly: Polyomino, partial: Mapping[CutSegment, FoldAngle],
              rules: Optional[Sequence[CreaseRule]] = None
              ) -> Union[Dict[CutSegment, FoldAngle], Conflict]:
    """Close a partial crease assignment under the crease rules"""
    index = RuleIndex(poly.attached_edges, crease_rules(poly) if rules is None else rules)
    assign = [UNSET] * len(index.creases)
    for crease, angle in partial.items():
        if crease not in index.crease_id:
            raise ValueError(f"{crease} is not an attached crease of {poly}")
        assign[index.crease_id[crease]] = ANGLE_CODE[FoldAngle(angle)]
    failed = propagate_codes(assign, [index.crease_id[c] for c in partial], index.compiled, index.watches)
    if failed >= 0:
        rule = index.rules[failed]
        return Conflict(rule.second, rule)
    return {index.creases[i]: CODE_ANGLE[code] for i, code in enumerate(assign) if code}


def audit_rules(angles: Mapping[CutSegment, FoldAngle], rules: Sequence[CreaseRule]) -> List[CreaseRule]:
    """Rules violated by a complete set of crease angles"""
    return [r for r in rules
            if r.first in angles and r.second in angles
            and not r.holds(angles[r.first], angles[r.second])]
