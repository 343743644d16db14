"""
Classification of rectangular polyominoes with simple holes, and cooperating
hole sets.

The classifier walks a ladder of known results for each hole family and
prefers a certificate (a fixture reached by contractions, or a generated
staircase) over search. Search is the last resort; a positive search answer
only says that a consistent onto facemapping exists.
"""

import copy
import logging
import time
from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from PyQt6.QtCore import QObject, pyqtSignal

from ..model.grid import (
    Axis, CellCoord, HoleKind, Polyomino, SeparationParity, fill_holes, separation_parity,
)
from ..model.recognize import as_hole_polyomino
from ..model.symmetry import ALL_SYMMETRIES, TRANSPOSE, transform_facemapping, transform_polyomino
from ..utils.config import DEFAULT_SETTINGS
from ..utils.errors import GuardExceeded, WrongFamily
from ..utils.utils import format_duration
from .constructions import generate_staircase, staircase_witness
from .engine import is_consistent, is_onto
from .reduction import reduce_to_fixture
from .search import SearchConfig, exists_onto_facemapping
from .verdict import Verdict, VerdictStatus

logger = logging.getLogger(__name__)

ODD_PAIR_FAMILY = 'odd-pair'
CROSS_FAMILY = 'cross'
RING_CHAIN_FAMILY = 'ring-chain'
STAIRCASE_FAMILY = 'staircase'

_SIMPLE_KINDS = frozenset({HoleKind.SQUARE, HoleKind.L, HoleKind.U})


@dataclass(frozen=True)
class Support:
    """Cell rectangle x0..x1, y0..y1 (inclusive)"""
    x0: int
    y0: int
    x1: int
    y1: int

    @property
    def rectangle(self) -> Tuple[int, int, int, int]:
        return self.x0, self.y0, self.x1, self.y1

    @property
    def width(self) -> int:
        return self.x1 - self.x0 + 1

    @property
    def height(self) -> int:
        return self.y1 - self.y0 + 1

    def contains(self, cell: CellCoord) -> bool:
        return self.x0 <= cell.x <= self.x1 and self.y0 <= cell.y <= self.y1

    def overlaps(self, other: 'Support') -> bool:
        """Closed regions meet, touching at an edge or corner included"""
        return (self.x0 <= other.x1 + 1 and other.x0 <= self.x1 + 1
                and self.y0 <= other.y1 + 1 and other.y0 <= self.y1 + 1)


def support(poly: Polyomino, holes: Iterable[int]) -> Support:
    """Smallest cell rectangle holding the removed cells of the holes and the cells along their cuts"""
    cells = []
    for index in holes:
        removed, cuts = poly.holes[index].expand()
        cells.extend(removed)
        for cut in cuts:
            cells.extend(cut.cells)
    if not cells:
        raise ValueError("support needs at least one hole")
    return Support(min(c.x for c in cells), min(c.y for c in cells),
                   max(c.x for c in cells), max(c.y for c in cells))


def _require_slits(poly: Polyomino):
    if any(not h.is_slit for h in poly.holes):
        raise WrongFamily(f"{poly} has holes other than slits")


def odd_pairs(poly: Polyomino) -> List[Tuple[int, int]]:
    return [
        (i, j) for i, j in combinations(range(len(poly.holes)), 2)
        if separation_parity(poly.holes[i], poly.holes[j]) is SeparationParity.ODD
    ]


def odd_pair_exists(poly: Polyomino) -> bool:
    _require_slits(poly)
    return bool(odd_pairs(poly))


def four_by_n_quadruples(poly: Polyomino) -> Iterator[Tuple[int, int, int, int]]:
    """(left, central, right, central) vertical slits, each side slit one row off a central one.

    The two central slits may be the same hole.
    """
    _require_slits(poly)
    if poly.width != 4:
        return
    by_crease: Dict[int, List[int]] = {1: [], 2: [], 3: []}
    for index, hole in enumerate(poly.holes):
        if hole.kind is HoleKind.SLIT2 and hole.axis is Axis.VERTICAL:
            by_crease[hole.x].append(index)

    def partners(side):
        return [(s, c) for s in by_crease[side] for c in by_crease[2]
                if abs(poly.holes[s].midpoint2 - poly.holes[c].midpoint2) == 2]

    for left, central_left in partners(1):
        for right, central_right in partners(3):
            yield left, central_left, right, central_right


def four_by_n_quadruple(poly: Polyomino) -> Optional[Tuple[int, int, int, int]]:
    return next(four_by_n_quadruples(poly), None)


def _central_creases_only(poly: Polyomino) -> bool:
    """5-wide, vertical 2-slits only in creases 2 and 3, each crease pairwise even-separated"""
    holes = poly.holes
    if poly.width != 5 or any(h.axis is not Axis.VERTICAL or h.x not in (2, 3) for h in holes):
        return False
    return all(
        separation_parity(holes[i], holes[j]) is SeparationParity.EVEN
        for i, j in combinations(range(len(holes)), 2) if holes[i].x == holes[j].x
    )


class CooperationAnswer(str, Enum):
    YES = 'yes'
    NO = 'no'
    NECESSARY_ONLY = 'necessary-only'
    UNKNOWN = 'unknown'


_ANSWERS = {
    VerdictStatus.FOLDABLE_CERTIFIED: CooperationAnswer.YES,
    VerdictStatus.UNFOLDABLE_CERTIFIED: CooperationAnswer.NO,
    VerdictStatus.FACEMAPPING_EXISTS: CooperationAnswer.NECESSARY_ONLY,
    VerdictStatus.UNKNOWN: CooperationAnswer.UNKNOWN,
}


def provenance_of(verdict: Verdict) -> str:
    """theorem:<reason>, fixture:<id>, generator:<family>, prior-work or search-necessary-only"""
    if verdict.status is VerdictStatus.FACEMAPPING_EXISTS:
        return 'search-necessary-only'
    if verdict.status is VerdictStatus.UNKNOWN:
        return f"unknown:{verdict.reason}"
    if verdict.provenance:
        return verdict.provenance
    if verdict.reason == 'no-onto-facemapping':
        return 'search:no-onto-facemapping'
    return f"theorem:{verdict.reason}"


@dataclass(frozen=True)
class Cooperation:
    answer: CooperationAnswer
    provenance: str
    verdict: Verdict

    @property
    def cooperates(self) -> bool:
        return self.answer in (CooperationAnswer.YES, CooperationAnswer.NECESSARY_ONLY)


class FoldClassifier:
    """Verdicts for polyominoes, memoized per polyomino"""

    def __init__(self, settings: Optional[dict] = None, search_config: Optional[SearchConfig] = None):
        settings = settings or copy.deepcopy(DEFAULT_SETTINGS)
        analyzer = settings.get('analyzer', {})
        self.slit1_trivial = analyzer.get('slit1_trivial', True)
        self.max_holes = analyzer.get('max_holes', 12)
        self.trust_prior_work = analyzer.get('trust_prior_work', True)
        self.max_states = analyzer.get('max_reduction_states', 4000)
        self.search_config = search_config or SearchConfig.from_settings(settings)
        self._verdicts: Dict[Polyomino, Verdict] = {}
        self._searches: Dict[Polyomino, Verdict] = {}

    def classify(self, poly: Polyomino) -> Verdict:
        verdict = self._verdicts.get(poly)
        if verdict is None:
            start = time.perf_counter()
            verdict = self._classify(poly)
            self._verdicts[poly] = verdict
            logger.info(f"{poly}: {verdict.status.value} ({verdict.reason}) "
                        f"in {format_duration(time.perf_counter() - start)}")
        return verdict

    def with_holes(self, poly: Polyomino) -> Polyomino:
        """Raw input rebuilt from recognized holes; WrongFamily if some hole is not simple"""
        if not poly.is_raw:
            return poly
        rebuilt = as_hole_polyomino(poly)
        if rebuilt is None:
            raise WrongFamily(f"{poly} has a hole that is not simple")
        return rebuilt

    def cooperates(self, poly: Polyomino, subset: Iterable[int]) -> Cooperation:
        poly = self.with_holes(poly)
        verdict = self.classify(fill_holes(poly, subset))
        return Cooperation(_ANSWERS[verdict.status], provenance_of(verdict), verdict)

    def _search(self, poly: Polyomino) -> Verdict:
        verdict = self._searches.get(poly)
        if verdict is None:
            verdict = exists_onto_facemapping(poly, self.search_config)
            self._searches[poly] = verdict
        return verdict

    def _classify(self, poly: Polyomino) -> Verdict:
        if poly.is_raw:
            rebuilt = as_hole_polyomino(poly)
            if rebuilt is None:
                if self.trust_prior_work:
                    return Verdict.foldable(
                        'non-simple-hole', None, 'prior-work',
                        detail='a hole other than the five simple ones always allows a folding onto the cube')
                return self._search(poly)
            return self.classify(rebuilt)

        if poly.is_hole_free:
            return Verdict.unfoldable('hole-free-rectangle',
                                      'either all horizontal or all vertical creases fold 180 degrees')

        unit_slits = [i for i, h in enumerate(poly.holes) if h.kind is HoleKind.SLIT1]
        if self.slit1_trivial and unit_slits:
            keep = [i for i in range(len(poly.holes)) if i not in unit_slits]
            verdict = self.classify(fill_holes(poly, keep))
            return replace(verdict, detail=f"{verdict.detail}; {len(unit_slits)} unit slits folded trivially"
                           .lstrip('; '))

        logger.debug(f"{poly}: {len(poly.holes)} holes, kinds {sorted(h.kind.value for h in poly.holes)}")
        if poly.slit_only:
            return self._classify_slits(poly)
        if {h.kind for h in poly.holes} <= _SIMPLE_KINDS:
            return self._classify_simple(poly)
        return self._classify_mixed(poly)

    def _reduced(self, poly: Polyomino, keep: Sequence[int], family: str, reason: str) -> Optional[Verdict]:
        reduction = reduce_to_fixture(fill_holes(poly, keep), family, self.max_states)
        if reduction is None:
            return None
        witness = reduction.witness.restricted(poly.cells)
        if not (is_consistent(poly, witness) and is_onto(witness)):
            logger.warning(f"Witness from {reduction.fixture_id} does not carry over to {poly}")
            return None
        return Verdict.foldable(reason, witness, f"fixture:{reduction.fixture_id}",
                                detail=reduction.describe())

    def _classify_slits(self, poly: Polyomino) -> Verdict:
        if min(poly.width, poly.height) <= 3:
            return Verdict.unfoldable('narrow-slit-strip',
                                      f"{poly.width}x{poly.height}: slit-only polyominoes need both sides >= 4")
        if any(h.kind is HoleKind.SLIT1 for h in poly.holes):
            return self._search(poly)

        pairs = odd_pairs(poly)
        if not pairs:
            return Verdict.unfoldable('even-separated-slits', 'all same-axis slit pairs are even-separated')

        if min(poly.width, poly.height) >= 6:
            for pair in pairs:
                verdict = self._reduced(poly, pair, ODD_PAIR_FAMILY, 'odd-separated-pair')
                if verdict is not None:
                    return verdict
            logger.warning(f"No odd pair of {poly} reduced to a fixture, searching instead")
            return self._search(poly)

        logger.debug(f"{poly}: odd pairs {pairs}")
        vertical_odd = any(poly.holes[i].axis is Axis.VERTICAL for i, _ in pairs)
        transpose = poly.width > poly.height or (poly.width == poly.height and not vertical_odd)
        if not transpose:
            return self._classify_narrow(poly)
        turned = transform_polyomino(poly, TRANSPOSE)
        verdict = self._classify_narrow(turned)
        if verdict.witness is not None:
            verdict = verdict.with_witness(
                transform_facemapping(verdict.witness, TRANSPOSE, turned.width, turned.height))
        return verdict

    def _pair_status(self, poly: Polyomino, pair: Tuple[int, int]) -> CooperationAnswer:
        return _ANSWERS[self._search(fill_holes(poly, pair)).status]

    def _classify_narrow(self, poly: Polyomino) -> Verdict:
        """Slit-only, 4 or 5 wide, at least as tall as wide"""
        pairs = odd_pairs(poly)
        for pair in pairs:
            verdict = self._reduced(poly, pair, ODD_PAIR_FAMILY, 'odd-separated-pair')
            if verdict is not None:
                return verdict

        horizontal = [i for i, h in enumerate(poly.holes) if h.axis is Axis.HORIZONTAL]
        vertical_pairs = [p for p in pairs if poly.holes[p[0]].axis is Axis.VERTICAL]
        if horizontal:
            for pair in vertical_pairs:
                for index in horizontal:
                    verdict = self._reduced(poly, pair + (index,), CROSS_FAMILY, 'crossing-slit')
                    if verdict is not None:
                        return verdict
            return self._search(poly)

        if poly.width == 5 and _central_creases_only(poly):
            return Verdict.unfoldable('five-wide-central-creases',
                                      'vertical slits only in the central creases, each crease even-separated')

        statuses = [self._pair_status(poly, pair) for pair in pairs]
        logger.debug(f"{poly}: pair answers {[s.value for s in statuses]}")
        if any(s is not CooperationAnswer.NO for s in statuses):
            return self._search(poly)

        if poly.width == 5:
            return Verdict.unfoldable('five-wide-no-cooperating-pair', 'no two slits cooperate')

        creases = {h.x for h in poly.holes}
        if not {1, 3} <= creases:
            return Verdict.unfoldable('four-wide-open-side-crease',
                                      'no two slits cooperate and an off-central crease has no slit')
        quadruples = list(four_by_n_quadruples(poly))
        logger.debug(f"{poly}: {len(quadruples)} quadruples")
        if not quadruples:
            return Verdict.unfoldable('four-wide-no-quadruple',
                                      'no side slit lies one row off a central slit on both sides')
        for quadruple in quadruples:
            verdict = self._reduced(poly, sorted(set(quadruple)), RING_CHAIN_FAMILY, 'four-wide-quadruple')
            if verdict is not None:
                return verdict
        return self._search(poly)

    def _classify_simple(self, poly: Polyomino) -> Verdict:
        """Square, L and U holes: foldable exactly when some two holes cooperate"""
        if len(poly.holes) < 2:
            return Verdict.unfoldable('no-cooperating-pair', 'a single square, L or U hole never folds onto the cube')
        undecided = []
        for pair in combinations(range(len(poly.holes)), 2):
            verdict = self._search(fill_holes(poly, pair))
            if verdict.status is VerdictStatus.FACEMAPPING_EXISTS:
                witness = verdict.witness.restricted(poly.cells)
                if is_onto(witness):
                    return Verdict.facemapping_exists(witness, detail=f"holes {list(pair)} cooperate")
                return self._search(poly)
            if verdict.status is VerdictStatus.UNKNOWN:
                undecided.append(pair)
        if undecided:
            return Verdict.unknown('node-limit', f"pairs {undecided} were not decided")
        return Verdict.unfoldable('no-cooperating-pair', 'no two holes cooperate')

    def _match_staircase(self, poly: Polyomino) -> Optional[Verdict]:
        for sym in ALL_SYMMETRIES:
            width, height = sym.dimensions(poly.width, poly.height)
            if height != 4 or width < 6 or (width - 2) % 4:
                continue
            k = (width - 2) // 4
            stairs = generate_staircase(k)
            turned = transform_polyomino(poly, sym)
            if turned.cuts != stairs.cuts or turned.removed != stairs.removed:
                continue
            witness = transform_facemapping(staircase_witness(k), sym.inverse(), width, height)
            return Verdict.foldable('staircase', witness, 'generator:staircase',
                                    detail=f"k={k}, rotation {sym.rotation}, mirror {sym.mirror}")
        return None

    def _classify_mixed(self, poly: Polyomino) -> Verdict:
        verdict = self._match_staircase(poly)
        if verdict is None:
            verdict = self._reduced(poly, range(len(poly.holes)), STAIRCASE_FAMILY, 'staircase')
        return verdict or self._search(poly)


@dataclass
class CooperationReport:
    hole_count: int
    max_set_size: int
    cooperating_sets: List[Tuple[int, ...]] = field(default_factory=list)
    minimal_sets: List[Tuple[int, ...]] = field(default_factory=list)
    provenance: Dict[Tuple[int, ...], str] = field(default_factory=dict)
    undecided_sets: List[Tuple[int, ...]] = field(default_factory=list)
    evaluated: int = 0

    def to_dict(self) -> dict:
        return {
            'holes': self.hole_count,
            'max_set_size': self.max_set_size,
            'evaluated': self.evaluated,
            'cooperating_sets': [list(s) for s in self.cooperating_sets],
            'minimal_sets': [{'holes': list(s), 'provenance': self.provenance[s]} for s in self.minimal_sets],
            'undecided_sets': [list(s) for s in self.undecided_sets],
        }

    def __str__(self):
        lines = [f"{self.hole_count} holes, sets up to size {self.max_set_size}, {self.evaluated} evaluated"]
        if not self.minimal_sets:
            lines.append("no cooperating set")
        for s in self.minimal_sets:
            lines.append(f"minimal {{{', '.join(map(str, s))}}}  {self.provenance[s]}")
        for s in self.undecided_sets:
            lines.append(f"undecided {{{', '.join(map(str, s))}}}")
        return '\n'.join(lines)


class CooperationSweep(QObject):
    """Subset sweep by size, then lexicographically, skipping supersets of cooperating sets"""

    progress_updated = pyqtSignal(int, int)  # Current, Total
    set_evaluated = pyqtSignal(list, str)  # hole indices, answer
    finished = pyqtSignal(object)  # CooperationReport

    def __init__(self, classifier: Optional[FoldClassifier] = None, parent=None):
        super().__init__(parent)
        self.classifier = classifier or FoldClassifier()

    def run(self, poly: Polyomino, max_set_size: Optional[int] = None,
            exhaustive: bool = False) -> CooperationReport:
        poly = self.classifier.with_holes(poly)
        count = len(poly.holes)
        if count > self.classifier.max_holes:
            raise GuardExceeded(f"{count} holes exceed the sweep limit of {self.classifier.max_holes}")
        size_cap = count if max_set_size is None else max(0, min(max_set_size, count))
        subsets = [s for size in range(size_cap + 1) for s in combinations(range(count), size)]

        report = CooperationReport(count, size_cap)
        for position, subset in enumerate(subsets, start=1):
            covered = any(set(found) <= set(subset) for found in report.cooperating_sets)
            if not covered or exhaustive:
                result = self.classifier.cooperates(poly, subset)
                report.evaluated += 1
                if result.cooperates:
                    report.cooperating_sets.append(subset)
                    report.provenance[subset] = result.provenance
                    if not covered:
                        report.minimal_sets.append(subset)
                elif result.answer is CooperationAnswer.UNKNOWN:
                    report.undecided_sets.append(subset)
                self.set_evaluated.emit(list(subset), result.answer.value)
            self.progress_updated.emit(position, len(subsets))

        logger.info(f"Cooperation sweep on {poly}: {len(report.minimal_sets)} minimal sets "
                    f"from {report.evaluated} evaluated subsets")
        self.finished.emit(report)
        return report


_default_classifier: Optional[FoldClassifier] = None


def default_classifier() -> FoldClassifier:
    global _default_classifier
    if _default_classifier is None:
        _default_classifier = FoldClassifier()
    return _default_classifier


def classify(poly: Polyomino, classifier: Optional[FoldClassifier] = None) -> Verdict:
    return (classifier or default_classifier()).classify(poly)


def cooperates(poly: Polyomino, subset: Iterable[int],
               classifier: Optional[FoldClassifier] = None) -> Cooperation:
    return (classifier or default_classifier()).cooperates(poly, subset)


def minimally_cooperating_sets(poly: Polyomino, max_set_size: Optional[int] = None,
                               exhaustive: bool = False,
                               classifier: Optional[FoldClassifier] = None) -> CooperationReport:
    return CooperationSweep(classifier or default_classifier()).run(poly, max_set_size, exhaustive)
