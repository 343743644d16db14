"""
Witness foldings shipped with foldlab, and the staircase family.

Fixtures live in src/data/fixtures as .poly files with a `faces:` block and
`meta` lines naming their family, declared coverage and expected outcome.
Orientations are never stored; they are inferred from the face digits.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from PyQt6.QtCore import QObject, pyqtSignal

from ..model.facemapping import Facemapping
from ..model.grid import Axis, CellCoord, HoleKind, HoleSpec, Polyomino, build
from ..model.polyfile import parse_document
from ..utils.errors import FacemappingMismatch, UnknownFixture
from ..utils.utils import read_text
from .engine import (
    audit_slit_rules, check_layers, covered_faces, hole_fold_class, is_consistent, normalize_layers,
)
from .search import SearchConfig, exists_onto_facemapping, infer_orientations
from .verdict import VerdictStatus

logger = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).resolve().parent.parent / 'data' / 'fixtures'

STAIRCASE_TEMPLATE = 'staircase-k2'


@dataclass(frozen=True, eq=False)
class Fixture:
    fixture_id: str
    polyomino: Polyomino
    face_labels: Dict[CellCoord, int]
    layer_labels: Optional[Dict[CellCoord, int]] = None
    family: Optional[str] = None
    coverage: int = 6
    expect: str = 'foldable'
    reason: str = 'fixture'
    path: Optional[Path] = None

    @property
    def is_negative(self) -> bool:
        """Stored to show that no onto facemapping exists"""
        return self.expect == 'unfoldable'


def load_fixture(path) -> Fixture:
    path = Path(path)
    doc = parse_document(read_text(path))
    meta = doc.meta
    return Fixture(
        fixture_id=meta.get('id', path.stem),
        polyomino=doc.polyomino,
        face_labels=doc.faces or {},
        layer_labels=doc.layers,
        family=meta.get('family'),
        coverage=int(meta.get('coverage', 6)),
        expect=meta.get('expect', 'foldable'),
        reason=meta.get('reason', 'fixture'),
        path=path,
    )


@lru_cache(maxsize=None)
def _load_all(directory: str) -> Tuple[Fixture, ...]:
    loaded = [load_fixture(p) for p in sorted(Path(directory).glob('*.poly'))]
    logger.debug(f"Loaded {len(loaded)} fixtures from {directory}")
    return tuple(sorted(loaded, key=lambda f: f.fixture_id))


def fixtures(directory=None) -> List[Fixture]:
    return list(_load_all(str(directory or FIXTURE_DIR)))


def fixture(fixture_id: str) -> Fixture:
    for f in _load_all(str(FIXTURE_DIR)):
        if f.fixture_id == fixture_id:
            return f
    raise UnknownFixture(fixture_id)


def family(name: str) -> List[Fixture]:
    """Positive fixtures of one family"""
    return [f for f in _load_all(str(FIXTURE_DIR)) if f.family == name and not f.is_negative]


@lru_cache(maxsize=None)
def fixture_witness(fixture_id: str) -> Optional[Facemapping]:
    """Facemapping inferred from a fixture's face digits"""
    f = fixture(fixture_id)
    if not f.face_labels:
        return None
    return infer_orientations(f.polyomino, f.face_labels)


@dataclass
class FixtureReport:
    fixture_id: str
    checks: List[Tuple[str, bool, str]] = field(default_factory=list)
    hole_classes: List[str] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = ''):
        self.checks.append((name, ok, detail))
        return ok

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_dict(self) -> dict:
        return {
            'fixture': self.fixture_id,
            'passed': self.passed,
            'checks': [{'check': name, 'ok': ok, 'detail': detail} for name, ok, detail in self.checks],
            'hole_classes': self.hole_classes,
        }

    def __str__(self):
        lines = [f"{self.fixture_id}: {'ok' if self.passed else 'FAILED'}"]
        for name, ok, detail in self.checks:
            lines.append(f"  [{'x' if ok else ' '}] {name}" + (f" ({detail})" if detail else ''))
        return '\n'.join(lines)


def verify_fixture(f: Fixture, config: Optional[SearchConfig] = None) -> FixtureReport:
    report = FixtureReport(f.fixture_id)
    poly = f.polyomino

    if f.is_negative:
        verdict = exists_onto_facemapping(poly, config)
        report.add('no-onto-facemapping', verdict.status is VerdictStatus.UNFOLDABLE_CERTIFIED,
                   verdict.reason)
        return report

    fm = infer_orientations(poly, f.face_labels)
    if not report.add('orientations', fm is not None,
                      '' if fm is not None else 'face digits admit no consistent orientation'):
        return report
    report.add('consistent', is_consistent(poly, fm))
    faces = covered_faces(fm)
    report.add('coverage', len(faces) == f.coverage, f"{len(faces)} faces, expected {f.coverage}")
    if f.layer_labels is not None:
        report.add('layers', check_layers(poly, fm, normalize_layers(f.layer_labels)))
    violated = audit_slit_rules(poly, fm)
    report.add('crease-rules', not violated, '; '.join(str(r) for r in violated))
    report.hole_classes = [hole_fold_class(poly, fm, i).value for i in poly.hole_indices()]
    return report


class FixtureVerifier(QObject):
    """Verifies a list of fixtures, reporting progress as it goes"""

    progress_updated = pyqtSignal(int, int)  # Current, Total
    fixture_verified = pyqtSignal(str, bool)  # fixture id, passed
    finished = pyqtSignal(list)  # reports

    def __init__(self, config: Optional[SearchConfig] = None, parent=None):
        super().__init__(parent)
        self.config = config

    def run(self, selected: Optional[List[Fixture]] = None) -> List[FixtureReport]:
        selected = fixtures() if selected is None else selected
        reports = []
        for index, f in enumerate(selected, start=1):
            try:
                report = verify_fixture(f, self.config)
            except Exception as e:
                logger.error(f"Verifying {f.fixture_id} failed: {e}")
                report = FixtureReport(f.fixture_id)
                report.add('error', False, str(e))
            reports.append(report)
            self.fixture_verified.emit(f.fixture_id, report.passed)
            self.progress_updated.emit(index, len(selected))
        failed = [r.fixture_id for r in reports if not r.passed]
        if failed:
            logger.warning(f"{len(failed)} fixtures failed: {', '.join(failed)}")
        self.finished.emit(reports)
        return reports


def generate_staircase(k: int) -> Polyomino:
    """4 x (4k+2) rectangle: two square holes under the top corners joined by
    2k-1 horizontal slits stepping between the two middle grid lines"""
    if k < 1:
        raise ValueError(f"staircase needs k >= 1, got {k}")
    width = 4 * k + 2
    holes = [HoleSpec(HoleKind.SQUARE, 1, 2)]
    for i in range(2 * k - 1):
        holes.append(HoleSpec(HoleKind.SLIT2, 2 + 2 * i, 1 if i % 2 == 0 else 2, Axis.HORIZONTAL))
    holes.append(HoleSpec(HoleKind.SQUARE, 4 * k, 2))
    return build(width, 4, holes)


def _template_column(k: int, column: int) -> int:
    if column <= 2:
        return column
    if column <= 4 * k - 2:
        return 3 + (column - 3) % 4
    return column - 4 * k + 8


def staircase_labels(k: int) -> Dict[CellCoord, int]:
    """Face digits of the k=2 folding with its middle period repeated"""
    template = fixture(STAIRCASE_TEMPLATE).face_labels
    poly = generate_staircase(k)
    return {cell: template[CellCoord(_template_column(k, cell.x), cell.y)] for cell in poly.cells}


def staircase_witness(k: int) -> Facemapping:
    poly = generate_staircase(k)
    fm = infer_orientations(poly, staircase_labels(k))
    if fm is None:
        raise FacemappingMismatch(f"staircase labels for k={k} admit no consistent orientation")
    return fm
