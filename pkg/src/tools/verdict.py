"""
Tiered foldability verdicts.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional

from ..model.facemapping import Facemapping
from ..model.grid import CellCoord


class VerdictStatus(str, Enum):
    UNFOLDABLE_CERTIFIED = 'unfoldable-certified'
    FOLDABLE_CERTIFIED = 'foldable-certified'
    FACEMAPPING_EXISTS = 'facemapping-exists'
    UNKNOWN = 'unknown'


EXIT_CODES = {
    VerdictStatus.FOLDABLE_CERTIFIED: 0,
    VerdictStatus.UNFOLDABLE_CERTIFIED: 1,
    VerdictStatus.FACEMAPPING_EXISTS: 2,
    VerdictStatus.UNKNOWN: 2,
}


@dataclass(frozen=True)
class Verdict:
    """Outcome of a foldability question.

    Foldable verdicts carry a witness from a fixture, a contraction lift of a
    fixture or the staircase generator; the one exception is the non-simple
    hole shortcut, recorded with provenance 'prior-work' and no witness.
    Facemapping-exists verdicts only establish the necessary condition.
    """
    status: VerdictStatus
    reason: str
    witness: Optional[Facemapping] = None
    layers: Optional[Dict[CellCoord, int]] = None
    provenance: Optional[str] = None
    detail: str = ''
    stats: Dict[str, float] = field(default_factory=dict, compare=False)

    @classmethod
    def unfoldable(cls, reason: str, detail: str = '', **kwargs) -> 'Verdict':
        return cls(VerdictStatus.UNFOLDABLE_CERTIFIED, reason, detail=detail, **kwargs)

    @classmethod
    def foldable(cls, reason: str, witness: Optional[Facemapping], provenance: str,
                 detail: str = '', **kwargs) -> 'Verdict':
        return cls(VerdictStatus.FOLDABLE_CERTIFIED, reason, witness,
                   provenance=provenance, detail=detail, **kwargs)

    @classmethod
    def facemapping_exists(cls, witness: Facemapping, reason: str = 'search-witness',
                           detail: str = '', **kwargs) -> 'Verdict':
        return cls(VerdictStatus.FACEMAPPING_EXISTS, reason, witness, detail=detail, **kwargs)

    @classmethod
    def unknown(cls, reason: str, detail: str = '', **kwargs) -> 'Verdict':
        return cls(VerdictStatus.UNKNOWN, reason, detail=detail, **kwargs)

    @property
    def is_foldable(self) -> bool:
        return self.status is VerdictStatus.FOLDABLE_CERTIFIED

    @property
    def is_unfoldable(self) -> bool:
        return self.status is VerdictStatus.UNFOLDABLE_CERTIFIED

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def with_witness(self, witness: Facemapping, provenance: Optional[str] = None) -> 'Verdict':
        return Verdict(self.status, self.reason, witness, self.layers,
                       provenance or self.provenance, self.detail, self.stats)

    def to_dict(self) -> dict:
        data = {'status': self.status.value, 'reason': self.reason}
        if self.provenance:
            data['provenance'] = self.provenance
        if self.detail:
            data['detail'] = self.detail
        if self.witness is not None:
            data['witness'] = self.witness.to_json()
        if self.layers:
            data['layers'] = [{'x': c.x, 'y': c.y, 'layer': v} for c, v in sorted(self.layers.items())]
        return data
