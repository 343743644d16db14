"""
Facemappings and layer mappings: per-cell images on the cube.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Mapping, Tuple

from ..geometry.cube import Placement, face_of, is_valid_placement
from ..utils.errors import FacemappingMismatch
from .grid import CellCoord

LayerMapping = Dict[CellCoord, int]


@dataclass(frozen=True)
class Facemapping:
    """Placement of every present cell, stored sorted by cell"""
    entries: Tuple[Tuple[CellCoord, Placement], ...]

    @classmethod
    def from_dict(cls, placements: Mapping) -> 'Facemapping':
        return cls(tuple(sorted(
            (CellCoord(*cell), Placement(*p)) for cell, p in placements.items()
        )))

    @cached_property
    def placements(self) -> Dict[CellCoord, Placement]:
        return dict(self.entries)

    def __getitem__(self, cell) -> Placement:
        return self.placements[cell]

    def __contains__(self, cell) -> bool:
        return cell in self.placements

    def __iter__(self) -> Iterator[CellCoord]:
        return (cell for cell, _ in self.entries)

    def __len__(self):
        return len(self.entries)

    def items(self):
        return iter(self.entries)

    @property
    def cells(self) -> Tuple[CellCoord, ...]:
        return tuple(cell for cell, _ in self.entries)

    def faces(self) -> Dict[CellCoord, int]:
        return {cell: face_of(p) for cell, p in self.entries}

    def restricted(self, cells) -> 'Facemapping':
        cells = set(cells)
        return Facemapping(tuple((c, p) for c, p in self.entries if c in cells))

    def to_json(self) -> List[dict]:
        return [
            {'x': cell.x, 'y': cell.y, 'face': face_of(p), 'corners': list(p)}
            for cell, p in self.entries
        ]

    @classmethod
    def from_json(cls, data) -> 'Facemapping':
        """Read the per-cell list written by to_json (or a {'cells': [...]} wrapper)"""
        if isinstance(data, dict):
            data = data.get('cells', data.get('facemapping', []))
        placements = {}
        for entry in data:
            try:
                cell = CellCoord(int(entry['x']), int(entry['y']))
                corners = tuple(int(v) for v in entry['corners'])
            except (KeyError, TypeError, ValueError) as e:
                raise FacemappingMismatch(f"malformed facemapping entry {entry!r}: {e}")
            if not is_valid_placement(corners):
                raise FacemappingMismatch(f"{corners} is not a placement (cell {tuple(cell)})")
            placements[cell] = Placement(*corners)
        return cls.from_dict(placements)


def faces_from_json(data) -> Dict[CellCoord, int]:
    """Face labels of a facemapping JSON that may lack corners"""
    if isinstance(data, dict):
        data = data.get('cells', data.get('facemapping', []))
    try:
        return {CellCoord(int(e['x']), int(e['y'])): int(e['face']) for e in data}
    except (KeyError, TypeError, ValueError) as e:
        raise FacemappingMismatch(f"malformed facemapping: {e}")
