"""
Polyominoes with holes, facemappings and their file formats
"""

from .contraction import BandAxis, Contraction, LiftSide, contract, contract_plain_band, plain_bands
from .facemapping import Facemapping, LayerMapping
from .grid import (
    Axis, CellCoord, CutSegment, H, HoleKind, HoleSpec, Polyomino, SeparationParity, V,
    build, fill_holes, from_cuts, hole_free, separation_parity,
)
from .polyfile import PolyDocument, document_from_dict, document_to_dict, load_document, parse, parse_document, serialize
from .recognize import as_hole_polyomino, recognize_holes
from .symmetry import ALL_SYMMETRIES, GridSymmetry, transform_facemapping, transform_polyomino

__all__ = [
    'BandAxis', 'Contraction', 'LiftSide', 'contract', 'contract_plain_band', 'plain_bands',
    'Facemapping', 'LayerMapping',
    'Axis', 'CellCoord', 'CutSegment', 'H', 'HoleKind', 'HoleSpec', 'Polyomino',
    'SeparationParity', 'V', 'build', 'fill_holes', 'from_cuts', 'hole_free', 'separation_parity',
    'PolyDocument', 'document_from_dict', 'document_to_dict', 'load_document', 'parse', 'parse_document',
    'serialize',
    'as_hole_polyomino', 'recognize_holes',
    'ALL_SYMMETRIES', 'GridSymmetry', 'transform_facemapping', 'transform_polyomino',
]
