"""
Cube geometry for foldlab
"""

from .cube import (
    ALL_FACES, DIRECTIONS, Direction, FoldAngle, Placement,
    all_placements, canonical_placement, face_of, flip, handedness,
    opposite_face, relation, roll, transition,
)

__all__ = [
    'ALL_FACES', 'DIRECTIONS', 'Direction', 'FoldAngle', 'Placement',
    'all_placements', 'canonical_placement', 'face_of', 'flip', 'handedness',
    'opposite_face', 'relation', 'roll', 'transition',
]
