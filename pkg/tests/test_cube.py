import pytest

from src.geometry.cube import (
    ALL_FACES, DIRECTIONS, DIRECTION_INDEX, PLACEMENT_INDEX, PLACEMENTS, TRANSITIONS,
    Direction, FoldAngle, Placement, all_placements, canonical_placement, face_of, face_vertices,
    flip, handedness, is_valid_placement, opposite_face, placements_on_face, reference_placements,
    relation, roll, rotate_in_face,
)


def test_placement_count():
    assert len(all_placements()) == 48


def test_closure_matches_geometric_construction():
    assert all_placements() == reference_placements()


def test_eight_placements_per_face():
    for label in ALL_FACES:
        assert len(placements_on_face(label)) == 8


def test_canonical_placement_is_face_one():
    assert face_of(canonical_placement()) == 1
    assert set(canonical_placement()) == face_vertices(1)


@pytest.mark.parametrize('direction', DIRECTIONS)
def test_four_rolls_return_home(direction):
    for p in PLACEMENTS:
        q = p
        for _ in range(4):
            q = roll(q, direction)
        assert q == p


@pytest.mark.parametrize('direction', DIRECTIONS)
def test_roll_and_flip_inverses(direction):
    for p in PLACEMENTS:
        assert roll(roll(p, direction), direction.opposite) == p
        assert flip(flip(p, direction), direction) == p


@pytest.mark.parametrize('direction', DIRECTIONS)
def test_flip_keeps_face_roll_changes_it(direction):
    for p in PLACEMENTS:
        assert face_of(flip(p, direction)) == face_of(p)
        rolled = face_of(roll(p, direction))
        assert rolled != face_of(p)
        assert rolled != opposite_face(face_of(p))


def test_roll_preserves_handedness_flip_reverses_it():
    for p in PLACEMENTS:
        for direction in DIRECTIONS:
            assert handedness(roll(p, direction)) == handedness(p)
            assert handedness(flip(p, direction)) == -handedness(p)


def test_relation():
    p = canonical_placement()
    assert relation(p, roll(p, Direction.UP), Direction.UP) is FoldAngle.FOLD90
    assert relation(p, flip(p, Direction.RIGHT), Direction.RIGHT) is FoldAngle.FOLD180
    assert relation(p, p, Direction.RIGHT) is None


def test_transition_table_agrees_with_roll_and_flip():
    for p in PLACEMENTS:
        for direction in DIRECTIONS:
            rolled, flipped = TRANSITIONS[PLACEMENT_INDEX[p]][DIRECTION_INDEX[direction]]
            assert PLACEMENTS[rolled] == roll(p, direction)
            assert PLACEMENTS[flipped] == flip(p, direction)


def test_invalid_placements():
    assert not is_valid_placement((0, 1, 2, 3))
    assert not is_valid_placement((0, 1, 3))
    assert not is_valid_placement((0, 1, 3, 3))
    assert is_valid_placement(Placement(0, 1, 3, 2))


def test_rotate_in_face_stays_on_face():
    p = canonical_placement()
    q = p
    for _ in range(4):
        q = rotate_in_face(q)
        assert face_of(q) == 1
    assert q == p


def test_opposite_faces():
    assert {label: opposite_face(label) for label in ALL_FACES} == {1: 4, 4: 1, 2: 6, 6: 2, 3: 5, 5: 3}
    for label in ALL_FACES:
        assert not face_vertices(label) & face_vertices(opposite_face(label))
