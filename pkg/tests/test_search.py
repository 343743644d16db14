import random
from dataclasses import replace

import pytest

from src.geometry.cube import FoldAngle, opposite_face
from src.model.grid import Axis, CellCoord, H, HoleKind, V, build, fill_holes, hole_free
from src.tools.constructions import fixture
from src.tools.engine import covered_faces, implied_angles, is_consistent
from src.tools.search import (
    FacemappingSearch, SearchConfig, all_facemappings, compile_problem, exists_onto_facemapping,
    infer_orientations,
)
from src.tools.verdict import VerdictStatus
from src.utils.errors import NodeLimitExceeded, PolyominoError
from tests.conftest import pairwise_even, slit, square, vertical_slit_layouts


def test_two_by_two_never_onto():
    found = all_facemappings(hole_free(2, 2))
    assert found
    assert all(len(covered_faces(fm)) <= 4 for fm in found)
    assert exists_onto_facemapping(hole_free(2, 2)).status is VerdictStatus.UNFOLDABLE_CERTIFIED


def test_every_emitted_facemapping_is_consistent():
    poly = build(3, 4, [slit(1, 1)])
    for fm in FacemappingSearch(poly, SearchConfig(enumerate_all=True)):
        assert is_consistent(poly, fm)


def test_anchor_is_canonical():
    problem = compile_problem(hole_free(3, 2))
    assert problem.cells[0] == CellCoord(0, 0)
    assert len(problem.anchors) == 1


def test_three_slits_has_onto_facemapping(three_slits):
    verdict = exists_onto_facemapping(three_slits)
    assert verdict.status is VerdictStatus.FACEMAPPING_EXISTS
    assert is_consistent(three_slits, verdict.witness)
    assert len(covered_faces(verdict.witness)) == 6
    assert verdict.stats['nodes'] > 0


@pytest.mark.parametrize('keep', [(0, 1), (0, 2), (1, 2)])
def test_any_two_of_three_slits_fail(three_slits, keep):
    verdict = exists_onto_facemapping(fill_holes(three_slits, keep))
    assert verdict.status is VerdictStatus.UNFOLDABLE_CERTIFIED


@pytest.mark.slow
def test_pruning_does_not_change_the_answer(three_slits):
    filled = fill_holes(three_slits, (0, 2))
    for poly in (three_slits, filled):
        pruned = exists_onto_facemapping(poly, SearchConfig(use_lemma_pruning=True))
        oracle = exists_onto_facemapping(poly, SearchConfig(use_lemma_pruning=False))
        assert pruned.status is oracle.status


def test_three_wide_slit_strip_is_unfoldable():
    verdict = exists_onto_facemapping(build(3, 5, [slit(1, 1)]))
    assert verdict.status is VerdictStatus.UNFOLDABLE_CERTIFIED


def test_even_separated_pair_is_unfoldable():
    verdict = exists_onto_facemapping(build(4, 6, [slit(1, 1), slit(3, 1)]))
    assert verdict.status is VerdictStatus.UNFOLDABLE_CERTIFIED


def test_node_limit(three_slits):
    config = SearchConfig(node_limit=5)
    with pytest.raises(NodeLimitExceeded):
        list(FacemappingSearch(three_slits, config))
    verdict = exists_onto_facemapping(three_slits, config)
    assert verdict.status is VerdictStatus.UNKNOWN
    assert verdict.reason == 'node-limit'


def test_node_limit_must_be_positive():
    with pytest.raises(ValueError):
        SearchConfig(node_limit=0)


def test_config_from_settings(settings):
    config = SearchConfig.from_settings(settings, node_limit=123, workers=None)
    assert config.node_limit == 123
    assert config.use_lemma_pruning is True
    assert config.workers is None


@pytest.mark.slow
def test_parallel_search_agrees(three_slits):
    config = SearchConfig(parallel=True, workers=2, split_depth=4)
    verdict = exists_onto_facemapping(three_slits, config)
    assert verdict.status is VerdictStatus.FACEMAPPING_EXISTS
    assert is_consistent(three_slits, verdict.witness)

    everything = replace(config, enumerate_all=True)
    poly = build(3, 4, [slit(1, 1)])
    assert set(FacemappingSearch(poly, everything)) == set(all_facemappings(poly))


def test_infer_orientations_from_fixture_digits(three_slits):
    labels = fixture('three-slits').face_labels
    fm = infer_orientations(three_slits, labels)
    assert fm is not None
    assert is_consistent(three_slits, fm)
    assert fm.faces() == labels


def test_infer_orientations_constant_domino():
    fm = infer_orientations(hole_free(2, 1), {CellCoord(0, 0): 1, CellCoord(1, 0): 1})
    assert fm is not None


def test_infer_orientations_opposite_faces():
    labels = {CellCoord(0, 0): 1, CellCoord(1, 0): opposite_face(1)}
    assert infer_orientations(hole_free(2, 1), labels) is None


def test_infer_orientations_needs_every_cell():
    assert infer_orientations(hole_free(2, 1), {CellCoord(0, 0): 1}) is None


@pytest.mark.parametrize('width,height', [(w, h) for w in range(2, 5) for h in range(2, 5)])
def test_hole_free_rectangles_fold_in_lines(width, height):
    poly = hole_free(width, height)
    found = all_facemappings(poly, use_lemma_pruning=False)
    assert found
    for fm in found:
        angles = implied_angles(poly, fm)
        for x in range(1, width):
            assert len({angles[V(x, y)] for y in range(height)}) == 1
        for y in range(1, height):
            assert len({angles[H(x, y)] for x in range(width)}) == 1
        vertical = [a for edge, a in angles.items() if edge.axis is Axis.VERTICAL]
        horizontal = [a for edge, a in angles.items() if edge.axis is Axis.HORIZONTAL]
        assert all(a is FoldAngle.FOLD180 for a in vertical) or all(a is FoldAngle.FOLD180 for a in horizontal)
        assert len(covered_faces(fm)) <= 4


@pytest.mark.parametrize('height', [4, 5, 6])
def test_three_wide_slit_strips_never_fold(height):
    layouts = list(vertical_slit_layouts(3, height, range(1, 3)))
    assert layouts
    for poly in layouts:
        verdict = exists_onto_facemapping(poly)
        assert verdict.status is VerdictStatus.UNFOLDABLE_CERTIFIED, [str(h) for h in poly.holes]


@pytest.mark.slow
@pytest.mark.parametrize('width,height', [(w, h) for w in range(3, 6) for h in range(4, 8)])
def test_even_separated_slits_have_no_onto_facemapping(width, height):
    layouts = [p for p in vertical_slit_layouts(width, height, range(1, 4)) if pairwise_even(p)]
    assert layouts
    for poly in layouts:
        verdict = exists_onto_facemapping(poly)
        assert verdict.status is VerdictStatus.UNFOLDABLE_CERTIFIED, [str(h) for h in poly.holes]


_SMALL_SHAPES = [(1, n) for n in range(2, 9)] + [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (4, 4)]


def _random_small_polyominoes(count, seed=2022):
    """Random polyominoes with at most 12 attached creases"""
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        width, height = rng.choice(_SMALL_SHAPES)
        spots = [square(x, y) for x in range(1, width - 1) for y in range(1, height - 1)]
        for kind, length in ((HoleKind.SLIT2, 2), (HoleKind.SLIT1, 1)):
            spots += [slit(x, y, 'v', kind) for x in range(1, width) for y in range(1, height - length)]
            spots += [slit(x, y, 'h', kind) for x in range(1, width - length) for y in range(1, height)]
        holes = rng.sample(spots, min(len(spots), rng.randint(0, 3)))
        try:
            poly = build(width, height, holes)
        except PolyominoError:
            continue
        if len(poly.attached_edges) <= 12:
            found.append(poly)
    return found


@pytest.mark.parametrize('poly', _random_small_polyominoes(50), ids=str)
def test_pruning_matches_brute_force(poly):
    pruned = all_facemappings(poly, use_lemma_pruning=True)
    brute = all_facemappings(poly, use_lemma_pruning=False)
    assert set(pruned) == set(brute)
    assert len(pruned) == len(set(pruned))
