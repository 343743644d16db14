import pytest

from src.geometry.cube import FoldAngle
from src.model.grid import H, V, build, hole_free
from src.tools.engine import implied_angles
from src.tools.propagation import Conflict, RuleKind, audit_rules, crease_rules, propagate
from src.tools.search import all_facemappings
from tests.conftest import slit

F90, F180 = FoldAngle.FOLD90, FoldAngle.FOLD180


@pytest.fixture
def slit_column():
    """4x6 with one vertical slit on the middle crease, ring intact"""
    return build(4, 6, [slit(2, 2)])


def test_vertex_rules_spread_a_fold():
    poly = hole_free(3, 3)
    result = propagate(poly, {V(1, 1): F90})
    assert all(result[V(1, y)] is F90 for y in range(3))
    assert all(result[H(x, y)] is F180 for x in range(3) for y in (1, 2))
    assert V(2, 0) not in result


def test_slit_ties_creases_above_and_below(slit_column):
    result = propagate(slit_column, {V(2, 4): F180})
    assert result[V(2, 1)] is F180


def test_slit_forbids_ring_and_flap_together(slit_column):
    result = propagate(slit_column, {V(2, 1): F90, H(1, 3): F90})
    assert isinstance(result, Conflict)
    assert result.rule.kind is RuleKind.NOT_BOTH_90


def test_slit_centre_creases_agree(slit_column):
    result = propagate(slit_column, {H(1, 3): F90})
    assert result[H(2, 3)] is F90


def test_cut_edges_are_not_creases(slit_column):
    with pytest.raises(ValueError):
        propagate(slit_column, {V(2, 2): F90})


def test_empty_assignment_stays_empty(slit_column):
    assert propagate(slit_column, {}) == {}


def test_rules_hold_in_every_facemapping():
    poly = build(3, 4, [slit(1, 1)])
    rules = crease_rules(poly)
    assert rules
    for fm in all_facemappings(poly, use_lemma_pruning=False):
        assert audit_rules(implied_angles(poly, fm), rules) == []


def test_pruning_keeps_every_facemapping():
    poly = build(3, 4, [slit(1, 1)])
    pruned = set(all_facemappings(poly, use_lemma_pruning=True))
    exhaustive = set(all_facemappings(poly, use_lemma_pruning=False))
    assert pruned == exhaustive
    assert exhaustive
