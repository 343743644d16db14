"""
Tools package for foldlab: fold engine, search, classification and fixtures
"""

from .analyzer import (
    CooperationAnswer, CooperationReport, CooperationSweep, FoldClassifier, Support,
    classify, cooperates, four_by_n_quadruple, minimally_cooperating_sets, odd_pair_exists, support,
)
from .constructions import (
    Fixture, FixtureReport, FixtureVerifier, fixture, fixtures, generate_staircase,
    staircase_witness, verify_fixture,
)
from .engine import (
    HoleFoldClass, covered_faces, hole_fold_class, implied_angle, is_consistent, lift_contraction,
)
from .propagation import Conflict, CreaseRule, propagate
from .reduction import Reduction, reduce_to_fixture
from .search import (
    FacemappingSearch, SearchConfig, all_facemappings, exists_onto_facemapping,
    infer_orientations, search_facemappings,
)
from .verdict import Verdict, VerdictStatus
