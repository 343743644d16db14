"""
Exhaustive search for consistent facemappings.

The anchor cell (the lexicographically least present cell) is fixed to the
canonical placement; the 48 symmetries of the cube act simply transitively on
placements, so nothing is lost. Cells are placed in breadth-first order over
attached edges, branching on the fold angle of the edge to the parent. Every
other edge to an already placed cell is checked and its implied angle
recorded, and crease rules propagate the assignment between decisions.
"""

import logging
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass, replace
from typing import Dict, Iterator, List, Optional, Tuple

from ..geometry.cube import (
    DIRECTION_INDEX, FACE_BY_INDEX, FACE_COUNT, PLACEMENT_INDEX, PLACEMENTS, TRANSITIONS,
    canonical_placement,
)
from ..model.facemapping import Facemapping
from ..model.grid import CellCoord, Polyomino, edge_between
from ..utils.errors import NodeLimitExceeded
from ..utils.utils import format_duration
from .propagation import A90, A180, UNSET, RuleIndex, crease_rules, propagate_codes
from .verdict import Verdict

logger = logging.getLogger(__name__)


@dataclass
class SearchConfig:
    enumerate_all: bool = True
    node_limit: int = 10 ** 8
    use_lemma_pruning: bool = True
    parallel: bool = False
    workers: Optional[int] = None
    split_depth: int = 6

    def __post_init__(self):
        if self.node_limit <= 0:
            raise ValueError(f"node_limit must be positive, got {self.node_limit}")

    @classmethod
    def from_settings(cls, settings: dict, **overrides) -> 'SearchConfig':
        search = settings.get('search', {})
        values = {
            'node_limit': search.get('node_limit', 10 ** 8),
            'use_lemma_pruning': search.get('use_lemma_pruning', True),
            'parallel': search.get('parallel', False),
            'workers': search.get('workers'),
            'split_depth': search.get('split_depth', 6),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass
class SearchStats:
    nodes: int = 0
    conflicts: int = 0
    emitted: int = 0
    subtrees: int = 0
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class FoldProblem:
    """A polyomino compiled to integer tables, in placement order"""
    cells: Tuple[CellCoord, ...]
    parent: Tuple[int, ...]
    parent_dir: Tuple[int, ...]
    parent_crease: Tuple[int, ...]
    # per position: (earlier position, direction from it, crease id)
    back_edges: Tuple[Tuple[Tuple[int, int, int], ...], ...]
    crease_count: int
    compiled: tuple
    watches: tuple
    labels: Optional[Tuple[int, ...]]
    anchors: Tuple[int, ...]


def compile_problem(poly: Polyomino, use_rules: bool = True,
                    face_labels: Optional[Dict[CellCoord, int]] = None) -> FoldProblem:
    index = RuleIndex(poly.attached_edges, crease_rules(poly) if use_rules else [])

    order = [poly.anchor]
    position = {poly.anchor: 0}
    parent, parent_dir, parent_crease = [-1], [-1], [-1]
    back_edges: List[List[Tuple[int, int, int]]] = [[]]
    queue = deque([poly.anchor])
    while queue:
        cell = queue.popleft()
        for direction, other in poly.neighbors(cell):
            if other in position:
                continue
            position[other] = len(order)
            order.append(other)
            parent.append(position[cell])
            parent_dir.append(DIRECTION_INDEX[direction])
            parent_crease.append(index.crease_id[edge_between(cell, other)])
            back_edges.append([])
            queue.append(other)

    for pos, cell in enumerate(order):
        for direction, other in poly.neighbors(cell):
            earlier = position[other]
            if earlier < pos and earlier != parent[pos]:
                back_edges[pos].append((
                    earlier,
                    DIRECTION_INDEX[direction.opposite],
                    index.crease_id[edge_between(cell, other)],
                ))

    if face_labels is None:
        labels = None
        anchors = (PLACEMENT_INDEX[canonical_placement()],)
    else:
        labels = tuple(face_labels[c] for c in order)
        anchors = tuple(i for i, face in enumerate(FACE_BY_INDEX) if face == labels[0])

    return FoldProblem(
        cells=tuple(order),
        parent=tuple(parent),
        parent_dir=tuple(parent_dir),
        parent_crease=tuple(parent_crease),
        back_edges=tuple(tuple(b) for b in back_edges),
        crease_count=len(index.creases),
        compiled=index.compiled,
        watches=index.watches,
        labels=labels,
        anchors=anchors,
    )


class _Explorer:
    """Depth-first walk over one problem, counting nodes and conflicts"""

    def __init__(self, problem: FoldProblem, prune: bool, node_limit: int):
        self.problem = problem
        self.prune = prune
        self.node_limit = node_limit
        self.nodes = 0
        self.conflicts = 0

    def roots(self) -> Iterator[Tuple[List[int], List[int]]]:
        size = len(self.problem.cells)
        for anchor in self.problem.anchors:
            self._tick()
            placements = [-1] * size
            placements[0] = anchor
            yield placements, [UNSET] * self.problem.crease_count

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise NodeLimitExceeded(self.node_limit)

    def walk(self, pos: int, placements: List[int], assign: List[int],
             stop_depth: Optional[int] = None) -> Iterator[Tuple[int, List[int], List[int]]]:
        """Yield (depth, placements, assignment) at leaves; the lists are reused, copy them"""
        p = self.problem
        if pos == len(p.cells) or pos == stop_depth:
            yield pos, placements, assign
            return

        crease = p.parent_crease[pos]
        fixed = assign[crease]
        steps = TRANSITIONS[placements[p.parent[pos]]][p.parent_dir[pos]]
        for code in ((fixed,) if fixed else (A90, A180)):
            self._tick()
            placement = steps[code - 1]
            if p.labels is not None and FACE_BY_INDEX[placement] != p.labels[pos]:
                self.conflicts += 1
                continue

            trial = assign[:]
            changed = []
            if not fixed:
                trial[crease] = code
                changed.append(crease)
            consistent = True
            for other, direction, edge in p.back_edges[pos]:
                roll_to, flip_to = TRANSITIONS[placements[other]][direction]
                implied = A90 if roll_to == placement else A180 if flip_to == placement else UNSET
                if implied == UNSET or (trial[edge] and trial[edge] != implied):
                    consistent = False
                    break
                if not trial[edge]:
                    trial[edge] = implied
                    changed.append(edge)
            if consistent and self.prune and changed:
                consistent = propagate_codes(trial, changed, p.compiled, p.watches) < 0
            if not consistent:
                self.conflicts += 1
                continue

            placements[pos] = placement
            yield from self.walk(pos + 1, placements, trial, stop_depth)

    def leaves(self, first_onto: bool = False) -> Iterator[Tuple[int, ...]]:
        for placements, assign in self.roots():
            for _, leaf, _ in self.walk(1, placements, assign):
                result = tuple(leaf)
                if first_onto and not _is_onto(result):
                    continue
                yield result


def _is_onto(placements) -> bool:
    return len({FACE_BY_INDEX[i] for i in placements}) == FACE_COUNT


def _explore_subtree(problem: FoldProblem, state, prune: bool, node_limit: int, first_onto: bool):
    """Worker entry point: all leaves (or the first onto leaf) below one frontier state"""
    depth, placements, assign = state
    explorer = _Explorer(problem, prune, node_limit)
    found = []
    for _, leaf, _ in explorer.walk(depth, list(placements), list(assign)):
        result = tuple(leaf)
        if first_onto and not _is_onto(result):
            continue
        found.append(result)
        if first_onto:
            break
    return found, explorer.nodes, explorer.conflicts


class FacemappingSearch:
    """Iterable over consistent facemappings of a polyomino; stats fill in as it runs.

    With enumerate_all the stream holds every consistent facemapping with the
    anchor placed canonically (or on its labelled face when face labels are
    given); otherwise it stops after the first onto facemapping and yields
    only that one.
    """

    def __init__(self, poly: Polyomino, config: Optional[SearchConfig] = None,
                 face_labels: Optional[Dict[CellCoord, int]] = None):
        self.poly = poly
        self.config = config or SearchConfig()
        self.stats = SearchStats()
        self.problem = compile_problem(poly, self.config.use_lemma_pruning, face_labels)

    def __iter__(self) -> Iterator[Facemapping]:
        start = time.perf_counter()
        first_onto = not self.config.enumerate_all
        source = self._parallel(first_onto) if self.config.parallel else self._sequential(first_onto)
        try:
            for placements in source:
                self.stats.emitted += 1
                yield self._facemapping(placements)
                if first_onto:
                    return
        finally:
            source.close()
            self.stats.elapsed = time.perf_counter() - start
            logger.info(
                f"Search on {self.poly}: {self.stats.nodes} nodes, {self.stats.conflicts} conflicts, "
                f"{self.stats.emitted} emitted in {format_duration(self.stats.elapsed)}"
            )

    def _facemapping(self, placements) -> Facemapping:
        return Facemapping.from_dict({
            cell: PLACEMENTS[index] for cell, index in zip(self.problem.cells, placements)
        })

    def _sequential(self, first_onto: bool) -> Iterator[Tuple[int, ...]]:
        explorer = _Explorer(self.problem, self.config.use_lemma_pruning, self.config.node_limit)
        try:
            yield from explorer.leaves(first_onto)
        finally:
            self.stats.nodes += explorer.nodes
            self.stats.conflicts += explorer.conflicts

    def _parallel(self, first_onto: bool) -> Iterator[Tuple[int, ...]]:
        explorer = _Explorer(self.problem, self.config.use_lemma_pruning, self.config.node_limit)
        frontier = []
        for placements, assign in explorer.roots():
            for depth, state_placements, state_assign in explorer.walk(
                    1, placements, assign, stop_depth=self.config.split_depth):
                frontier.append((depth, tuple(state_placements), tuple(state_assign)))
        self.stats.nodes += explorer.nodes
        self.stats.conflicts += explorer.conflicts
        self.stats.subtrees = len(frontier)
        remaining = self.config.node_limit - explorer.nodes
        logger.debug(f"Split {self.poly} into {len(frontier)} subtrees at depth {self.config.split_depth}")
        if not frontier:
            return

        pool = ProcessPoolExecutor(max_workers=self.config.workers)
        try:
            futures = [
                pool.submit(_explore_subtree, self.problem, state,
                            self.config.use_lemma_pruning, remaining, first_onto)
                for state in frontier
            ]
            ordered = as_completed(futures) if first_onto else futures
            for future in ordered:
                found, nodes, conflicts = future.result()
                self.stats.nodes += nodes
                self.stats.conflicts += conflicts
                if self.stats.nodes > self.config.node_limit:
                    raise NodeLimitExceeded(self.config.node_limit)
                for placements in found:
                    yield placements
                    if first_onto:
                        return
        finally:
            pool.shutdown(wait=True, cancel_futures=True)


def search_facemappings(poly: Polyomino, config: Optional[SearchConfig] = None) -> FacemappingSearch:
    return FacemappingSearch(poly, config)


def exists_onto_facemapping(poly: Polyomino, config: Optional[SearchConfig] = None) -> Verdict:
    config = replace(config or SearchConfig(), enumerate_all=False)
    search = FacemappingSearch(poly, config)
    try:
        witness = next(iter(search), None)
    except NodeLimitExceeded as e:
        logger.warning(f"{poly}: {e}")
        return Verdict.unknown('node-limit', str(e), stats=search.stats.to_dict())
    if witness is None:
        return Verdict.unfoldable('no-onto-facemapping', 'exhaustive search found no onto facemapping',
                                  stats=search.stats.to_dict())
    return Verdict.facemapping_exists(witness, stats=search.stats.to_dict())


def infer_orientations(poly: Polyomino, face_labels: Dict[CellCoord, int],
                       node_limit: int = 10 ** 7) -> Optional[Facemapping]:
    """A consistent facemapping with the given face label on every cell, or None"""
    face_labels = {CellCoord(*c): v for c, v in face_labels.items()}
    if set(face_labels) != poly.cell_set:
        logger.debug(f"Face labels do not cover the cells of {poly}")
        return None
    if any(not 1 <= v <= FACE_COUNT for v in face_labels.values()):
        return None
    search = FacemappingSearch(poly, SearchConfig(node_limit=node_limit), face_labels)
    try:
        return next(iter(search), None)
    except NodeLimitExceeded:
        logger.warning(f"Orientation inference on {poly} hit the node limit")
        return None


def all_facemappings(poly: Polyomino, use_lemma_pruning: bool = True,
                     node_limit: int = 10 ** 8) -> List[Facemapping]:
    config = SearchConfig(enumerate_all=True, use_lemma_pruning=use_lemma_pruning, node_limit=node_limit)
    return list(FacemappingSearch(poly, config))
