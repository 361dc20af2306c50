"""
Swap-based update framework: candidate hierarchy upkeep, swap queues and the
generic drain loop. Engines plug their swap tests into `SwapEngine`.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Set, Tuple

from app.exceptions import InvariantViolation
from app.models.graph import DynamicGraph, UpdateOp
from app.models.state import (
    CandidateHierarchy,
    KeySet,
    MaintainerState,
    SwapQueue,
)
from app.schemas.bench import PartitionProfile, SwapWitness
from app.services.generators import greedy_initial_is
from app.services.maximal import (
    SimpleOutcome,
    extend_maximal,
    move_in,
    move_out,
    simple_update,
)

logger = logging.getLogger(__name__)


def relocate_candidate(
    h: CandidateHierarchy, u: int, old_key: Optional[KeySet], new_key: Optional[KeySet]
) -> CandidateHierarchy:
    """Move `u` between stored lists; stored iff 1 <= |new_key| <= k."""
    if old_key is not None and len(old_key) > h.max_level:
        old_key = None
    h.relocate(u, old_key, new_key)
    return h


def logical_candidates(state: MaintainerState, key: KeySet) -> Set[int]:
    """
    C[S]: every vertex outside M whose IS-neighbors are a nonempty subset of S.

    Union of the stored lists of all nonempty subsets of S.
    """
    h = state.hierarchy
    result: Set[int] = set()
    for j in range(1, len(key) + 1):
        for sub in combinations(key, j):
            result |= h.members(sub)
    return result


class SwapEngine:
    """
    Plug-in contract for the drain loop.

    `seed` fills the queues after the maximal-IS update; `detect` looks for a
    swap on one queue entry without mutating anything; `after_no_swap` runs
    when `detect` found nothing; `find` re-seeds around an executed swap.
    """

    name = "simple"
    max_level = 0

    def seed(
        self,
        state: MaintainerState,
        g: DynamicGraph,
        op: UpdateOp,
        outcome: SimpleOutcome,
        queue: SwapQueue,
    ) -> None:
        return None

    def detect(
        self,
        state: MaintainerState,
        g: DynamicGraph,
        level: int,
        key: KeySet,
        pending: List[int],
    ) -> Optional[SwapWitness]:
        return None

    def after_no_swap(
        self,
        state: MaintainerState,
        g: DynamicGraph,
        level: int,
        key: KeySet,
        pending: List[int],
        queue: SwapQueue,
    ) -> None:
        return None

    def find(
        self, state: MaintainerState, g: DynamicGraph, witness: SwapWitness, queue: SwapQueue
    ) -> None:
        return None

    def test_and_swap(
        self,
        state: MaintainerState,
        g: DynamicGraph,
        level: int,
        key: KeySet,
        pending: List[int],
        queue: SwapQueue,
    ) -> bool:
        """Run the swap test for one queue entry and execute the swap if found."""
        witness = self.detect(state, g, level, key, pending)
        if witness is None:
            self.after_no_swap(state, g, level, key, pending, queue)
            return False
        execute_swap(state, g, witness)
        self.find(state, g, witness, queue)
        return True


def execute_swap(state: MaintainerState, g: DynamicGraph, witness: SwapWitness) -> None:
    """
    Move out the swap-out set, move in the first j swap-in vertices, then
    extend M to maximality over N(swap-out) in ascending id order.
    """
    before = state.size
    for v in witness.swap_out:
        move_out(state, g, v)
    for u in witness.swap_in[: witness.level]:
        move_in(state, g, u)
    region: Set[int] = set()
    for v in witness.swap_out:
        region |= g.adj[v]
    extend_maximal(state, g, region)
    assert state.size > before, f"swap {witness} did not grow M"
    logger.debug(
        "level-%d swap out=%s in=%s |M| %d -> %d",
        witness.level,
        witness.swap_out,
        witness.swap_in,
        before,
        state.size,
    )


def valid_pending(state: MaintainerState, key: KeySet, pending: Iterable[int]) -> List[int]:
    """Pending vertices still stored under `key`; stale ones are dropped."""
    h = state.hierarchy
    return [u for u in pending if u in state.is_nbrs and h.key_of(u) == key]


def reseed_changed(state: MaintainerState, queue: SwapQueue) -> None:
    """Queue every journaled vertex that now sits in levels 1..k."""
    h = state.hierarchy
    for w in sorted(state.changed):
        if w not in state.is_nbrs:
            continue
        key = h.key_of(w)
        if key is not None:
            queue.push(key, w)


def seed_all(state: MaintainerState, queue: SwapQueue) -> None:
    """Queue every stored candidate under its key, ascending id."""
    for w in sorted(state.hierarchy.position):
        queue.push(state.hierarchy.position[w], w)


def drain(state: MaintainerState, g: DynamicGraph, engine: SwapEngine, queue: SwapQueue) -> int:
    """
    Process queue entries, lowest level first, until every level is empty.

    Returns:
        Number of swaps fired
    """
    swaps = 0
    while True:
        entry = queue.pop()
        if entry is None:
            return swaps
        level, key, pending = entry
        if not state.is_subset_of_is(key):
            continue
        state.begin_transaction()
        if engine.test_and_swap(state, g, level, key, pending, queue):
            swaps += 1
            reseed_changed(state, queue)


@dataclass
class UpdateResult:
    applied: bool
    swaps: int
    removed_from_is: Optional[int] = None


def framework_update(
    state: MaintainerState,
    g: DynamicGraph,
    op: UpdateOp,
    engine: SwapEngine,
    strict: bool = True,
) -> UpdateResult:
    """
    Apply one update and restore the engine's no-k-swap guarantee.

    Args:
        state: Maintainer state consistent with `g`
        g: Graph; mutated in place
        op: Update operation
        engine: Engine supplying seeding rules and swap tests
        strict: Raise on invalid ops; otherwise skip them

    Returns:
        UpdateResult with the number of swaps fired
    """
    state.begin_transaction()
    outcome = simple_update(state, g, op, strict=strict)
    if not outcome.applied:
        return UpdateResult(applied=False, swaps=0)
    if engine.max_level == 0:
        return UpdateResult(True, 0, outcome.removed_from_is)

    queue = SwapQueue(engine.max_level)
    engine.seed(state, g, op, outcome, queue)
    reseed_changed(state, queue)
    swaps = drain(state, g, engine, queue)
    return UpdateResult(True, swaps, outcome.removed_from_is)


def full_drain(state: MaintainerState, g: DynamicGraph, engine: SwapEngine) -> int:
    """Seed every stored candidate and drain; returns swaps fired."""
    if engine.max_level == 0:
        return 0
    queue = SwapQueue(engine.max_level)
    seed_all(state, queue)
    return drain(state, g, engine, queue)


def scan_for_swap(
    state: MaintainerState, g: DynamicGraph, engine: SwapEngine
) -> Optional[SwapWitness]:
    """Detection-only sweep of every stored list with the engine's own tests."""
    h = state.hierarchy
    for level in range(1, engine.max_level + 1):
        for key in sorted(h.keys(level)):
            if not state.is_subset_of_is(key):
                continue
            witness = engine.detect(state, g, level, key, sorted(h.members(key)))
            if witness is not None:
                return witness
    return None


def build_state(g: DynamicGraph, initial_is: Iterable[int], max_level: int) -> MaintainerState:
    """
    Build maintainer state for `g` with M = `initial_is`.

    Raises:
        InvariantViolation: If the initial set is not independent in `g`
    """
    state = MaintainerState(max_level)
    members = set(initial_is)
    for v in sorted(members):
        if v not in g.adj:
            raise InvariantViolation(f"initial IS vertex {v} is not in the graph")
        clash = g.adj[v] & members
        if clash:
            raise InvariantViolation(
                f"initial IS is not independent: edge ({v}, {min(clash)})"
            )
    state.in_set = members
    for v in g.adj:
        state.is_nbrs[v] = g.adj[v] & members
    for v in sorted(g.adj):
        state.place(v)
    joined = extend_maximal(state, g, g.adj)
    if joined:
        logger.info("Initial IS was not maximal; %d vertices added", joined)
    return state


def audit_hierarchy(state: MaintainerState, g: DynamicGraph) -> None:
    """
    Rebuild counts, IS-neighbor sets and level lists from scratch and compare.

    Raises:
        InvariantViolation: On the first mismatch
    """
    if set(state.is_nbrs) != set(g.adj):
        raise InvariantViolation("maintainer state and graph disagree on the vertex set")
    for v, nbrs in g.adj.items():
        expected = set() if v in state.in_set else nbrs & state.in_set
        if v in state.in_set and nbrs & state.in_set:
            raise InvariantViolation(f"M is not independent at vertex {v}")
        if state.is_nbrs[v] != expected:
            raise InvariantViolation(
                f"IS-neighbors of {v}: maintained {sorted(state.is_nbrs[v])}, "
                f"recomputed {sorted(expected)}"
            )
    rebuilt = CandidateHierarchy(state.max_level)
    for v in sorted(g.adj):
        key = state.key_for(v)
        relocate_candidate(rebuilt, v, None, key)
    for level in range(1, state.max_level + 1):
        if rebuilt.levels[level] != state.hierarchy.levels[level]:
            raise InvariantViolation(f"level-{level} candidate lists diverged from a rebuild")
    if rebuilt.position != state.hierarchy.position:
        raise InvariantViolation("candidate position index diverged from a rebuild")


def partition_profile(state: MaintainerState, g: DynamicGraph) -> PartitionProfile:
    """Sizes of M and of the count classes of its complement."""
    by_count: dict = {}
    for v, nbrs in state.is_nbrs.items():
        if v in state.in_set:
            continue
        c = len(nbrs)
        by_count[c] = by_count.get(c, 0) + 1
    region_is, region_cands = count_one_region(state, g)
    return PartitionProfile(
        n=g.n,
        is_size=state.size,
        by_count=dict(sorted(by_count.items())),
        is_degree_sum=sum(g.degree(v) for v in state.in_set),
        max_degree=g.max_degree(),
        region_is_side=len(region_is),
        region_candidate_side=len(region_cands),
    )


def count_one_region(state: MaintainerState, g: DynamicGraph) -> Tuple[Set[int], Set[int]]:
    """
    The count-1 region: (M_1, M^c_1) where M^c_1 are the count-1 vertices
    and M_1 the members of M adjacent to at least one of them.
    """
    count_one = {v for v, nbrs in state.is_nbrs.items() if v not in state.in_set and len(nbrs) == 1}
    is_side = set()
    for v in count_one:
        is_side |= state.is_nbrs[v]
    return is_side, count_one


class DynamicMIS:
    """
    Graph plus maintained independent set behind one engine.

    Example:
        mis = DynamicMIS(graph, get_engine("twoswap"))
        mis.apply(UpdateOp.add_edge(1, 2))
    """

    def __init__(
        self,
        graph: DynamicGraph,
        engine: SwapEngine,
        initial_is: Optional[Iterable[int]] = None,
        strict: bool = True,
    ):
        if initial_is is None:
            initial_is = greedy_initial_is(graph)
        self.graph = graph
        self.engine = engine
        self.strict = strict
        self.state = build_state(graph, initial_is, engine.max_level)

    def apply(self, op: UpdateOp) -> UpdateResult:
        return framework_update(self.state, self.graph, op, self.engine, strict=self.strict)

    def refine(self) -> int:
        """Drain every stored candidate; makes an arbitrary initial M swap-free."""
        return full_drain(self.state, self.graph, self.engine)

    def find_swap(self) -> Optional[SwapWitness]:
        return scan_for_swap(self.state, self.graph, self.engine)

    @property
    def independent_set(self) -> Set[int]:
        return set(self.state.in_set)

    @property
    def size(self) -> int:
        return self.state.size

    def __repr__(self) -> str:
        return f"<DynamicMIS(engine={self.engine.name}, n={self.graph.n}, |M|={self.size})>"
