"""
Simple dynamic maximal independent set maintenance and the MoveIn/MoveOut
primitives shared by the swap engines.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Set, Tuple

from app.exceptions import GraphError
from app.models.graph import DynamicGraph, OpKind, UpdateOp
from app.models.state import MaintainerState

logger = logging.getLogger(__name__)


@dataclass
class SimpleOutcome:
    """What `simple_update` did besides mutating the graph and state."""

    applied: bool = True
    decreased: Set[int] = field(default_factory=set)
    changed: Set[int] = field(default_factory=set)
    evicted: Optional[int] = None
    removed_from_is: Optional[int] = None
    # IS-neighbor sets of the op endpoints before the op (edge removal seeding)
    endpoint_keys: Dict[int, Set[int]] = field(default_factory=dict)


def move_in(state: MaintainerState, g: DynamicGraph, v: int) -> None:
    """
    Insert `v` into M.

    Every neighbor gains `v` as an IS-neighbor and is re-filed in the
    candidate hierarchy (evicted once its count exceeds the top level).
    """
    assert v not in state.in_set, f"{v} already in M"
    assert not state.is_nbrs[v], f"{v} has IS-neighbors {state.is_nbrs[v]}"
    hierarchy = state.hierarchy
    hierarchy.relocate(v, hierarchy.key_of(v), None)
    state.in_set.add(v)
    for u in g.adj[v]:
        state.touches += 1
        state.is_nbrs[u].add(v)
        state.changed.add(u)
        state.place(u)


def move_out(state: MaintainerState, g: DynamicGraph, v: int) -> None:
    """
    Remove `v` from M. Does not restore maximality.
    """
    assert v in state.in_set, f"{v} not in M"
    state.in_set.discard(v)
    for u in g.adj[v]:
        state.touches += 1
        state.is_nbrs[u].discard(v)
        state.changed.add(u)
        state.decreased.add(u)
        state.place(u)
    state.place(v)


def extend_maximal(state: MaintainerState, g: DynamicGraph, region: Iterable[int]) -> int:
    """Move in every count-0 vertex of `region`, ascending id. Returns how many joined."""
    joined = 0
    for u in sorted(region):
        state.touches += 1
        if u not in state.in_set and not state.is_nbrs[u]:
            move_in(state, g, u)
            joined += 1
    return joined


def add_vertex_state(state: MaintainerState, v: int, nbrs: Iterable[int]) -> None:
    """Register a vertex that is already present in the graph."""
    state.is_nbrs[v] = {u for u in nbrs if u in state.in_set}
    state.changed.add(v)
    state.place(v)


def simple_update(
    state: MaintainerState, g: DynamicGraph, op: UpdateOp, strict: bool = True
) -> SimpleOutcome:
    """
    Apply `op` to the graph and restore M to a maximal independent set.

    Args:
        state: Maintainer state consistent with `g`
        g: Graph before the op; mutated in place
        op: Update operation
        strict: Raise on invalid ops; otherwise skip them

    Returns:
        SimpleOutcome with the vertices whose count decreased or changed

    Raises:
        GraphError: If the op is invalid and strict is set
    """
    outcome = SimpleOutcome()
    try:
        g.check(op)
    except GraphError as exc:
        if strict:
            raise
        logger.warning("Skipping invalid op %s: %s", op, exc.detail)
        outcome.applied = False
        return outcome

    if op.kind is OpKind.ADD_VERTEX:
        g.add_vertex(op.u, op.nbrs)
        add_vertex_state(state, op.u, op.nbrs)
        if not state.is_nbrs[op.u]:
            move_in(state, g, op.u)

    elif op.kind is OpKind.REMOVE_VERTEX:
        v = op.u
        nbrs = g.adj[v]
        if v in state.in_set:
            move_out(state, g, v)
            outcome.removed_from_is = v
        state.hierarchy.relocate(v, state.hierarchy.key_of(v), None)
        del state.is_nbrs[v]
        state.changed.discard(v)
        state.decreased.discard(v)
        freed = sorted(nbrs)
        g.remove_vertex(v)
        if outcome.removed_from_is is not None:
            extend_maximal(state, g, freed)

    elif op.kind is OpKind.ADD_EDGE:
        u, v = op.u, op.v
        if u in state.in_set and v in state.in_set:
            evict, keep = _eviction_order(g, u, v)
            move_out(state, g, evict)
            g.add_edge(u, v)
            state.is_nbrs[evict].add(keep)
            state.changed.add(evict)
            state.place(evict)
            outcome.evicted = evict
            outcome.removed_from_is = evict
            extend_maximal(state, g, g.adj[evict])
        else:
            g.add_edge(u, v)
            for a, b in ((u, v), (v, u)):
                if a in state.in_set:
                    state.is_nbrs[b].add(a)
                    state.changed.add(b)
                    state.place(b)

    else:
        u, v = op.u, op.v
        outcome.endpoint_keys = {u: set(state.is_nbrs[u]), v: set(state.is_nbrs[v])}
        g.remove_edge(u, v)
        # at most one endpoint is in M
        if u in state.in_set or v in state.in_set:
            a, b = (u, v) if u in state.in_set else (v, u)
            state.is_nbrs[b].discard(a)
            state.changed.add(b)
            state.decreased.add(b)
            state.place(b)
            if not state.is_nbrs[b]:
                move_in(state, g, b)

    outcome.decreased = set(state.decreased)
    outcome.changed = set(state.changed)
    return outcome


def _eviction_order(g: DynamicGraph, u: int, v: int) -> Tuple[int, int]:
    """Endpoint to evict on an edge between two M vertices: larger degree, then smaller id."""
    du, dv = g.degree(u), g.degree(v)
    if du > dv or (du == dv and u < v):
        return u, v
    return v, u
