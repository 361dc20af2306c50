"""
OneSwap engine: keeps M free of 1-swaps, i.e. every C[v] is a clique.
"""

from typing import List, Optional

from app.models.graph import DynamicGraph, OpKind, UpdateOp
from app.models.state import KeySet, MaintainerState, SwapQueue
from app.schemas.bench import SwapWitness
from app.services.framework import SwapEngine, valid_pending
from app.services.maximal import SimpleOutcome


def oneswap_test(
    state: MaintainerState, g: DynamicGraph, v: int, pending: List[int]
) -> Optional[SwapWitness]:
    """
    Check whether C[v] stays a clique after adding the pending vertices.

    For each u in P[v], |N(u) ∩ C[v]| is computed in d(u) time; a shortfall
    means some w in C[v] is not adjacent to u and {u, w} replaces v.
    """
    key = (v,)
    cands = state.hierarchy.members(key)
    size = len(cands)
    for u in valid_pending(state, key, pending):
        adj = g.adj[u]
        state.touches += len(adj)
        inside = sum(1 for w in adj if w in cands)
        # u itself is in cands but not in N(u)
        if inside < size - 1:
            w = min(x for x in cands if x != u and x not in adj)
            return SwapWitness(level=1, swap_out=[v], swap_in=[u, w])
    return None


def oneswap_seed(
    state: MaintainerState,
    g: DynamicGraph,
    op: UpdateOp,
    outcome: SimpleOutcome,
    queue: SwapQueue,
    max_count: int = 1,
) -> None:
    """
    Queue the vertices an update newly placed in low candidate levels.

    Cases: a new vertex with a low count; neighbors of a removed or evicted
    M vertex whose count dropped; the far endpoint of a removed edge whose
    near endpoint is in M; and the two endpoints of a removed edge that
    share their single IS-neighbor.
    """
    h = state.hierarchy

    def push_if_low(w: int) -> None:
        if w in state.is_nbrs and w not in state.in_set and 1 <= state.count(w) <= max_count:
            queue.push(h.key_of(w), w)

    if op.kind is OpKind.ADD_VERTEX:
        push_if_low(op.u)
    elif op.kind in (OpKind.REMOVE_VERTEX, OpKind.ADD_EDGE):
        if outcome.removed_from_is is not None:
            for w in sorted(outcome.decreased):
                push_if_low(w)
    elif op.kind is OpKind.REMOVE_EDGE:
        u, v = op.u, op.v
        keys = outcome.endpoint_keys
        if not keys[u] or not keys[v]:
            # an M vertex has no IS-neighbors, so one endpoint was in M
            push_if_low(u)
            push_if_low(v)
        elif len(keys[u]) == 1 and keys[u] == keys[v]:
            (w,) = keys[u]
            if h.key_of(u) == (w,):
                queue.push((w,), u)


class OneSwapEngine(SwapEngine):
    """Level-1 engine."""

    name = "oneswap"
    max_level = 1

    def seed(self, state, g, op, outcome, queue) -> None:
        oneswap_seed(state, g, op, outcome, queue, max_count=1)

    def detect(
        self, state: MaintainerState, g: DynamicGraph, level: int, key: KeySet, pending: List[int]
    ) -> Optional[SwapWitness]:
        return oneswap_test(state, g, key[0], pending)

    def find(self, state, g, witness, queue) -> None:
        (v,) = witness.swap_out
        h = state.hierarchy
        for w in sorted(g.adj[v]):
            if w not in state.in_set and state.count(w) == 1:
                queue.push(h.key_of(w), w)
