"""
TwoSwap engine: keeps M free of 1-swaps and 2-swaps.

A pair S = {u, v} of M is two-swappable iff the complement of G[C[S]] has a
triangle. Without 1-swaps every such triangle holds a vertex x with
count 2 and IS-neighbors exactly S, so level-2 queue entries carry those x.
"""

from typing import Dict, List, Optional

from app.models.graph import DynamicGraph, OpKind, UpdateOp
from app.models.state import KeySet, MaintainerState, SwapQueue, make_key
from app.schemas.bench import SwapWitness
from app.services.framework import SwapEngine, logical_candidates, valid_pending
from app.services.maximal import SimpleOutcome
from app.services.one_swap import oneswap_seed, oneswap_test


def twoswap_test(
    state: MaintainerState, g: DynamicGraph, key: KeySet, pending: List[int]
) -> Optional[SwapWitness]:
    """
    Search the complement of G[C[S]] for a triangle through a pending x.

    C_x[S] = C[S] ∩ N(x) is built in d(x) time; z must lie in
    C^c_x[S] = C[S] \\ C_x[S]. For each y in C^c_x[S], a shortfall in
    |N(y) ∩ C^c_x[S]| proves such a z exists.
    """
    cands = logical_candidates(state, key)
    for x in valid_pending(state, key, pending):
        adj_x = g.adj[x]
        state.touches += len(adj_x)
        near = {c for c in adj_x if c in cands}
        far = sorted(c for c in cands if c != x and c not in near)
        if len(far) < 2:
            continue
        far_set = set(far)
        for y in far:
            adj_y = g.adj[y]
            state.touches += len(adj_y)
            hit = sum(1 for t in adj_y if t in far_set)
            if hit < len(far_set) - 1:
                z = next(t for t in far if t != y and t not in adj_y)
                return SwapWitness(level=2, swap_out=list(key), swap_in=[x, y, z])
    return None


def promote_after_clique_check(
    state: MaintainerState,
    g: DynamicGraph,
    v: int,
    pending: List[int],
    queue: SwapQueue,
) -> None:
    """
    v is not one-swappable: its new level-1 candidates may still complete a
    complement triangle through a count-2 neighbor w of v. Queue every such w
    that misses at least one new candidate.
    """
    fresh = valid_pending(state, (v,), pending)
    if not fresh:
        return
    hits: Dict[int, int] = {}
    for w in g.adj[v]:
        state.touches += 1
        if w not in state.in_set and state.count(w) == 2:
            hits[w] = 0
    if not hits:
        return
    # d(v) + sum of d(p) neighbor visits
    for p in fresh:
        adj_p = g.adj[p]
        state.touches += len(adj_p)
        for w in adj_p:
            if w in hits:
                hits[w] += 1
    h = state.hierarchy
    for w in sorted(hits):
        if hits[w] < len(fresh):
            queue.push(h.key_of(w), w)


def twoswap_seed(
    state: MaintainerState,
    g: DynamicGraph,
    op: UpdateOp,
    outcome: SimpleOutcome,
    queue: SwapQueue,
) -> None:
    """
    Queue initialization for levels 1 and 2.

    Vertex insertion, vertex deletion, edge insertion and an edge deletion
    next to M follow the one-level rules with counts up to 2. An edge
    deletion between two non-M vertices adds the level-2 cases: a shared
    count-2 neighbor of two distinct single IS-neighbors, and an endpoint
    with count 2 whose key contains the other endpoint's key.
    """
    oneswap_seed(state, g, op, outcome, queue, max_count=2)
    if op.kind is not OpKind.REMOVE_EDGE:
        return
    u, v = op.u, op.v
    keys = outcome.endpoint_keys
    if not keys[u] or not keys[v]:
        return
    h = state.hierarchy
    ku, kv = keys[u], keys[v]
    if len(ku) == 1 and len(kv) == 1 and ku != kv:
        pair = make_key(ku | kv)
        for w in sorted(h.members(pair)):
            state.touches += 1
            if w not in g.adj[u] and w not in g.adj[v]:
                queue.push(pair, w)
    for a, b in ((u, v), (v, u)):
        if len(keys[b]) == 2 and len(keys[a]) <= 2 and keys[a] <= keys[b]:
            queue.push(make_key(keys[b]), b)


class TwoSwapEngine(SwapEngine):
    """Level-1 and level-2 engine; level 1 is always drained first."""

    name = "twoswap"
    max_level = 2

    def seed(self, state, g, op, outcome, queue) -> None:
        twoswap_seed(state, g, op, outcome, queue)

    def detect(
        self, state: MaintainerState, g: DynamicGraph, level: int, key: KeySet, pending: List[int]
    ) -> Optional[SwapWitness]:
        if level == 1:
            return oneswap_test(state, g, key[0], pending)
        return twoswap_test(state, g, key, pending)

    def after_no_swap(self, state, g, level, key, pending, queue) -> None:
        if level == 1:
            promote_after_clique_check(state, g, key[0], pending, queue)

    def find(self, state, g, witness, queue) -> None:
        h = state.hierarchy
        region = set()
        for s in witness.swap_out:
            region |= g.adj[s]
        for w in sorted(region):
            if w not in state.in_set and 1 <= state.count(w) <= 2:
                queue.push(h.key_of(w), w)
