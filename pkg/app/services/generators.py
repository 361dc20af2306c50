"""
Seeded graph and update-stream generators.

Every function here is a pure function of its arguments; randomness comes
from a `numpy.random.default_rng(seed)` created per call.
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

import numpy as np

from app.config import settings
from app.exceptions import Exhausted, InfeasibleSequence
from app.models.graph import DynamicGraph, OpKind, UpdateOp, apply_op
from app.schemas.bench import OpMix, PlrParams

logger = logging.getLogger(__name__)


# Initial sets

def greedy_initial_is(g: DynamicGraph) -> Set[int]:
    """Ascending-id greedy maximal independent set."""
    chosen: Set[int] = set()
    for v in sorted(g.adj):
        if not g.adj[v] & chosen:
            chosen.add(v)
    return chosen


def prefix_ops(g: DynamicGraph) -> Tuple[DynamicGraph, List[UpdateOp]]:
    """
    Edgeless copy of `g` plus the edge insertions that rebuild it.

    On the edgeless graph every vertex is in the maximal set, so replaying
    the insertions reaches `g` from a trivially maximal start.
    """
    base = DynamicGraph.from_edges([], vertices=sorted(g.adj))
    return base, [UpdateOp.add_edge(u, v) for u, v in g.edges()]


# Power-law random graphs

def partial_zeta(a: float, b: int) -> float:
    """Sum of i^-a for i = 1..b."""
    if b < 1:
        return 0.0
    return float(np.sum(np.arange(1, b + 1, dtype=np.float64) ** -a))


def plr_expected_ratio(p: PlrParams) -> float:
    """Expected approximation ratio of a 1-swap-free set on P(alpha, beta)."""
    delta = p.max_degree
    return 1.0 + 2.0 * (partial_zeta(2 * p.beta, delta) - 1.0) / partial_zeta(p.beta, delta)


def plr_degree_sequence(p: PlrParams) -> List[int]:
    """
    Target degrees, ascending, one entry per vertex.

    An odd stub total loses one stub from a degree-1 vertex, which then
    stays isolated.
    """
    degrees: List[int] = []
    for x in range(1, p.max_degree + 1):
        degrees.extend([x] * p.expected_count(x))
    if sum(degrees) % 2:
        odd = next(i for i, d in enumerate(degrees) if d % 2)
        degrees[odd] -= 1
    return degrees


def _repair(
    g: DynamicGraph,
    edges: List[Tuple[int, int]],
    stubs: np.ndarray,
    rng: np.random.Generator,
    attempts: int,
) -> np.ndarray:
    """
    Place stalled stub pairs (a, b) by rewiring a random edge (c, d) into
    (a, c) and (b, d); degrees of c and d are unchanged.
    """
    left: List[int] = []
    for a, b in stubs.reshape(-1, 2).tolist():
        placed = False
        for _ in range(attempts if edges else 0):
            idx = int(rng.integers(len(edges)))
            c, d = edges[idx]
            if a in (c, d) or b in (c, d) or g.has_edge(a, c) or g.has_edge(b, d):
                continue
            g.remove_edge(c, d)
            g.add_edge(a, c)
            g.add_edge(b, d)
            edges[idx] = (a, c)
            edges.append((b, d))
            placed = True
            break
        if not placed:
            left.extend((a, b))
    return np.array(left, dtype=np.int64)


def gen_plr(p: PlrParams, max_retries: Optional[int] = None) -> DynamicGraph:
    """
    Power-law random graph by configuration-model stub matching.

    Each round shuffles the open stubs, pairs neighbors in the shuffled
    order and keeps every pair that is neither a self-loop nor a repeat;
    rejected stubs go to the next round. A round that places nothing falls
    back to edge rewiring.

    Raises:
        InfeasibleSequence: If stubs remain after `max_retries` rounds
    """
    retries = settings.PLR_MAX_RETRIES if max_retries is None else max_retries
    rng = np.random.default_rng(p.seed)
    degrees = plr_degree_sequence(p)
    g = DynamicGraph.from_edges([], vertices=range(len(degrees)))
    stubs = np.repeat(np.arange(len(degrees), dtype=np.int64), degrees)
    edges: List[Tuple[int, int]] = []

    for _ in range(retries):
        if stubs.size == 0:
            break
        rng.shuffle(stubs)
        left: List[int] = []
        for a, b in stubs.reshape(-1, 2).tolist():
            if a == b or g.has_edge(a, b):
                left.extend((a, b))
            else:
                g.add_edge(a, b)
                edges.append((a, b))
        progressed = len(left) < stubs.size
        stubs = np.array(left, dtype=np.int64)
        if stubs.size and not progressed:
            stubs = _repair(g, edges, stubs, rng, retries)

    if stubs.size:
        raise InfeasibleSequence(
            f"{stubs.size} stubs left unmatched after {retries} rounds "
            f"(alpha={p.alpha}, beta={p.beta}, seed={p.seed})"
        )
    logger.info("PLR graph alpha=%.4f beta=%.3f: n=%d m=%d max degree %d", p.alpha, p.beta, g.n, g.m, p.max_degree)
    return g


# Worst-case families

def gen_subdivided_clique(n: int) -> Tuple[DynamicGraph, Set[int]]:
    """K'_n: originals 0..n-1, one subdivision vertex per pair, in pair order."""
    if n < 3:
        raise ValueError("K'_n needs n >= 3")
    g = DynamicGraph.from_edges([], vertices=range(n))
    w = n
    for u, v in combinations(range(n), 2):
        g.add_vertex(w, (u, v))
        w += 1
    return g, set(range(n))


def gen_subdivided_hypercube(n: int) -> Tuple[DynamicGraph, Set[int]]:
    """Q'_n: originals 0..2^n-1 (bit strings), one subdivision vertex per cube edge."""
    if n < 2:
        raise ValueError("Q'_n needs n >= 2")
    size = 1 << n
    g = DynamicGraph.from_edges([], vertices=range(size))
    w = size
    for u in range(size):
        for bit in range(n):
            if not u & (1 << bit):
                g.add_vertex(w, (u, u | (1 << bit)))
                w += 1
    return g, set(range(size))


# Update streams

class _StreamState:
    """Live vertices and edges as swap-remove lists for O(1) uniform sampling."""

    def __init__(self, g: DynamicGraph):
        self.g = g
        self.live: List[int] = sorted(g.adj)
        self.live_at: Dict[int, int] = {v: i for i, v in enumerate(self.live)}
        self.edges: List[Tuple[int, int]] = list(g.edges())
        self.edge_at: Dict[Tuple[int, int], int] = {e: i for i, e in enumerate(self.edges)}
        self.next_id = max(self.live, default=-1) + 1

    @staticmethod
    def _drop(items: list, index: dict, item) -> None:
        i = index.pop(item)
        last = items.pop()
        if i < len(items):
            items[i] = last
            index[last] = i

    def _add_edge(self, u: int, v: int) -> None:
        e = (min(u, v), max(u, v))
        self.edge_at[e] = len(self.edges)
        self.edges.append(e)

    def apply(self, op: UpdateOp) -> None:
        if op.kind is OpKind.ADD_VERTEX:
            self.live_at[op.u] = len(self.live)
            self.live.append(op.u)
            for w in op.nbrs:
                self._add_edge(op.u, w)
            self.next_id = max(self.next_id, op.u + 1)
        elif op.kind is OpKind.REMOVE_VERTEX:
            for w in sorted(self.g.adj[op.u]):
                self._drop(self.edges, self.edge_at, (min(op.u, w), max(op.u, w)))
            self._drop(self.live, self.live_at, op.u)
        elif op.kind is OpKind.ADD_EDGE:
            self._add_edge(op.u, op.v)
        else:
            self._drop(self.edges, self.edge_at, (min(op.u, op.v), max(op.u, op.v)))
        apply_op(self.g, op)


def _sample(state: _StreamState, kind: OpKind, rng: np.random.Generator, attempts: int) -> Optional[UpdateOp]:
    live = state.live
    if kind is OpKind.ADD_VERTEX:
        d = 0
        if live:
            d = state.g.degree(live[int(rng.integers(len(live)))])
        picks = rng.choice(len(live), size=d, replace=False) if d else []
        return UpdateOp.add_vertex(state.next_id, sorted(live[int(i)] for i in picks))
    if kind is OpKind.REMOVE_VERTEX:
        if not live:
            return None
        return UpdateOp.remove_vertex(live[int(rng.integers(len(live)))])
    if kind is OpKind.REMOVE_EDGE:
        if not state.edges:
            return None
        u, v = state.edges[int(rng.integers(len(state.edges)))]
        return UpdateOp.remove_edge(u, v)
    if len(live) < 2:
        return None
    for _ in range(attempts):
        i, j = rng.choice(len(live), size=2, replace=False).tolist()
        u, v = live[i], live[j]
        if not state.g.has_edge(u, v):
            return UpdateOp.add_edge(min(u, v), max(u, v))
    return None


def gen_op_stream(
    g: DynamicGraph,
    count: int,
    mix: Optional[OpMix] = None,
    seed: int = 0,
    max_resample: Optional[int] = None,
) -> List[UpdateOp]:
    """
    Random update stream that replays on `g` without a strict-mode error.

    `g` is not modified. When the drawn kind has no valid move (e.g. edge
    removal on an edgeless graph) the kind is redrawn among the others; the
    random pair search behind an edge insertion gives up after
    `max_resample` draws.

    Raises:
        Exhausted: If no kind with positive weight has a valid move
    """
    mix = mix or OpMix()
    attempts = settings.STREAM_MAX_RESAMPLE if max_resample is None else max_resample
    rng = np.random.default_rng(seed)
    kinds = [OpKind.ADD_VERTEX, OpKind.REMOVE_VERTEX, OpKind.ADD_EDGE, OpKind.REMOVE_EDGE]
    weights = np.array([mix.add_vertex, mix.remove_vertex, mix.add_edge, mix.remove_edge])
    weights = weights / weights.sum()
    state = _StreamState(g.copy())
    ops: List[UpdateOp] = []

    for step in range(count):
        op = None
        open_kinds = weights.copy()
        while op is None and open_kinds.sum() > 0:
            pick = int(rng.choice(4, p=open_kinds / open_kinds.sum()))
            op = _sample(state, kinds[pick], rng, attempts)
            # a kind with no valid move is out for the rest of this step
            open_kinds[pick] = 0.0
        if op is None:
            raise Exhausted(f"no valid op of any weighted kind at step {step + 1}")
        state.apply(op)
        ops.append(op)
    return ops
