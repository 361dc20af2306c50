"""
Exact ground truth for test-sized graphs.

Works on its own bitmask adjacency (bit i of `masks[i]` is never set) built
from a read-only snapshot, so nothing here touches maintainer state.
"""

import logging
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Optional, Set, Tuple

from app.config import settings
from app.exceptions import InstanceTooLarge
from app.models.graph import DynamicGraph
from app.schemas.bench import SwapWitness

logger = logging.getLogger(__name__)


class _BitGraph:
    """Induced subgraph as bitmasks over positions 0..n-1."""

    __slots__ = ("ids", "masks")

    def __init__(self, g: DynamicGraph, vertices: Iterable[int]):
        self.ids: List[int] = sorted(vertices)
        index: Dict[int, int] = {v: i for i, v in enumerate(self.ids)}
        self.masks: List[int] = [0] * len(self.ids)
        for i, v in enumerate(self.ids):
            m = 0
            for w in g.adj[v]:
                j = index.get(w)
                if j is not None:
                    m |= 1 << j
            self.masks[i] = m

    @property
    def n(self) -> int:
        return len(self.ids)

    def decode(self, mask: int) -> Set[int]:
        return {self.ids[i] for i in _bits(mask)}


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover_bound(masks: List[int], mask: int) -> int:
    """Number of cliques in a greedy clique cover of `mask`; bounds alpha from above."""
    cliques = 0
    rest = mask
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        clique = low
        cand = masks[v] & rest
        while cand:
            lw = cand & -cand
            clique |= lw
            cand &= masks[lw.bit_length() - 1]
        rest &= ~clique
        cliques += 1
    return cliques


def _min_degree_greedy(masks: List[int], mask: int) -> Tuple[int, int]:
    """Lower bound: repeatedly take a minimum-degree vertex."""
    size, chosen = 0, 0
    while mask:
        v = min(_bits(mask), key=lambda i: bin(masks[i] & mask).count("1"))
        chosen |= 1 << v
        size += 1
        mask &= ~((1 << v) | masks[v])
    return size, chosen


def _branch_and_reduce(bg: _BitGraph) -> Tuple[int, int]:
    """Maximum independent set of `bg` as (size, bitmask)."""
    masks = bg.masks
    best = list(_min_degree_greedy(masks, (1 << bg.n) - 1))

    def solve(mask: int, size: int, chosen: int) -> None:
        # degree <= 1 vertices are always safe to take
        while True:
            pick = -1
            top, top_deg = -1, -1
            for v in _bits(mask):
                d = bin(masks[v] & mask).count("1")
                if d <= 1:
                    pick = v
                    break
                if d > top_deg:
                    top, top_deg = v, d
            if pick < 0:
                break
            chosen |= 1 << pick
            size += 1
            mask &= ~((1 << pick) | masks[pick])
        if not mask:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if top_deg == 2:
            # only disjoint cycles remain; taking any vertex opens a path
            solve(mask & ~((1 << top) | masks[top]), size + 1, chosen | (1 << top))
            return
        if size + _clique_cover_bound(masks, mask) <= best[0]:
            return
        solve(mask & ~((1 << top) | masks[top]), size + 1, chosen | (1 << top))
        solve(mask & ~(1 << top), size, chosen)

    solve((1 << bg.n) - 1, 0, 0)
    return best[0], best[1]


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise InstanceTooLarge(f"{what} has {n} vertices; oracle cap is {cap}")


def alpha_of(g: DynamicGraph, vertices: Iterable[int], cap: Optional[int] = None) -> Tuple[int, Set[int]]:
    """Exact alpha of the subgraph induced by `vertices`, with one maximum set."""
    cap = settings.ORACLE_CAP if cap is None else cap
    bg = _BitGraph(g, vertices)
    _check_cap(bg.n, cap, "induced subgraph")
    size, mask = _branch_and_reduce(bg)
    return size, bg.decode(mask)


def brute_force_alpha(g: DynamicGraph, cap: Optional[int] = None) -> Tuple[int, Set[int]]:
    """
    Exact independence number by branch and reduce.

    Args:
        g: Graph to solve
        cap: Largest accepted vertex count (default ORACLE_CAP)

    Returns:
        (alpha, one maximum independent set)

    Raises:
        InstanceTooLarge: If g has more than `cap` vertices
    """
    cap = settings.ORACLE_CAP if cap is None else cap
    _check_cap(g.n, cap, "graph")
    return alpha_of(g, g.adj, cap)


def naive_alpha(g: DynamicGraph, cap: Optional[int] = None) -> Tuple[int, Set[int]]:
    """Independence number by plain subset enumeration, largest subsets first."""
    cap = settings.NAIVE_CAP if cap is None else cap
    _check_cap(g.n, cap, "graph")
    bg = _BitGraph(g, g.adj)
    for size in range(bg.n, 0, -1):
        for combo in combinations(range(bg.n), size):
            union = 0
            for i in combo:
                union |= 1 << i
            if all(not (bg.masks[i] & union) for i in combo):
                return size, {bg.ids[i] for i in combo}
    return 0, set()


def certify_maximal(g: DynamicGraph, independent_set: Iterable[int]) -> Optional[int]:
    """
    None if the set is a maximal independent set of `g`, else a violating
    vertex: a member with a neighbor in the set, or an outsider without one.
    """
    members = set(independent_set)
    for v in sorted(g.adj):
        hit = g.adj[v] & members
        if v in members and hit:
            return v
        if v not in members and not hit:
            return v
    return None


def _candidates(g: DynamicGraph, members: Set[int], key: Tuple[int, ...]) -> Set[int]:
    """Every vertex outside the set whose set-neighbors are a nonempty subset of `key`."""
    allowed = set(key)
    region: Set[int] = set()
    for s in key:
        region |= g.adj[s]
    return {u for u in region if u not in members and (g.adj[u] & members) <= allowed}


def _swap_at(
    g: DynamicGraph, members: Set[int], key: Tuple[int, ...], cap: int
) -> Optional[SwapWitness]:
    cands = _candidates(g, members, key)
    if len(cands) <= len(key):
        return None
    size, best = alpha_of(g, cands, cap)
    if size > len(key):
        return SwapWitness(level=len(key), swap_out=list(key), swap_in=sorted(best))
    return None


def certify_swap_free(
    g: DynamicGraph,
    independent_set: Iterable[int],
    k: int,
    cap: Optional[int] = None,
    subset_cap: Optional[int] = None,
) -> Optional[SwapWitness]:
    """
    Check that no S of size j <= k admits more than j independent candidates.

    For k <= 2 the search is exhaustive: every singleton, then only the pairs
    that are exactly the set-neighbors of some outside vertex (any other pair's
    candidate set is the union of two cliques once level 1 is clean). Larger k
    enumerates subsets up to `subset_cap`.

    Args:
        g: Graph
        independent_set: M, assumed independent in g
        k: Largest swap size to look for
        cap: Largest candidate subgraph handed to the exact solver
        subset_cap: Largest number of subsets enumerated for k > 2

    Returns:
        None if M has no j-swap for any j <= k, else a witness

    Raises:
        InstanceTooLarge: If a candidate subgraph or the subset count exceeds its cap
    """
    cap = settings.ORACLE_CAP if cap is None else cap
    subset_cap = settings.CERTIFY_SUBSET_CAP if subset_cap is None else subset_cap
    members = set(independent_set)
    ordered = sorted(members)

    for v in ordered:
        witness = _swap_at(g, members, (v,), cap)
        if witness is not None:
            return witness
    if k < 2:
        return None

    if k == 2:
        pairs = set()
        for u in g.adj:
            if u in members:
                continue
            hit = g.adj[u] & members
            if len(hit) == 2:
                pairs.add(tuple(sorted(hit)))
        for key in sorted(pairs):
            witness = _swap_at(g, members, key, cap)
            if witness is not None:
                return witness
        return None

    total = sum(comb(len(ordered), j) for j in range(2, k + 1))
    if total > subset_cap:
        raise InstanceTooLarge(
            f"{total} subsets of M up to size {k}; certification cap is {subset_cap}"
        )
    for j in range(2, k + 1):
        for key in combinations(ordered, j):
            witness = _swap_at(g, members, key, cap)
            if witness is not None:
                return witness
    logger.debug("certified %d-swap-free over %d subsets", k, total)
    return None
