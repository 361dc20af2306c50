"""
Long-running soaks and bounds over seeded corpora.

The `integration` classes run reduced corpora by default; the `slow` ones
run the full sizes (pytest -m slow).
"""

import logging
import math
import time

import numpy as np
import pytest

from app.models.graph import DynamicGraph, UpdateOp
from app.schemas.bench import PlrParams
from app.services.engines import get_engine
from app.services.framework import DynamicMIS, count_one_region, partition_profile
from app.services.generators import gen_op_stream, gen_plr
from app.services.oracles import alpha_of, brute_force_alpha, certify_maximal, certify_swap_free
from tests.test_one_swap import random_maximal

logger = logging.getLogger(__name__)


def random_graph(seed: int, max_n: int = 14) -> DynamicGraph:
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, max_n + 1))
    p = float(rng.uniform(0.1, 0.6))
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return DynamicGraph.from_edges(edges, vertices=range(n))


def grow_edge_by_edge(target: DynamicGraph, seed: int, engine: str = "oneswap") -> DynamicMIS:
    """Insert the edges of `target` in random order, starting edgeless with M = V."""
    edges = list(target.edges())
    np.random.default_rng(seed).shuffle(edges)
    base = DynamicGraph.from_edges([], vertices=sorted(target.adj))
    mis = DynamicMIS(base, get_engine(engine), set(base.adj))
    for u, v in edges:
        mis.apply(UpdateOp.add_edge(u, v))
    return mis


def plr_corpus(count: int):
    """Seeded PLR parameters spanning alpha = ln 500 .. ln 2000 and three betas."""
    alphas = np.linspace(math.log(500), math.log(2000), max(count // 3, 1))
    params = []
    for i in range(count):
        params.append(PlrParams(alpha=float(alphas[i // 3 % len(alphas)]), beta=(1.9, 2.3, 2.7)[i % 3], seed=i))
    return params


def soak(p: PlrParams, engine: str, k: int, ops: int, check_every: int) -> None:
    g = gen_plr(p)
    stream = gen_op_stream(g, ops, seed=p.seed)
    mis = DynamicMIS(g, get_engine(engine))
    mis.refine()
    for step, op in enumerate(stream, start=1):
        mis.apply(op)
        if step % check_every == 0:
            assert certify_maximal(mis.graph, mis.independent_set) is None
            assert certify_swap_free(mis.graph, mis.independent_set, k, cap=mis.graph.n) is None


def bound_and_region(seed: int) -> None:
    target = random_graph(seed)
    mis = grow_edge_by_edge(target, seed)
    g = mis.graph
    alpha, _ = brute_force_alpha(g)
    assert 2 * alpha <= (g.max_degree() + 2) * mis.size
    is_side, cands = count_one_region(mis.state, g)
    assert alpha_of(g, is_side | cands)[0] == len(is_side)


def cross_check(seed: int) -> None:
    g = random_graph(seed, max_n=12)
    members = random_maximal(g, seed)
    for engine, k in (("oneswap", 1), ("twoswap", 2)):
        found = DynamicMIS(g.copy(), get_engine(engine), members).find_swap()
        assert (found is None) == (certify_swap_free(g, members, k) is None)


@pytest.mark.integration
class TestReducedCorpora:
    """Reduced versions of the soaks and bounds."""

    @pytest.mark.parametrize("seed", range(60))
    def test_ratio_bound_and_count_one_region(self, seed):
        """Test alpha <= (Delta/2 + 1)|M| and alpha of the count-1 region."""
        bound_and_region(seed)

    @pytest.mark.parametrize("seed", range(100))
    def test_detection_cross_check(self, seed):
        """Test engine detection against the oracle on random maximal sets."""
        cross_check(seed)

    @pytest.mark.parametrize("p", plr_corpus(3), ids=lambda p: f"b{p.beta}-s{p.seed}")
    def test_one_swap_soak(self, p):
        """Test a short OneSwap soak on PLR graphs."""
        soak(p, "oneswap", 1, ops=500, check_every=50)

    def test_two_swap_soak(self):
        """Test a short TwoSwap soak on a small PLR graph."""
        soak(PlrParams(alpha=math.log(150), beta=2.3, seed=1), "twoswap", 2, ops=500, check_every=50)

    def test_count_identities_every_update(self):
        """Test both count identities after each of 1,000 updates."""
        g = gen_plr(PlrParams(alpha=math.log(300), beta=2.1, seed=2))
        mis = DynamicMIS(g, get_engine("twoswap"))
        for op in gen_op_stream(g.copy(), 1000, seed=2):
            mis.apply(op)
            profile = partition_profile(mis.state, mis.graph)
            assert profile.n == profile.is_size + sum(profile.by_count.values())
            assert profile.weighted_count_sum == profile.is_degree_sum


@pytest.mark.slow
class TestFullCorpora:
    """Full-size corpora."""

    @pytest.mark.parametrize("p", plr_corpus(50), ids=lambda p: f"b{p.beta}-s{p.seed}")
    def test_one_swap_soak(self, p):
        """Test 5,000 mixed ops with checks every 50 on each PLR graph."""
        soak(p, "oneswap", 1, ops=5000, check_every=50)

    @pytest.mark.parametrize("p", plr_corpus(50), ids=lambda p: f"b{p.beta}-s{p.seed}")
    def test_two_swap_soak(self, p):
        """Test the TwoSwap soak on the instances with n <= 400."""
        g = gen_plr(p)
        if g.n > 400:
            pytest.skip(f"n={g.n} above the TwoSwap certification size")
        soak(p, "twoswap", 2, ops=5000, check_every=50)

    def test_ratio_bound_corpus(self):
        """Test the ratio bound and region identity over 500 graphs."""
        for seed in range(500):
            bound_and_region(seed)

    def test_cross_check_corpus(self):
        """Test engine detection against the oracle on 1,000 pairs."""
        for seed in range(1000):
            cross_check(seed)

    def test_count_identities_long(self):
        """Test both count identities after each of 10,000 updates."""
        g = gen_plr(PlrParams(alpha=math.log(2000), beta=2.3, seed=9))
        mis = DynamicMIS(g, get_engine("twoswap"))
        for op in gen_op_stream(g.copy(), 10_000, seed=9):
            mis.apply(op)
            profile = partition_profile(mis.state, mis.graph)
            assert profile.n == profile.is_size + sum(profile.by_count.values())
            assert profile.weighted_count_sum == profile.is_degree_sum

    def test_throughput_report(self):
        """Report TwoSwap updates per second on a PLR graph with n near 100,000."""
        g = gen_plr(PlrParams(alpha=math.log(62_000), beta=2.1, seed=0))
        ops = gen_op_stream(g, 100_000, seed=0)
        mis = DynamicMIS(g, get_engine("twoswap"))
        start = time.perf_counter()
        for op in ops:
            mis.apply(op)
        rate = len(ops) / (time.perf_counter() - start)
        logger.warning("TwoSwap throughput: %.0f updates/s on n=%d", rate, mis.graph.n)
        assert mis.size > 0
