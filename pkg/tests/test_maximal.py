"""
Tests for the Simple maximal independent set maintainer.
"""

import pytest
from hypothesis import given, settings as hyp_settings

from app.exceptions import UnknownEdge
from app.models.graph import DynamicGraph, OpKind, UpdateOp
from app.services.engines import get_engine
from app.services.framework import DynamicMIS, audit_hierarchy
from app.services.generators import gen_op_stream
from app.services.maximal import _eviction_order, simple_update
from app.services.oracles import certify_maximal
from tests.strategies import seeds, small_graphs


def simple(g: DynamicGraph, initial=None) -> DynamicMIS:
    return DynamicMIS(g, get_engine("simple"), initial)


def local_cost(g: DynamicGraph, ends) -> int:
    """2 * sum over the op's endpoints of d(w) plus the degrees of N(w), plus 2."""
    total = 0
    for w in ends:
        if w in g.adj:
            total += g.degree(w) + sum(g.degree(y) for y in g.adj[w])
    return 2 * total + 2


@pytest.mark.unit
class TestSimpleUpdate:
    """Tests for single Simple updates."""

    def test_add_edge_evicts_larger_degree(self):
        """Test that the larger-degree endpoint leaves and its freed neighbors join."""
        g = DynamicGraph.from_edges([(0, 2), (0, 3)], vertices=[1])
        mis = simple(g)
        assert mis.independent_set == {0, 1}
        mis.apply(UpdateOp.add_edge(0, 1))
        assert mis.independent_set == {1, 2, 3}

    def test_add_edge_tie_evicts_smaller_id(self):
        """Test the tie break on equal degrees."""
        g = DynamicGraph.from_edges([], vertices=[0, 1])
        mis = simple(g)
        mis.apply(UpdateOp.add_edge(0, 1))
        assert mis.independent_set == {1}

    def test_eviction_order_pair(self):
        """Test that the evicted endpoint comes first and the kept one second."""
        g = DynamicGraph.from_edges([(0, 2), (0, 3)], vertices=[1])
        assert _eviction_order(g, 1, 0) == (0, 1)
        assert _eviction_order(g, 0, 1) == (0, 1)

    def test_edge_removal_records_endpoint_keys(self):
        """Test that both endpoints' IS-neighbor sets are taken before the removal."""
        g = DynamicGraph.from_edges([(2, 0), (2, 1), (3, 0), (4, 1), (2, 3)])
        mis = simple(g)
        assert mis.independent_set == {0, 1}
        outcome = simple_update(mis.state, mis.graph, UpdateOp.remove_edge(2, 3))
        assert outcome.endpoint_keys == {2: {0, 1}, 3: {0}}

    def test_remove_vertex_rejoins_neighbors(self, star):
        """Test that deleting the star center brings every leaf in."""
        mis = simple(star)
        assert mis.independent_set == {0}
        result = mis.apply(UpdateOp.remove_vertex(0))
        assert result.removed_from_is == 0
        assert mis.independent_set == {1, 2, 3, 4, 5}

    def test_remove_edge_frees_endpoint(self, path3):
        """Test that a vertex joins once its last IS-neighbor edge goes."""
        mis = simple(path3)
        assert mis.independent_set == {0, 2}
        mis.apply(UpdateOp.remove_edge(0, 1))
        assert mis.independent_set == {0, 2}
        assert mis.state.count(1) == 1
        mis.apply(UpdateOp.remove_edge(1, 2))
        assert mis.independent_set == {0, 1, 2}

    def test_add_vertex_joins_when_free(self, triangle):
        """Test vertex insertion with and without IS-neighbors."""
        mis = simple(triangle)
        mis.apply(UpdateOp.add_vertex(10, [1, 2]))
        assert 10 in mis.independent_set
        mis.apply(UpdateOp.add_vertex(11, [0]))
        assert 11 not in mis.independent_set
        assert mis.state.count(11) == 1

    def test_lenient_skip(self, path3):
        """Test that an invalid op is skipped in lenient mode."""
        mis = DynamicMIS(path3, get_engine("simple"), strict=False)
        result = mis.apply(UpdateOp.remove_edge(0, 2))
        assert result.applied is False
        assert mis.independent_set == {0, 2}

    def test_strict_raises(self, path3):
        """Test that strict mode raises on an invalid op."""
        mis = simple(path3)
        with pytest.raises(UnknownEdge):
            mis.apply(UpdateOp.remove_edge(0, 2))


@pytest.mark.unit
class TestSimpleInvariants:
    """Property tests over random streams."""

    @hyp_settings(max_examples=60, deadline=None)
    @given(g=small_graphs(max_n=10), seed=seeds)
    def test_stays_maximal(self, g, seed):
        """Test that M is maximal independent after every op."""
        ops = gen_op_stream(g, 30, seed=seed)
        mis = simple(g)
        for op in ops:
            mis.apply(op)
            assert certify_maximal(mis.graph, mis.independent_set) is None
            audit_hierarchy(mis.state, mis.graph)

    @hyp_settings(max_examples=40, deadline=None)
    @given(g=small_graphs(max_n=10), seed=seeds)
    def test_update_work_is_local(self, g, seed):
        """Test that one update touches only the two-hop neighborhood of its endpoints."""
        ops = gen_op_stream(g, 30, seed=seed)
        mis = simple(g)
        for op in ops:
            ends = [op.u] if op.kind in (OpKind.ADD_VERTEX, OpKind.REMOVE_VERTEX) else [op.u, op.v]
            before = mis.graph.copy()
            mis.state.touches = 0
            simple_update(mis.state, mis.graph, op)
            graph = before if op.kind in (OpKind.REMOVE_VERTEX, OpKind.REMOVE_EDGE) else mis.graph
            assert mis.state.touches <= local_cost(graph, ends)
