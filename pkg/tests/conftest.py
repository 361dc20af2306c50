"""
Pytest fixtures for testing.
"""

import math

import pytest

from app.models.graph import DynamicGraph
from app.schemas.bench import PlrParams
from app.services.generators import gen_plr, gen_subdivided_clique, gen_subdivided_hypercube


@pytest.fixture
def path3():
    """Path 0-1-2."""
    return DynamicGraph.from_edges([(0, 1), (1, 2)])


@pytest.fixture
def triangle():
    return DynamicGraph.from_edges([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def star():
    """Center 0 with leaves 1..5."""
    return DynamicGraph.from_edges([(0, i) for i in range(1, 6)])


@pytest.fixture
def gadget():
    """
    u=0, v=1 in M; x=2 sees both, y=3 sees u, z=4 sees v; x, y, z pairwise
    non-adjacent, so {u, v} is a two-swap vertex set but neither is one-swap.
    """
    return DynamicGraph.from_edges([(2, 0), (2, 1), (3, 0), (4, 1)])


@pytest.fixture
def k4_prime():
    return gen_subdivided_clique(4)


@pytest.fixture
def q3_prime():
    return gen_subdivided_hypercube(3)


@pytest.fixture
def small_plr():
    """Seeded PLR graph on eighty vertices."""
    return gen_plr(PlrParams(alpha=math.log(60), beta=2.3, seed=7))
