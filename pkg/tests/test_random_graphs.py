"""
Test the cell sampler and random graph helpers
"""
import numpy as np
import pytest

from qgain.services.gaingraph import is_connected, stats
from qgain.services.quaternion import make_gain_sampler
from qgain.services.random_graphs import (
    cell_is_feasible,
    random_cells,
    random_gain_graph,
    random_tree_edges,
    sample_cell,
)


@pytest.mark.parametrize("cell,feasible", [
    ((1, 0, 0), True),
    ((2, 0, 2), True),
    ((2, 1, 0), False),
    ((3, 1, 0), True),
    ((3, 1, 1), False),
    ((4, 0, 3), True),
    ((4, 1, 3), False),
    ((5, 1, 2), True),
    ((5, 0, 0), False),
    ((5, 7, 0), False),
    ((5, 6, 0), True),
    ((6, 0, 6), False),
])
def test_cell_is_feasible(cell, feasible):
    """Test feasibility of (n, c, p) cells"""
    assert cell_is_feasible(*cell) is feasible


@pytest.mark.parametrize("n,leaves", [(6, 2), (6, 5), (9, 4), (12, 3)])
def test_random_tree_exact_leaf_count(n, leaves):
    """Test Pruefer trees with a prescribed number of leaves"""
    rng = np.random.default_rng(n * leaves)
    for _ in range(10):
        edges = random_tree_edges(n, rng, leaves)
        degree = np.bincount(np.array(edges).ravel(), minlength=n)
        assert len(edges) == n - 1
        assert int((degree == 1).sum()) == leaves


@pytest.mark.parametrize("cell", [(6, 1, 0), (7, 2, 2), (8, 0, 4), (9, 3, 1), (10, 2, 0)])
def test_sample_cell_hits_target(cell):
    """Test sampled graphs are connected and land in the requested cell"""
    rng = np.random.default_rng(1)
    sample = make_gain_sampler(rng, "lipschitz")
    n, c, p = cell
    for _ in range(5):
        result = sample_cell(n, c, p, rng, sample)
        G = result.graph
        assert is_connected(G)
        s = stats(G)
        assert (s.n, s.c) == (n, c)
        if not result.relaxed:
            assert s.p == p


def test_sample_cell_six_cycle():
    """Test the only graph in (6, 1, 0) is the 6-cycle"""
    result = sample_cell(6, 1, 0, np.random.default_rng(4))
    assert not result.relaxed
    assert all(result.graph.degree(v) == 2 for v in result.graph.vertices)


def test_sample_cell_single_edge():
    """Test the two-vertex cell"""
    result = sample_cell(2, 0, 2, np.random.default_rng(0))
    assert (result.graph.n, result.graph.m, result.relaxed) == (2, 1, False)


def test_sampling_is_deterministic():
    """Test equal seeds give equal graphs"""
    def draw(seed):
        rng = np.random.default_rng(seed)
        return sample_cell(8, 2, 2, rng, make_gain_sampler(rng, "cayley")).graph

    assert draw(42) == draw(42)


def test_random_cells_are_feasible():
    """Test drawn cells respect the limits"""
    cells = random_cells(np.random.default_rng(3), 50, 9, 3)
    assert len(cells) == 50
    for n, c, p in cells:
        assert 2 <= n <= 9 and 0 <= c <= 3
        assert cell_is_feasible(n, c, p)


def test_random_gain_graph():
    """Test the uniform edge sampler caps m at the complete graph"""
    rng = np.random.default_rng(6)
    G = random_gain_graph(5, 4, rng)
    assert (G.n, G.m) == (5, 4)
    assert random_gain_graph(4, 100, rng).m == 6
    assert random_gain_graph(3, 0, rng).m == 0


if __name__ == "__main__":
    pytest.main([__file__])
