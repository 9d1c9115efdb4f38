"""
Test the family constructors and worked examples
"""
import numpy as np
import pytest
from pydantic import ValidationError

from qgain.models.family_specs import Attachment, FlowerSpec, InfinitySpec, ThetaSpec
from qgain.services.families import (
    FLOWER_PRESETS,
    example_bicyclic_lipschitz,
    example_c4,
    example_matrices,
    flower_preset,
    flower_tree,
    make_cycle,
    make_flower,
    make_infinity,
    make_spider_tree,
    make_theta,
    make_type1_cycle,
    randomize_switching,
)
from qgain.services.gaingraph import stats
from qgain.services.matching import tree_rank
from qgain.services.quaternion import LIPSCHITZ_UNITS, make_gain_sampler
from qgain.services.rank_engine import CycleType, cycle_type_of, elimination_rank
from qgain.utils.exceptions import FamilySpecError


@pytest.fixture
def sample():
    return make_gain_sampler(np.random.default_rng(17), "cayley")


def test_make_cycle_hits_requested_type(sample):
    """Test random free gains still give the requested type"""
    for n, t in [(4, CycleType.TYPE1), (4, CycleType.TYPE2), (5, CycleType.TYPE3), (5, CycleType.TYPE4),
                 (6, CycleType.TYPE1), (7, CycleType.TYPE4)]:
        G = make_cycle(n, t, sample, start=3)
        assert G.vertices == tuple(range(3, 3 + n))
        assert cycle_type_of(G, G.vertices) == t


def test_make_cycle_errors():
    """Test parity mismatches, short cycles and wrong explicit gains"""
    with pytest.raises(FamilySpecError):
        make_cycle(5, CycleType.TYPE1)
    with pytest.raises(FamilySpecError):
        make_cycle(4, CycleType.TYPE4)
    with pytest.raises(FamilySpecError):
        make_cycle(2, CycleType.TYPE1)
    with pytest.raises(FamilySpecError):
        make_cycle(4, CycleType.TYPE1, gains=LIPSCHITZ_UNITS[:3])
    with pytest.raises(FamilySpecError):
        make_cycle(4, CycleType.TYPE2, gains=[LIPSCHITZ_UNITS[0]] * 4)


def test_make_type1_cycle():
    """Test the Type-1 cycle builder with a Lipschitz alphabet"""
    rng = np.random.default_rng(2)
    G = make_type1_cycle(8, LIPSCHITZ_UNITS, rng)
    assert cycle_type_of(G, G.vertices) == CycleType.TYPE1
    assert elimination_rank(G) == 6
    with pytest.raises(FamilySpecError):
        make_type1_cycle(5)


@pytest.mark.parametrize("p,l,q,n,rank", [(4, 3, 4, 9, 6), (4, 1, 4, 7, 4), (4, 2, 4, 8, 6)])
def test_infinity_sizes_and_ranks(p, l, q, n, rank, sample):
    """Test infinity graphs with Type-1 cycles"""
    G = make_infinity(InfinitySpec(p=p, l=l, q=q), sample)
    s = stats(G)
    assert (s.n, s.c, s.p) == (n, 2, 0)
    assert elimination_rank(G) == rank


def test_infinity_rejects_parity_mismatch():
    """Test an odd cycle cannot be forced to Type 1"""
    with pytest.raises(FamilySpecError):
        make_infinity(InfinitySpec(p=3, l=2, q=4))
    with pytest.raises(ValidationError):
        InfinitySpec(p=2, l=1, q=4)


@pytest.mark.parametrize("p,l,q", [(1, 1, 1), (1, 1, 3), (1, 3, 3), (3, 3, 3)])
def test_theta_odd_paths(p, l, q, sample):
    """Test odd theta graphs have all cycles Type 1 and rank n - 3"""
    G = make_theta(ThetaSpec(p=p, l=l, q=q), sample)
    s = stats(G)
    assert (s.n, s.c, s.p) == (p + l + q + 2, 2, 0)
    assert elimination_rank(G) == s.n - 3


def test_theta_errors():
    """Test theta graphs with two direct edges are refused"""
    with pytest.raises(FamilySpecError):
        make_theta(ThetaSpec(p=0, l=0, q=2))
    with pytest.raises(FamilySpecError):
        make_theta(ThetaSpec(p=1, l=2, q=1))


def test_spider_tree():
    """Test spider sizes and the strict odd-leg rule"""
    T = make_spider_tree([1, 1, 3, 3])
    assert (T.n, T.m) == (9, 8)
    assert tree_rank(T) == 6
    with pytest.raises(FamilySpecError):
        make_spider_tree([1, 2, 3])
    with pytest.raises(FamilySpecError):
        make_spider_tree([1, 1])
    assert make_spider_tree([2, 2], strict=False).n == 5
    with pytest.raises(FamilySpecError):
        make_spider_tree([0, 1, 1], strict=False)


def test_flower_presets():
    """Test the preset sizes and ranks"""
    expected = {"four_cycle": (25, 4, 0, 18), "three_cycle": (20, 3, 1, 14), "three_cycle_type2": (20, 3, 1, 16)}
    assert set(FLOWER_PRESETS) == set(expected)
    for name, (n, c, p, rank) in expected.items():
        G = make_flower(flower_preset(name))
        s = stats(G)
        assert (s.n, s.c, s.p) == (n, c, p)
        assert elimination_rank(G) == rank
    with pytest.raises(FamilySpecError):
        flower_preset("five_cycle")


def test_flower_errors():
    """Test attachments that break the flower shape"""
    edges = [(0, 1), (1, 2), (1, 3)]
    with pytest.raises(FamilySpecError):
        make_flower(FlowerSpec(tree_edges=edges, attachments=[Attachment(vertex=1, length=4)]))
    with pytest.raises(FamilySpecError):
        make_flower(FlowerSpec(tree_edges=edges, attachments=[Attachment(vertex=9, length=4)]))
    with pytest.raises(FamilySpecError):
        make_flower(FlowerSpec(tree_edges=edges, attachments=[Attachment(vertex=0, length=4)] * 2))
    with pytest.raises(FamilySpecError):
        make_flower(FlowerSpec(tree_edges=[(0, 1), (1, 2), (2, 0)]))
    with pytest.raises(FamilySpecError):
        make_flower(FlowerSpec(tree_edges=[]))
    G = make_flower(FlowerSpec(tree_edges=edges, attachments=[Attachment(vertex=1, length=4)], require_leaves=False))
    assert G.degree(1) == 5


def test_flower_tree():
    """Test the underlying tree of a preset is the (1, 1, 3, 3) spider"""
    T = flower_tree(flower_preset("four_cycle"))
    assert (T.n, stats(T).p) == (9, 4)


def test_randomize_switching_keeps_rank(sample):
    """Test switching hides the canonical form but keeps the rank"""
    G = make_flower(flower_preset("three_cycle"))
    H = randomize_switching(G, sample)
    assert H != G
    assert elimination_rank(H) == 14


def test_worked_examples():
    """Test the worked example graphs and matrices"""
    assert elimination_rank(example_c4()) == 2
    assert elimination_rank(example_bicyclic_lipschitz()) == 4
    matrices = example_matrices()
    assert set(matrices) == {"c4", "bicyclic_lipschitz", "bicyclic_sqrt2"}
    assert matrices["bicyclic_sqrt2"].shape == (9, 9, 4)


if __name__ == "__main__":
    pytest.main([__file__])
