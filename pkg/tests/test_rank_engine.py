"""
Test closed forms, reductions, the lower bound and the structural rank
"""
import numpy as np
import pytest

from qgain.models.family_specs import ThetaSpec
from qgain.services.families import example_c4, flower_preset, make_cycle, make_flower, make_theta
from qgain.services.gaingraph import GainGraph, coalesce, delete_edge, disjoint_union, shifted
from qgain.services.quaternion import I, J, ONE, Quaternion, make_gain_sampler
from qgain.services.random_graphs import random_gain_graph, sample_cell
from qgain.services.rank_engine import (
    BoundCaseKind,
    CycleType,
    RankResult,
    bridge_bound_check,
    classify_cycle,
    coalescence_bound_check,
    contract_p6,
    cycle_gain,
    edge_deletion_holds,
    elimination_rank,
    find_p6,
    find_pendant_cycles,
    lower_bound,
    rank_cycle,
    rank_path,
    reduce_pendant,
    reduce_pendant_cycle,
    structural_rank,
    structural_rank_trace,
    vertex_deletion_holds,
)
from qgain.utils.exceptions import HypothesisViolationError, ReductionPreconditionError


def path_graph(n, offset=0):
    return GainGraph.from_edges(
        [(offset + i, offset + i + 1, ONE) for i in range(n - 1)], vertices=range(offset, offset + n)
    )


def types_for(n):
    return (CycleType.TYPE1, CycleType.TYPE2) if n % 2 == 0 else (CycleType.TYPE3, CycleType.TYPE4)


def test_classify_cycle():
    """Test the four cycle types by length parity and gain"""
    assert classify_cycle(4, ONE) == CycleType.TYPE1
    assert classify_cycle(4, -ONE) == CycleType.TYPE2
    assert classify_cycle(6, -ONE) == CycleType.TYPE1
    assert classify_cycle(6, I) == CycleType.TYPE2
    assert classify_cycle(3, ONE) == CycleType.TYPE3
    assert classify_cycle(5, Quaternion(0, 0, 1, 0)) == CycleType.TYPE4
    with pytest.raises(ValueError):
        classify_cycle(2, ONE)


def test_cycle_gain_is_ordered_product():
    """Test the C4 example has gain 1 and is Type 1"""
    G = example_c4()
    assert cycle_gain(G, [1, 2, 3, 4]) == ONE
    with pytest.raises(ReductionPreconditionError):
        cycle_gain(G, [1, 3, 2, 4])


@pytest.mark.parametrize("n,expected", [(1, 0), (2, 2), (3, 2), (4, 4), (5, 4), (8, 8)])
def test_rank_path(n, expected):
    """Test the path closed form and its agreement with elimination"""
    assert rank_path(n) == expected
    assert elimination_rank(path_graph(n)) == expected


def test_rank_cycle_closed_forms():
    """Test cycle ranks against elimination for every type and length up to 10"""
    rng = np.random.default_rng(3)
    sample = make_gain_sampler(rng, "cayley")
    for n in range(3, 11):
        for t in types_for(n):
            G = make_cycle(n, t, sample)
            assert elimination_rank(G) == rank_cycle(n, t)
    assert rank_cycle(6, CycleType.TYPE1) == 4
    assert rank_cycle(5, CycleType.TYPE4) == 4
    assert rank_cycle(5, CycleType.TYPE3) == 5


def test_reduce_pendant():
    """Test the pendant reduction removes a leaf and its neighbour"""
    G = path_graph(5)
    reduced, inc = reduce_pendant(G)
    assert inc == 2
    assert reduced.vertices == (2, 3, 4)
    assert elimination_rank(G) == elimination_rank(reduced) + inc
    with pytest.raises(ReductionPreconditionError):
        reduce_pendant(example_c4())
    with pytest.raises(ReductionPreconditionError):
        reduce_pendant(G, 2)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_pendant_cycle_reductions(n):
    """Test exact pendant cycle reductions and the Type-3 bracket on a cycle with a tail"""
    rng = np.random.default_rng(n)
    sample = make_gain_sampler(rng, "lipschitz")
    for t in types_for(n):
        for tail in (2, 3, 4):
            C = make_cycle(n, t, sample, start=10)
            G = coalesce(C, path_graph(tail), 10, 0)
            cycle = tuple(range(10, 10 + n))
            red = reduce_pendant_cycle(G, cycle)
            assert red.cycle_type == t
            assert red.attachment == 10
            rank = elimination_rank(G)
            if red.is_exact:
                assert rank == red.increment + elimination_rank(red.operand)
            else:
                assert t == CycleType.TYPE3
                assert red.bracket(elimination_rank(red.removed), elimination_rank(red.kept)).contains(rank)


def test_pendant_cycle_precondition():
    """Test reduce_pendant_cycle rejects a cycle with two heavy vertices"""
    G = make_theta(ThetaSpec(p=1, l=1, q=1))
    with pytest.raises(ReductionPreconditionError):
        reduce_pendant_cycle(G, [0, 2, 1, 3])


def test_find_pendant_cycles():
    """Test pendant cycle discovery on the four-cycle preset"""
    G = make_flower(flower_preset("four_cycle"))
    found = find_pendant_cycles(G)
    assert sorted(len(pc.cycle) for pc in found) == [4, 4, 6, 6]
    assert all(pc.attachment is not None for pc in found)


def test_contract_p6():
    """Test the six-vertex path contraction on a theta graph"""
    G = make_theta(ThetaSpec(p=4, l=1, q=1, cycle_types=(CycleType.TYPE3, CycleType.TYPE3)))
    path = find_p6(G)
    assert path is not None
    contracted, inc = contract_p6(G, [0, 2, 3, 4, 5, 1])
    assert inc == 4
    assert (contracted.n, contracted.m) == (G.n - 4, G.m - 4)
    assert elimination_rank(G) == elimination_rank(contracted) + inc
    with pytest.raises(ReductionPreconditionError):
        contract_p6(make_theta(ThetaSpec(p=4, l=1, q=0, cycle_types=(CycleType.TYPE3, CycleType.TYPE2))), [0, 2, 3, 4, 5, 1])
    with pytest.raises(ReductionPreconditionError):
        contract_p6(G, [0, 2, 3, 4, 5])


def test_lower_bound_cases():
    """Test each case of the lower bound"""
    case = lower_bound(example_c4())
    assert (case.case, case.bound) == (BoundCaseKind.LEAF_FREE_CYCLE_DISJOINT, 2)
    case = lower_bound(make_theta(ThetaSpec(p=1, l=1, q=1)))
    assert (case.case, case.bound) == (BoundCaseKind.LEAF_FREE_SHARED_CYCLES, 2)
    case = lower_bound(path_graph(3))
    assert (case.case, case.bound) == (BoundCaseKind.HAS_PENDANT, 2)
    with pytest.raises(HypothesisViolationError):
        lower_bound(GainGraph([0, 1, 2], {(0, 1): ONE}))


def test_lower_bound_holds_on_random_cells():
    """Test rank >= bound and the structural rank contains the elimination rank"""
    rng = np.random.default_rng(21)
    sample = make_gain_sampler(rng, "cayley")
    for n, c, p in [(5, 1, 1), (6, 2, 0), (7, 0, 3), (8, 2, 2), (9, 3, 0)]:
        for _ in range(5):
            G = sample_cell(n, c, p, rng, sample).graph
            rank = elimination_rank(G)
            assert rank >= lower_bound(G).bound
            assert structural_rank(G).contains(rank)


def test_structural_rank_on_presets():
    """Test the structural rank is exact on the flower presets"""
    assert structural_rank(make_flower(flower_preset("four_cycle"))) == RankResult.exact(18)
    assert structural_rank(make_flower(flower_preset("three_cycle"))) == RankResult.exact(14)
    assert structural_rank(make_flower(flower_preset("three_cycle_type2"))) == RankResult.exact(16)
    result, steps = structural_rank_trace(example_c4())
    assert result.value == 2
    assert steps == ["Type1 cycle on 4 vertices: 2"]


def test_structural_rank_sums_over_components():
    """Test disconnected graphs add component ranks"""
    G = disjoint_union(example_c4(), shifted(path_graph(3), 10))
    assert structural_rank(G).value == 4
    assert elimination_rank(G) == 4
    assert structural_rank(GainGraph([], {})).value == 0


def test_rank_result():
    """Test interval arithmetic on rank results"""
    r = RankResult(2, 4)
    assert not r.is_exact
    assert r.contains(3) and not r.contains(5)
    assert r.shift(2) == RankResult(4, 6)
    assert r.clamp(3, 10) == RankResult(3, 4)
    assert r.to_dict() == {"kind": "interval", "lo": 2, "hi": 4}
    assert RankResult.exact(2).to_dict() == {"kind": "exact", "value": 2}
    with pytest.raises(ValueError):
        r.value
    with pytest.raises(ValueError):
        RankResult(3, 1)
    with pytest.raises(ValueError):
        r.clamp(5, 6)


def test_gluing_inequalities():
    """Test the coalescence and bridge lower bounds on small pieces"""
    rng = np.random.default_rng(8)
    sample = make_gain_sampler(rng, "lipschitz")
    H = make_cycle(4, CycleType.TYPE2, sample)
    K_ = make_cycle(5, CycleType.TYPE3, sample, start=10)
    assert coalescence_bound_check(H, K_, 0).holds
    assert coalescence_bound_check(path_graph(4), shifted(path_graph(3), 20), 1).holds
    for t in (2, 3, 4, 5):
        check = bridge_bound_check(H, K_, t, path_gains=[J] * (t - 1))
        assert check.holds, (t, check.lhs, check.rhs)
        assert check.graph.n == H.n + K_.n + t - 2


def test_deletion_inequalities():
    """Test vertex and edge deletion bounds on random graphs"""
    rng = np.random.default_rng(13)
    sample = make_gain_sampler(rng, "cayley")
    for _ in range(15):
        G = random_gain_graph(7, 10, rng, sample)
        rank = elimination_rank(G)
        for v in G.vertices:
            assert vertex_deletion_holds(G, v, rank)
        u, v = G.edges()[0]
        assert edge_deletion_holds(G, u, v, rank)
        assert elimination_rank(delete_edge(G, u, v)) <= rank + 2


if __name__ == "__main__":
    pytest.main([__file__])
