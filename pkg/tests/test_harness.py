"""
Test the verification runs and the single-graph reports
"""
import pytest
from pydantic import ValidationError

from qgain.models.report import RunConfig
from qgain.services import harness
from qgain.services.families import example_c4, flower_preset, make_flower
from qgain.services.gaingraph import GainGraph
from qgain.services.harness import (
    GLUE_MAX_N,
    classify_graph,
    describe_graph,
    exhaustive_tree_records,
    fixed_checks,
    generate_instance,
    rank_file,
    run_verify_bounds,
    run_verify_extremal,
    sample_rng,
    verify_extremal_sample,
)
from qgain.services.rank_engine import InequalityCheck
from qgain.utils.exceptions import FamilySpecError
from qgain.utils.graph_io import save_graph


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.json"
    save_graph(example_c4(), path)
    return path


def test_sample_streams_are_independent_of_order():
    """Test per-sample streams depend only on the seed and the index"""
    assert sample_rng(42, 3).integers(1 << 30) == sample_rng(42, 3).integers(1 << 30)
    assert sample_rng(42, 3).integers(1 << 30) != sample_rng(42, 4).integers(1 << 30)


def test_verify_bounds_small_run():
    """Test a small bounds run has no violations and fills every record"""
    report = run_verify_bounds(RunConfig(seed=42, samples=12, max_n=7, max_c=2))
    assert report.kind == "verify-bounds"
    assert report.summary.records == 12
    assert report.summary.zero_violations
    for record in report.records:
        assert record.adjoint_rank == record.elimination_rank
        assert record.column_rank == record.elimination_rank
        assert record.bound is None or record.elimination_rank >= record.bound


def test_verify_bounds_is_deterministic():
    """Test equal seeds give equal reports apart from the wall time"""
    cfg = RunConfig(seed=7, samples=6, max_n=6, max_c=2)
    assert run_verify_bounds(cfg).deterministic_dump() == run_verify_bounds(cfg).deterministic_dump()


def test_verify_bounds_workers_do_not_change_the_report():
    """Test the report is the same with one and two worker processes"""
    one = run_verify_bounds(RunConfig(seed=5, samples=4, max_n=6, workers=1)).deterministic_dump()
    two = run_verify_bounds(RunConfig(seed=5, samples=4, max_n=6, workers=2)).deterministic_dump()
    one["config"].pop("workers")
    two["config"].pop("workers")
    assert one == two


def test_verify_bounds_cells():
    """Test requested cells are visited in turn"""
    cfg = RunConfig(seed=1, samples=4, cells=[(6, 1, 0), (7, 0, 3)])
    report = run_verify_bounds(cfg)
    assert [r.label for r in report.records] == ["cell 6,1,0", "cell 7,0,3"] * 2
    assert report.summary.cells == {"6,1,0": 2, "7,0,3": 2}


def test_verify_bounds_reports_gluing_failures(monkeypatch):
    """Test each sample runs the coalescence and bridge checks and reports their failures"""
    calls = []

    def failing(name):
        def check(H, K, *args, **kwargs):
            calls.append((name, K.n))
            return InequalityCheck(False, 0, 1, H)
        return check

    monkeypatch.setattr(harness, "coalescence_bound_check", failing("coalescence"))
    monkeypatch.setattr(harness, "bridge_bound_check", failing("bridge"))
    report = run_verify_bounds(RunConfig(seed=3, samples=3, max_n=8, max_c=2, workers=1))
    assert [name for name, _ in calls] == ["coalescence", "bridge"] * 3
    assert all(k_n <= GLUE_MAX_N for _, k_n in calls)
    for record in report.records:
        assert any(v.startswith("coalescing at vertex") for v in record.violations)
        assert any(v.startswith("joining at vertex") for v in record.violations)
    assert report.summary.violations == 6


def test_run_config_validation():
    """Test impossible run settings are refused"""
    with pytest.raises(ValidationError):
        RunConfig(seed=-1)
    with pytest.raises(ValidationError):
        RunConfig(seed=1, cells=[])
    with pytest.raises(ValidationError):
        RunConfig(seed=1, cells=[(3, 1, 1)])
    with pytest.raises(ValidationError):
        RunConfig(seed=1, samples=0)
    with pytest.raises(ValidationError):
        RunConfig(seed=1, float_tol=0)


def test_verify_extremal_samples_cover_every_checker():
    """Test positive, near-miss and random instances for all five checkers agree"""
    cfg = RunConfig(seed=3, samples=15, max_n=8)
    checks = set()
    for index in range(cfg.samples):
        record = verify_extremal_sample(cfg, index)
        assert record.violations == [], record.label
        checks.add(record.verdicts[0]["check"])
    assert checks == {"cycle_extremal", "bicyclic_extremal", "leaf_free_flower", "pendant_flower", "tree_extremal"}


def test_exhaustive_trees_agree():
    """Test every small tree passes the two-sided tree check"""
    records = exhaustive_tree_records(start=100)
    assert records[0].index == 100
    assert all(not r.violations for r in records)
    assert all(r.p >= 3 for r in records)


def test_fixed_checks_pass():
    """Test the worked examples, presets and theta deletions"""
    checks = fixed_checks()
    names = {c.name for c in checks}
    assert {"lipschitz bicyclic rank", "lipschitz bicyclic float rank", "sqrt2 bicyclic float rank"} <= names
    assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]


def test_verify_extremal_run():
    """Test the full extremal run on a small sample"""
    report = run_verify_extremal(RunConfig(seed=11, samples=10, max_n=8))
    assert report.kind == "verify-extremal"
    assert report.summary.zero_violations
    assert report.summary.records > 10
    assert report.summary.checks == len(report.checks)


def test_rank_file_exact_and_float(c4_file):
    """Test the rank report of the C4 example in both modes"""
    summary = rank_file(c4_file)
    assert (summary["n"], summary["m"], summary["c"], summary["p"], summary["rank"]) == (4, 4, 1, 0, 2)
    assert summary["bound"] == {"case": "LeafFreeCycleDisjoint", "value": 2, "tight": True}
    assert summary["cycles"][0]["type"] == "Type1"
    assert summary["structural"] == {"kind": "exact", "value": 2}
    summary = rank_file(c4_file, float_mode=True)
    assert (summary["mode"], summary["rank"], summary["c"]) == ("float", 2, 1)


def test_describe_graph_without_edges():
    """Test a graph with isolated vertices has rank 0 and no bound"""
    summary = describe_graph(GainGraph([0, 1], {}))
    assert summary["rank"] == 0
    assert summary["bound"] is None
    assert summary["components"] == 2


def test_classify_graph():
    """Test classification of the three-cycle preset"""
    summary = classify_graph(make_flower(flower_preset("three_cycle")))
    assert summary["rank"] == 14
    assert len(summary["pendant_cycles"]) == 3
    assert [v["check"] for v in summary["verdicts"]] == ["pendant_flower"]
    assert summary["verdicts"][0]["agree"] is True


def test_generate_instance():
    """Test family instances and their metadata"""
    G, meta = generate_instance("infinity", {"p": 4, "l": 3, "q": 4})
    assert (G.n, meta["rank"], meta["family"]) == (9, 6, "infinity")
    G, meta = generate_instance("flower", {"preset": "four_cycle"})
    assert meta["rank"] == 18
    G, meta = generate_instance("cycle", {"n": 5, "cycle_type": "Type4"}, seed=1, gain_mode="cayley")
    assert (meta["rank"], meta["seed"]) == (4, 1)
    G, meta = generate_instance("spider", {"legs": [1, 3, 3]})
    assert meta["rank"] == 6
    with pytest.raises(FamilySpecError):
        generate_instance("wheel", {})
    with pytest.raises(ValidationError):
        generate_instance("theta", {"p": "x", "l": 1, "q": 1})


if __name__ == "__main__":
    pytest.main([__file__])
