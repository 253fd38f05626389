"""Benchmark runners: row shapes, totals, determinism, check hooks."""

import numpy as np
import pytest

from dyncolor.interval import EngineConfig
from dyncolor.lds import LdsConfig
from dyncolor.metrics import (
    ARB_COLUMNS,
    BINS_COLUMNS,
    GENERAL_COLUMNS,
    LDS_COLUMNS,
    CheckFailure,
    colors_in_use,
    read_csv,
    run_arb,
    run_bins,
    run_general,
    run_lds,
    write_csv,
)
from dyncolor.traces import random_graph, union_of_forests


def test_csv_roundtrip(tmp_path):
    path = str(tmp_path / "out.csv")
    rows = [(1, 2, 3), (4, 5, 6)]
    write_csv(path, ("a", "b", "c"), rows)
    header, back = read_csv(path)
    assert header == ("a", "b", "c")
    assert back == rows
    with open(path, "rb") as fh:
        data = fh.read()
    assert b"\r" not in data  # unix newlines regardless of platform


def test_colors_in_use_counts_distinct():
    assert colors_in_use(np.array([4, 4, 9, 0])) == 3


def test_run_general_rows_and_totals():
    cfg = EngineConfig.for_n(32, beta=1.0)
    tr = random_graph(32, 2 * 32 * cfg.ell, seed=1)
    res = run_general(tr, cfg, metrics_every=10, check_every=25)
    assert res.columns == GENERAL_COLUMNS
    assert len(res.rows) == len(tr.events) // 10
    steps = [r[0] for r in res.rows]
    assert steps == sorted(steps)
    assert res.totals["updates"] == len(tr.events)
    assert res.totals["static_calls"] == res.engine.total_static_calls
    assert "wall_time_s" in res.totals
    # wall time never leaks into rows (rows are integers only)
    assert all(isinstance(x, int) for row in res.rows for x in row)


def test_run_general_deterministic_rows():
    cfg = EngineConfig.for_n(32, beta=1.0, mode="rand", seed=3)
    tr = random_graph(32, 500, seed=2)
    a = run_general(tr, cfg, metrics_every=7)
    b = run_general(tr, cfg, metrics_every=7)
    assert a.rows == b.rows


def test_run_lds_rows_and_final_deep_check():
    cfg = LdsConfig(n=48, alpha=2)
    tr = union_of_forests(48, 600, seed=4, alpha=2)
    res = run_lds(tr, cfg, metrics_every=5, check_every=50, deep_every=100)
    assert res.columns == LDS_COLUMNS
    assert res.totals["max_layer"] == res.engine.max_layer()
    assert len(res.rows) == len(tr.events) // 5


def test_run_arb_rows():
    cfg = EngineConfig.for_n(32, beta=1.0)
    tr = union_of_forests(32, 400, seed=8, alpha=2)
    res = run_arb(tr, cfg, alpha=2, metrics_every=4, check_every=40)
    assert res.columns == ARB_COLUMNS
    assert res.totals["flips"] == res.engine.orientation.flip_count
    assert res.totals["max_out_degree"] <= 8


def test_run_bins_peak_matches_rows():
    res = run_bins(16, k=3, steps=300, variant="det", adversary="focus")
    assert res.columns == BINS_COLUMNS
    assert res.totals["peak_max_bin"] == max(r[1] for r in res.rows)
    assert res.totals["peak_max_bin"] == 3  # focus refills bin 0 each turn


def test_run_bins_rejects_unknown_adversary():
    with pytest.raises(ValueError):
        run_bins(8, 2, 10, adversary="bogus")


def test_check_failure_raised_on_planted_lds_fault(monkeypatch):
    """The runner's check hook must convert checker findings into CheckFailure."""
    import dyncolor.metrics as metrics

    def broken_check(engine, deep=False):
        return ["planted problem"]

    monkeypatch.setattr(metrics, "check_lds_invariants", broken_check)
    cfg = LdsConfig(n=16, alpha=1)
    tr = union_of_forests(16, 20, seed=0, alpha=1)
    with pytest.raises(CheckFailure):
        run_lds(tr, cfg, check_every=1)


def test_check_failure_raised_on_planted_properness_fault(monkeypatch):
    import dyncolor.metrics as metrics

    monkeypatch.setattr(metrics, "check_properness", lambda e: [(0, 1)])
    cfg = EngineConfig.for_n(16, beta=1.0)
    tr = random_graph(16, 20, seed=0)
    with pytest.raises(CheckFailure):
        run_general(tr, cfg, check_every=1)
