"""Interval-hierarchy coloring engine: schedule, invariants, worst-case mode."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dyncolor.graph import UpdateEvent
from dyncolor.interval import (
    EngineConfig,
    IntervalEngine,
    RecentDegreeTable,
    check_instance_exclusivity,
    check_properness,
    check_residual,
    default_gprime_bound,
    endpoint_level,
    next_pow2,
)
from dyncolor.traces import random_graph, sliding_window


def _endpoint_level_bruteforce(p: int, n: int) -> int:
    """Enumerate levels top down; the surviving level is the smallest one
    whose interval length divides the position."""
    levels = n.bit_length() - 1
    for j in range(levels + 1):
        if p % (n >> j) == 0:
            return j
    raise AssertionError("every position ends the level log2(n) interval")


def test_endpoint_level_frozen_map_n8():
    got = {p: endpoint_level(p, 8) for p in range(1, 9)}
    assert got == {1: 3, 2: 2, 3: 3, 4: 1, 5: 3, 6: 2, 7: 3, 8: 0}


@pytest.mark.parametrize("n", [2, 4, 16, 64])
def test_endpoint_level_matches_bruteforce(n):
    for p in range(1, n + 1):
        assert endpoint_level(p, n) == _endpoint_level_bruteforce(p, n)


def test_next_pow2():
    assert [next_pow2(k) for k in (1, 2, 3, 5, 64, 65)] == [2, 2, 4, 8, 64, 128]


def test_config_validation_and_padding():
    cfg = EngineConfig.for_n(100, beta=1.0)
    assert cfg.n == 128 and cfg.levels == 7 and cfg.ell == 7
    cfg = EngineConfig.for_n(64, beta=0.5)
    assert cfg.ell == 12
    cfg = EngineConfig.for_n(64, beta=100.0)
    assert cfg.ell == 1  # never rounds to zero
    with pytest.raises(ValueError):
        EngineConfig(n=48, beta=1.0)  # not a power of two
    with pytest.raises(ValueError):
        EngineConfig(n=64, beta=0.0)
    with pytest.raises(ValueError):
        EngineConfig(n=64, beta=1.0, mode="quantum")


def test_gprime_bound_autofilled_for_rand_only():
    det = EngineConfig(n=64, beta=1.0, mode="det")
    assert det.gprime_bound is None
    rnd = EngineConfig(n=64, beta=1.0, mode="rand")
    assert rnd.gprime_bound == default_gprime_bound(64, rnd.ell)
    override = EngineConfig(n=64, beta=1.0, mode="rand", gprime_bound=5)
    assert override.gprime_bound == 5


def test_recent_degree_table():
    t = RecentDegreeTable(4)
    assert t.argmax_lowest() == 0  # all zero: lowest id wins
    t.increment(2)
    t.increment(2)
    t.increment(1)
    assert t.argmax_lowest() == 2
    t.increment(1)
    assert t.argmax_lowest() == 1  # tie at 2 breaks toward lower id
    t.decrement(1)
    assert t.argmax_lowest() == 2
    t.reset(2)
    assert t.arr[2] == 0
    assert t.argmax_lowest() == 1


def _drive(config, trace):
    engine = IntervalEngine(config)
    for ev in trace.events:
        engine.process_update(ev)
    return engine


def test_flat_colors_decompose_back_to_components():
    cfg = EngineConfig.for_n(32, beta=1.0, mode="det")
    eng = _drive(cfg, random_graph(32, 3 * 32 * cfg.ell, seed=2))
    flat = eng.flat_colors()
    c2 = flat % (eng.n + 1)
    rest = flat // (eng.n + 1)
    c1 = rest % eng.C_static
    palette = rest // eng.C_static
    np.testing.assert_array_equal(c2, eng.c2)
    np.testing.assert_array_equal(c1, eng.c1_color)
    np.testing.assert_array_equal(palette, eng.c1_palette)
    assert eng.color_of(5) == int(flat[5])


@pytest.mark.parametrize("mode", ["det", "rand"])
@pytest.mark.parametrize("deamortized", [False, True])
def test_invariants_hold_every_update(mode, deamortized):
    cfg = EngineConfig.for_n(32, beta=1.0, mode=mode, deamortized=deamortized,
                             seed=7)
    eng = IntervalEngine(cfg)
    tr = random_graph(32, 2 * 32 * cfg.ell, seed=13)
    wc = eng.worst_case_recoloring_bound()
    for ev in tr.events:
        rep = eng.process_update(ev)
        assert check_properness(eng) == []
        assert check_instance_exclusivity(eng) == []
        assert check_residual(eng) == []
        if deamortized and not rep.fallback:
            assert rep.recolorings <= wc


def test_deamortized_spreads_static_work():
    """Worst-case mode must never exceed its per-update bound, even at the
    level-0 endpoint where amortized mode recolors all of V at once."""
    cfg_w = EngineConfig.for_n(64, beta=1.0, mode="det", deamortized=True)
    eng_w = IntervalEngine(cfg_w)
    tr = sliding_window(64, 64 * cfg_w.ell, seed=3, window=40)
    wc = eng_w.worst_case_recoloring_bound()
    saw_level0 = False
    for ev in tr.events:
        rep = eng_w.process_update(ev)
        assert rep.recolorings <= wc
        if any(r.level == 0 for r in rep.static_records):
            saw_level0 = True
    assert saw_level0


def test_worst_case_bound_formula_frozen():
    assert IntervalEngine(EngineConfig.for_n(256, beta=1.0, deamortized=True)) \
        .worst_case_recoloring_bound() == 7
    assert IntervalEngine(EngineConfig.for_n(16, beta=1.0, deamortized=True)) \
        .worst_case_recoloring_bound() == 7
    assert IntervalEngine(EngineConfig.for_n(16, beta=4.0, deamortized=True)) \
        .worst_case_recoloring_bound() == 13


def test_endpoint_schedule_and_records():
    cfg = EngineConfig.for_n(16, beta=1.0, mode="det")
    eng = IntervalEngine(cfg, debug=True)
    tr = random_graph(16, 2 * 16 * cfg.ell, seed=21)
    for ev in tr.events:
        rep = eng.process_update(ev)
        endpoint_due = eng.step % cfg.ell == 0
        assert bool(rep.static_records) == endpoint_due
        for rec in rep.static_records:
            assert 1 <= rec.position <= 16
            assert rec.level == endpoint_level(rec.position, 16)
            assert rec.input_size == len(rec.subset)
            assert rec.v_designated in rec.subset
            if rec.level == 0:
                assert rec.input_size == 16


def test_designation_tracks_recent_degree():
    cfg = EngineConfig.for_n(8, beta=1.0, mode="det")
    assert cfg.ell == 3
    eng = IntervalEngine(cfg, debug=True)
    for ev in [UpdateEvent("+", 7, 0), UpdateEvent("+", 7, 1),
               UpdateEvent("+", 7, 2)]:
        rep = eng.process_update(ev)
    # the first endpoint fires after ell=3 updates; 7 has recent degree 3
    assert len(rep.static_records) == 1
    assert rep.static_records[0].v_designated == 7


def test_rand_designation_samples_recent_window():
    cfg = EngineConfig.for_n(16, beta=1.0, mode="rand", seed=11)
    eng = IntervalEngine(cfg)
    tr = random_graph(16, 3 * 16 * cfg.ell, seed=5)
    for ev in tr.events:
        rep = eng.process_update(ev)
        if rep.fallback:
            continue
        window_endpoints = {x for e in eng.window if e.is_insert
                            for x in (e.u, e.v)}
        for rec in rep.static_records:
            if rec.u_designated is not None:
                assert rec.u_designated in window_endpoints


def test_fallback_restarts_block():
    cfg = EngineConfig.for_n(16, beta=1.0, mode="rand", seed=1, gprime_bound=2)
    eng = IntervalEngine(cfg)
    tr = random_graph(16, 6 * 16 * cfg.ell, seed=9, insert_prob=0.85)
    saw = False
    for ev in tr.events:
        rep = eng.process_update(ev)
        if rep.fallback:
            saw = True
            assert eng.block_step == 0
            assert eng.gprime.edge_count == 0 or cfg.deamortized
            assert all(not q for q in eng.queues)
            assert all(not p for p in eng.pending_inputs)
        assert check_properness(eng) == []
    assert saw
    assert eng.fallback_count >= 1


def test_fallback_in_deamortized_mode_full_recolor():
    cfg = EngineConfig.for_n(16, beta=1.0, mode="rand", seed=1, gprime_bound=2,
                             deamortized=True)
    eng = IntervalEngine(cfg)
    tr = random_graph(16, 6 * 16 * cfg.ell, seed=9, insert_prob=0.85)
    saw = False
    for ev in tr.events:
        rep = eng.process_update(ev)
        if rep.fallback:
            saw = True
        assert check_properness(eng) == []
        assert check_instance_exclusivity(eng) == []
    assert saw


def test_deamortized_entry_point_requires_flag():
    eng = IntervalEngine(EngineConfig.for_n(16, beta=1.0))
    with pytest.raises(AssertionError):
        eng.process_update_deamortized(UpdateEvent("+", 0, 1))


def test_properness_checker_detects_planted_conflict():
    cfg = EngineConfig.for_n(16, beta=1.0)
    eng = IntervalEngine(cfg)
    eng.process_update(UpdateEvent("+", 0, 1))
    eng.c1_palette[0] = eng.c1_palette[1]
    eng.c1_color[0] = eng.c1_color[1]
    eng.c2[0] = eng.c2[1]
    assert check_properness(eng) == [(0, 1)]


def test_exclusivity_checker_detects_planted_pair():
    eng = IntervalEngine(EngineConfig.for_n(16, beta=1.0))
    for ev in random_graph(16, 64, seed=4).events:
        eng.process_update(ev)
    assert eng.c1_inst[0] >= 1
    eng.c1_inst[0] -= 1  # planted: an older instance alive on the same palette
    assert check_instance_exclusivity(eng) != []


def test_residual_checker_detects_planted_faults():
    eng = IntervalEngine(EngineConfig.for_n(16, beta=1.0))
    eng.process_update(UpdateEvent("+", 2, 3))
    # the fresh edge must be in G'; remove it behind the engine's back
    eng.gprime.delete_edge(2, 3)
    problems = check_residual(eng)
    assert any("missing from G'" in p for p in problems)
    eng.gprime.insert_edge(2, 3)
    eng.recent.increment(5)  # drift the tally
    problems = check_residual(eng)
    assert any("recent-degree drift" in p for p in problems)


def test_instance_counter_monotone_and_recorded():
    cfg = EngineConfig.for_n(16, beta=1.0)
    eng = IntervalEngine(cfg, debug=True)
    seen = []
    for ev in random_graph(16, 2 * 16 * cfg.ell, seed=8).events:
        rep = eng.process_update(ev)
        seen.extend(rec.instance for rec in rep.static_records)
    assert seen == sorted(seen)
    assert len(set(seen)) == len(seen)
    assert eng.instance_counter == len(seen)
