"""Benchmark runners and delimited output.

Each runner replays a trace through one engine family and collects one row
per sampled step. Rows hold integers only and never include wall-clock
readings, so a rerun with the same inputs produces byte-identical files.
Wall time is still measured and reported in the run summary for humans.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, field

import numpy as np

from .arb import ArbPipeline
from .ballsbins import ADVERSARIES, BinsGame
from .graph import UpdateTrace
from .interval import EngineConfig, IntervalEngine, check_properness
from .lds import LayeredEngine, LdsConfig, check_lds_invariants

GENERAL_COLUMNS = ("step", "recolorings", "static_calls", "colors_in_use",
                   "gprime_maxdeg")
LDS_COLUMNS = ("step", "flips", "layer_moves", "recolorings", "colors_in_use",
               "max_layer", "max_dup")
ARB_COLUMNS = GENERAL_COLUMNS + ("flips",)
BINS_COLUMNS = ("step", "max_bin")


class CheckFailure(AssertionError):
    """A runtime invariant check reported problems during a run."""


@dataclass
class RunResult:
    columns: tuple[str, ...]
    rows: list[tuple[int, ...]]
    totals: dict[str, int | float] = field(default_factory=dict)
    engine: object | None = None


def write_csv(path, columns, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(columns)
        w.writerows(rows)


def read_csv(path) -> tuple[tuple[str, ...], list[tuple[int, ...]]]:
    with open(path, newline="") as fh:
        r = csv.reader(fh)
        header = tuple(next(r))
        rows = [tuple(int(x) for x in line) for line in r]
    return header, rows


def colors_in_use(flat: np.ndarray) -> int:
    return int(np.unique(flat).size)


def run_general(trace: UpdateTrace, config: EngineConfig, oracle=None,
                metrics_every: int = 1, check_every: int = 0) -> RunResult:
    engine = IntervalEngine(config, oracle=oracle)
    rows: list[tuple[int, ...]] = []
    t0 = time.perf_counter()
    for ev in trace.events:
        report = engine.process_update(ev)
        if check_every and report.step % check_every == 0:
            bad = check_properness(engine)
            if bad:
                raise CheckFailure(f"improper edges at step {report.step}: {bad[:8]}")
        if metrics_every and report.step % metrics_every == 0:
            rows.append((report.step, report.recolorings, report.static_calls,
                         colors_in_use(engine.flat_colors()),
                         engine.gprime_maxdeg()))
    elapsed = time.perf_counter() - t0
    totals = {"recolorings": engine.total_recolorings,
              "static_calls": engine.total_static_calls,
              "fallbacks": engine.fallback_count,
              "updates": len(trace.events),
              "wall_time_s": elapsed}
    return RunResult(GENERAL_COLUMNS, rows, totals, engine)


def run_lds(trace: UpdateTrace, config: LdsConfig, metrics_every: int = 1,
            check_every: int = 0, deep_every: int = 250) -> RunResult:
    engine = LayeredEngine(config)
    rows: list[tuple[int, ...]] = []
    t0 = time.perf_counter()
    for ev in trace.events:
        report = engine.process_update(ev)
        if check_every and report.step % check_every == 0:
            deep = bool(deep_every and report.step % deep_every == 0)
            problems = check_lds_invariants(engine, deep=deep)
            if problems:
                raise CheckFailure(f"step {report.step}: {problems}")
        if metrics_every and report.step % metrics_every == 0:
            rows.append((report.step, report.flips, report.layer_moves,
                         report.recolorings,
                         colors_in_use(engine.lds_flat_colors()),
                         engine.max_layer(), engine.max_dup()))
    if check_every:
        problems = check_lds_invariants(engine, deep=True)
        if problems:
            raise CheckFailure(f"end of trace: {problems}")
    elapsed = time.perf_counter() - t0
    totals = {"flips": engine.flip_count,
              "layer_moves": engine.layer_move_count,
              "recolorings": engine.recoloring_count,
              "updates": len(trace.events),
              "max_layer": engine.max_layer(),
              "wall_time_s": elapsed}
    return RunResult(LDS_COLUMNS, rows, totals, engine)


def run_arb(trace: UpdateTrace, config: EngineConfig, alpha: int,
            metrics_every: int = 1, check_every: int = 0,
            cap: int | None = None) -> RunResult:
    pipeline = ArbPipeline(config, alpha, cap=cap)
    engine = pipeline.engine
    rows: list[tuple[int, ...]] = []
    t0 = time.perf_counter()
    for ev in trace.events:
        arep = pipeline.process_update(ev)
        report = arep.report
        if check_every and report.step % check_every == 0:
            bad = check_properness(engine)
            if bad:
                raise CheckFailure(f"improper edges at step {report.step}: {bad[:8]}")
            problems = pipeline.orientation.check_against(engine.graph.adjacency)
            if problems:
                raise CheckFailure(f"step {report.step}: {problems}")
        if metrics_every and report.step % metrics_every == 0:
            rows.append((report.step, report.recolorings, report.static_calls,
                         colors_in_use(engine.flat_colors()),
                         engine.gprime_maxdeg(), arep.flips))
    elapsed = time.perf_counter() - t0
    totals = {"recolorings": engine.total_recolorings,
              "static_calls": engine.total_static_calls,
              "flips": pipeline.orientation.flip_count,
              "max_out_degree": pipeline.orientation.max_out_degree(),
              "updates": len(trace.events),
              "wall_time_s": elapsed}
    return RunResult(ARB_COLUMNS, rows, totals, pipeline)


def run_bins(n_bins: int, k: int, steps: int, variant: str = "det",
             adversary: str = "focus", seed: int = 0,
             metrics_every: int = 1) -> RunResult:
    if adversary not in ADVERSARIES:
        raise ValueError(f"unknown adversary {adversary!r}")
    game = BinsGame(n_bins, k, seed=seed, variant=variant)
    strategy = ADVERSARIES[adversary]()
    rows: list[tuple[int, ...]] = []
    peak = 0
    t0 = time.perf_counter()
    for step in range(1, steps + 1):
        game.player1_move(strategy(game))
        m = int(game.bins.max())
        if m > peak:
            peak = m
        game.player2_move()
        if metrics_every and step % metrics_every == 0:
            rows.append((step, m))
    elapsed = time.perf_counter() - t0
    totals = {"peak_max_bin": peak, "steps": steps, "wall_time_s": elapsed}
    return RunResult(BINS_COLUMNS, rows, totals, game)
