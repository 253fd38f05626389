"""Fully dynamic coloring of general graphs via a hierarchy of update intervals.

Every vertex carries a color pair. The first component is assigned by a
static coloring pass over a chosen subset S and never changes between such
passes; the second is maintained by a greedy dynamic colorer over the
residual graph G'. An edge enters G' on insertion and leaves when a static
pass that saw it delivers its assignment to an endpoint, so G' is exactly
the set of edges younger than the colors at both ends. An edge is always
separated by one of the two components: if it is in G' the greedy component
differs, otherwise the static components come either from different
palettes or from one static pass that saw the edge.

Static passes are scheduled by a binary hierarchy over the update sequence.
Time is cut into blocks of n*ell updates; level i splits each block into
2^i equal intervals, down to length ell at level log2(n). Where several
intervals share an endpoint only the lowest level survives, so each block
has exactly n interval ends, one per multiple of ell. When an interval I on
level i ends, the static pass colors S = the designated vertices of all of
I's subintervals, drawn from a palette private to level i. The designated
vertex v_I is the one with the largest recent degree (insertions incident
to it since it last appeared in a static input, net of deletions of those
edges); randomized mode adds a second vertex u_I sampled from the last
ell updates' insertions. Level 0 recolors the whole vertex set.

Recent degrees are the bridge to the balls-and-bins analysis: bin sizes in
the mirrored game dominate them, which bounds the degree of G' and hence
the greedy palette.

Worst-case (deamortized) mode applies a static pass's colors lazily: only
v_I (and u_I) change immediately, while each interval that begins where the
pass ran drains the remaining assignments of the previous same-level input
during its own span, one small quota per gated update (level i may apply
colors only at update counts congruent to i mod ell). Stale queue entries
(vertex already recolored by a later pass) are skipped. Level 0 alternates
between two palettes per block parity: its colors are drained across the
following block, so neighboring blocks' level-0 passes must not share a
palette.

Randomized mode carries an overflow fallback: if the max degree of G' ever
exceeds the configured bound, all intervals end at once, the whole graph is
statically recolored, and the block structure restarts.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .graph import DynamicGraph, UpdateEvent, edge_key
from .greedy import GreedyColorer
from .static_color import GreedyStaticOracle


def next_pow2(n: int) -> int:
    p = 1
    while p < n:
        p *= 2
    return max(2, p)


def endpoint_level(p: int, n: int) -> int:
    """Level of the surviving interval ending at block position p (1..n).

    Position p means p*ell updates into the block. The lowest-numbered level
    whose hierarchy interval ends at p survives pruning: level 0 at p = n,
    otherwise log2(n) minus the 2-adic valuation of p.
    """
    if not 1 <= p <= n:
        raise ValueError(f"position {p} outside [1,{n}]")
    if p == n:
        return 0
    levels = n.bit_length() - 1
    v2 = (p & -p).bit_length() - 1
    return levels - v2


@dataclass
class EngineConfig:
    n: int
    beta: float = 1.0
    mode: str = "det"
    deamortized: bool = False
    seed: int = 0
    gprime_bound: int | None = None  # rand-mode overflow threshold

    def __post_init__(self) -> None:
        if self.n < 2 or self.n & (self.n - 1):
            raise ValueError(f"n must be a power of two >= 2, got {self.n}")
        if self.beta <= 0:
            raise ValueError("beta must be positive")
        if self.mode not in ("det", "rand"):
            raise ValueError(f"mode must be det or rand, got {self.mode!r}")
        if self.gprime_bound is None and self.mode == "rand":
            self.gprime_bound = default_gprime_bound(self.n, self.ell)

    @property
    def levels(self) -> int:
        return self.n.bit_length() - 1  # log2(n)

    @property
    def ell(self) -> int:
        return max(1, round(self.levels / self.beta))

    @classmethod
    def for_n(cls, raw_n: int, **kw) -> "EngineConfig":
        """Pad an arbitrary vertex count up to the next power of two."""
        return cls(n=next_pow2(raw_n), **kw)


def default_gprime_bound(n: int, ell: int) -> int:
    # twice the acceptance-test constant, so the fallback stays dormant
    # unless a run is genuinely anomalous or the bound is overridden
    levels = max(1, n.bit_length() - 1)
    loglog = math.log2(levels) if levels > 1 else 0.0
    return math.ceil(8 * ell * (loglog + math.log2(ell) + 4))


class RecentDegreeTable:
    """Recent degrees with O(1) updates and max queries.

    Only nonzero degrees live in buckets; when everything is zero the argmax
    tie-break (lowest id) is vertex 0.
    """

    def __init__(self, n: int):
        self.n = n
        self.arr = np.zeros(n, dtype=np.int64)
        self.buckets: dict[int, set[int]] = {}
        self.max_deg = 0

    def increment(self, v: int) -> None:
        d = int(self.arr[v])
        if d:
            self.buckets[d].discard(v)
        nd = d + 1
        self.arr[v] = nd
        self.buckets.setdefault(nd, set()).add(v)
        if nd > self.max_deg:
            self.max_deg = nd

    def decrement(self, v: int) -> None:
        d = int(self.arr[v])
        assert d > 0, "decrement of zero recent degree"
        self.buckets[d].discard(v)
        nd = d - 1
        self.arr[v] = nd
        if nd:
            self.buckets.setdefault(nd, set()).add(v)

    def reset(self, v: int) -> None:
        d = int(self.arr[v])
        if d:
            self.buckets[d].discard(v)
            self.arr[v] = 0

    def argmax_lowest(self) -> int:
        while self.max_deg > 0 and not self.buckets.get(self.max_deg):
            self.max_deg -= 1
        if self.max_deg == 0:
            return 0
        return min(self.buckets[self.max_deg])


@dataclass
class ColorAssignment:
    """Color pair of one vertex plus its flattened id."""

    level: int  # palette id; the extra deamortized level-0 palette is levels+1
    color: int
    c2: int
    instance: int
    flat: int


@dataclass
class StaticCallRecord:
    step: int
    position: int
    level: int
    palette: int
    instance: int
    v_designated: int
    u_designated: int | None
    input_size: int
    fallback: bool = False
    subset: list[int] | None = None  # kept only when engine.debug


@dataclass
class UpdateReport:
    step: int
    recolorings: int = 0
    static_calls: int = 0
    greedy_recolored: int | None = None
    drained: int = 0
    fallback: bool = False
    static_records: list[StaticCallRecord] = field(default_factory=list)


class IntervalEngine:
    def __init__(self, config: EngineConfig, oracle=None, debug: bool = False):
        self.config = config
        n = config.n
        self.n = n
        self.ell = config.ell
        self.levels = config.levels
        self.debug = debug
        self.oracle = oracle if oracle is not None else GreedyStaticOracle()
        self.C_static = self.oracle.colors_bound(n)
        self.n_palettes = self.levels + 2  # +1 for the deamortized level-0 twin

        self.graph = DynamicGraph(n)
        self.gprime = DynamicGraph(n)
        self.gp_deg = np.zeros(n, dtype=np.int64)
        self.recent = RecentDegreeTable(n)
        self.last_reset = np.zeros(n, dtype=np.int64)
        # run step of the pass whose colors the vertex currently carries;
        # edges leave G' when a covering pass's colors ARRIVE, not when the
        # pass runs, otherwise lazily-applied colors leave a window where
        # neither component separates an edge the pass already saw
        self.applied_reset = np.zeros(n, dtype=np.int64)
        self.edge_insert_step: dict[tuple[int, int], int] = {}

        # color pair: palette/color/instance are the static side, c2 greedy
        self.c1_palette = np.zeros(n, dtype=np.int64)
        self.c1_color = np.zeros(n, dtype=np.int64)
        self.c1_inst = np.zeros(n, dtype=np.int64)
        self.c2 = np.zeros(n, dtype=np.int64)
        self.colorer = GreedyColorer(self.gprime, palette_cap=None, colors=self.c2)

        self.instance_counter = 0
        self.pending_inputs: list[set[int]] = [set() for _ in range(self.levels + 1)]
        self.window: deque[UpdateEvent] = deque(maxlen=self.ell)
        self.rng = random.Random(config.seed)

        self.step = 0        # total updates processed (gates the drains)
        self.block_step = 0  # updates into the current block
        # the all-zeros start state occupies palette 0 as instance 0, so the
        # first lazily-drained whole-graph pass must use the twin palette
        self.level0_parity = 1

        # deamortized state: one queue and quota per level, plus the input
        # of the last pass on each level (the next interval's drain duty)
        self.queues: list[deque[tuple[int, int, int, int]]] = [deque() for _ in range(self.levels + 1)]
        self.queue_quota = [0] * (self.levels + 1)
        self.prev_input: list[list[int] | None] = [None] * (self.levels + 1)

        self.total_recolorings = 0
        self.total_static_calls = 0
        self.fallback_count = 0

    # -- color accessors ---------------------------------------------------

    def flat_colors(self) -> np.ndarray:
        """Flattened color ids recomputed from the primary arrays."""
        t = self.c1_palette * self.C_static
        t = t + self.c1_color
        t = t * (self.n + 1)
        return t + self.c2

    def _flat_one(self, v: int) -> int:
        return (int(self.c1_palette[v]) * self.C_static + int(self.c1_color[v])) \
            * (self.n + 1) + int(self.c2[v])

    def color_of(self, v: int) -> int:
        return self._flat_one(v)

    def assignment_of(self, v: int) -> ColorAssignment:
        return ColorAssignment(int(self.c1_palette[v]), int(self.c1_color[v]),
                               int(self.c2[v]), int(self.c1_inst[v]), self._flat_one(v))

    def gprime_maxdeg(self) -> int:
        return int(self.gp_deg.max())

    # -- update pipeline ---------------------------------------------------

    def process_update(self, ev: UpdateEvent) -> UpdateReport:
        self.step += 1
        self.block_step += 1
        report = UpdateReport(step=self.step)
        self._apply_event(ev, report)
        self.window.append(ev)
        if self.config.deamortized:
            report.drained = self._drain(self.step)
            report.recolorings += report.drained
        if self.block_step % self.ell == 0:
            position = self.block_step // self.ell
            self._end_interval(position, report)
            if position == self.n:
                self.block_step = 0
        if self.config.mode == "rand" and self.gprime_maxdeg() > self.config.gprime_bound:
            self._fallback(report)
        return report

    # explicit worst-case entry point; same pipeline, flag checked inside
    def process_update_deamortized(self, ev: UpdateEvent) -> UpdateReport:
        assert self.config.deamortized
        return self.process_update(ev)

    def _apply_event(self, ev: UpdateEvent, report: UpdateReport) -> None:
        u, v = ev.u, ev.v
        key = edge_key(u, v)
        if ev.is_insert:
            self.graph.insert_edge(u, v)
            self.edge_insert_step[key] = self.step
            self.gprime.insert_edge(u, v)
            self.gp_deg[u] += 1
            self.gp_deg[v] += 1
            self.recent.increment(u)
            self.recent.increment(v)
            w = self.colorer.on_insert(u, v)
            if w is not None:
                report.greedy_recolored = w
                report.recolorings += 1
        else:
            self.graph.delete_edge(u, v)
            born = self.edge_insert_step.pop(key)
            if self.gprime.has_edge(u, v):
                self.gprime.delete_edge(u, v)
                self.gp_deg[u] -= 1
                self.gp_deg[v] -= 1
            # the tally only counts edges inserted since the endpoint's
            # last static inclusion
            if born > self.last_reset[u]:
                self.recent.decrement(u)
            if born > self.last_reset[v]:
                self.recent.decrement(v)

    def _designate(self) -> tuple[int, int | None]:
        v_i = self.recent.argmax_lowest()
        u_i = None
        if self.config.mode == "rand":
            inserts = [e for e in self.window if e.is_insert]
            if inserts:
                e = self.rng.choice(inserts)
                u_i = e.u if self.rng.random() < 0.5 else e.v
        return v_i, u_i

    def _end_interval(self, position: int, report: UpdateReport) -> None:
        level = endpoint_level(position, self.n)
        v_i, u_i = self._designate()
        if level == 0:
            subset = list(range(self.n))
        else:
            s = set(self.pending_inputs[level])
            s.add(v_i)
            if u_i is not None:
                s.add(u_i)
            subset = sorted(s)
        palette = self._palette_for(level)
        self._run_static(level, palette, subset, v_i, u_i, position, report)
        for i in range(level, self.levels + 1):
            self.pending_inputs[i] = set()
        for i in range(level):
            self.pending_inputs[i].add(v_i)
            if u_i is not None:
                self.pending_inputs[i].add(u_i)

    def _palette_for(self, level: int) -> int:
        if level == 0 and self.config.deamortized:
            palette = 0 if self.level0_parity == 0 else self.levels + 1
            self.level0_parity ^= 1
            return palette
        return level

    def _run_static(self, level: int, palette: int, subset: list[int],
                    v_i: int, u_i: int | None, position: int,
                    report: UpdateReport, fallback: bool = False) -> None:
        self.instance_counter += 1
        inst = self.instance_counter
        assign = self.oracle.color_subset(self.graph, subset)
        for w in subset:
            self.recent.reset(w)
            self.last_reset[w] = self.step
        self.total_static_calls += 1
        report.static_calls += 1
        report.static_records.append(StaticCallRecord(
            step=self.step, position=position, level=level, palette=palette,
            instance=inst, v_designated=v_i, u_designated=u_i,
            input_size=len(subset), fallback=fallback,
            subset=list(subset) if self.debug else None))

        if not self.config.deamortized or fallback:
            for w in subset:
                self._set_c1(w, palette, assign[w], inst, self.step)
            report.recolorings += len(subset)
            if not fallback:
                self.prev_input[level] = subset
            return

        # worst-case mode: color the designated vertices now, hand the rest
        # to the intervals that begin here
        run_step = self.step
        applied = {v_i}
        self._set_c1(v_i, palette, assign[v_i], inst, run_step)
        if u_i is not None and u_i not in applied:
            applied.add(u_i)
            self._set_c1(u_i, palette, assign[u_i], inst, run_step)
        report.recolorings += len(applied)

        self.prev_input[level] = subset
        begin = list(range(level + 1, self.levels + 1))
        if level == 0:
            begin = [0] + begin
        for i in begin:
            duty = self.prev_input[i]
            if not duty:
                continue
            assert not self.queues[i], f"level {i} drain not finished at handoff"
            self.queues[i] = deque(
                (w, palette, assign[w], inst, run_step) for w in duty)
            span = (self.n * self.ell) >> i
            self.queue_quota[i] = -(-len(duty) * self.ell // span)

    def _set_c1(self, v: int, palette: int, color: int, inst: int,
                run_step: int) -> None:
        self.c1_palette[v] = palette
        self.c1_color[v] = color
        self.c1_inst[v] = inst
        self.applied_reset[v] = run_step
        # edges the pass saw stop needing the greedy color the moment its
        # assignment lands here; newer edges keep their G' protection
        gp_adj = self.gprime.adjacency[v]
        if gp_adj:
            stale = [x for x in gp_adj
                     if self.edge_insert_step[edge_key(v, x)] <= run_step]
            for x in stale:
                self.gprime.delete_edge(v, x)
                self.gp_deg[v] -= 1
                self.gp_deg[x] -= 1
        self.total_recolorings += 1

    def _drain(self, k: int) -> int:
        done = 0
        for i in range(k % self.ell, self.levels + 1, self.ell):
            q = self.queues[i]
            if not q:
                continue
            quota = self.queue_quota[i]
            applied = 0
            while q and applied < quota:
                v, pal, col, inst, run_step = q.popleft()
                if self.c1_inst[v] < inst:  # stale entries are skipped free
                    self._set_c1(v, pal, col, inst, run_step)
                    applied += 1
            done += applied
        return done

    def _fallback(self, report: UpdateReport) -> None:
        """G' degree overflow: end every interval and recolor everything."""
        self.fallback_count += 1
        report.fallback = True
        for i in range(self.levels + 1):
            self.pending_inputs[i] = set()
            self.queues[i] = deque()
            self.prev_input[i] = None
        self.window.clear()
        palette = 0
        if self.config.deamortized:
            palette = 0 if self.level0_parity == 0 else self.levels + 1
            self.level0_parity ^= 1
        v_i = self.recent.argmax_lowest()
        self._run_static(0, palette, list(range(self.n)), v_i, None,
                         position=0, report=report, fallback=True)
        self.block_step = 0

    # -- accounting helpers used by tests and the harness -------------------

    def worst_case_recoloring_bound(self) -> int:
        """Per-update bound honored by deamortized mode (fallbacks aside)."""
        gated = -(-(self.levels + 1) // self.ell)
        return 3 + 2 * gated


def check_properness(engine: IntervalEngine) -> list[tuple[int, int]]:
    """Exhaustive scan: edges whose endpoints share a flattened color."""
    flat = engine.flat_colors()
    eu, ev = engine.graph.edge_arrays()
    bad = np.nonzero(flat[eu] == flat[ev])[0]
    return [(int(eu[i]), int(ev[i])) for i in bad]


def check_instance_exclusivity(engine: IntervalEngine) -> list[int]:
    """Palettes (level >= 1 and both level-0 twins) carried by two or more
    live static instances; empty list iff the interval argument holds."""
    key = engine.c1_palette * (engine.instance_counter + 1) + engine.c1_inst
    pairs = np.unique(key)
    palettes = pairs // (engine.instance_counter + 1)
    uniq, counts = np.unique(palettes, return_counts=True)
    return [int(p) for p, c in zip(uniq, counts) if c > 1]


def check_residual(engine: IntervalEngine) -> list[str]:
    """Structural invariants of G' and the recent-degree tally.

    G' must hold exactly the edges born after the colors currently applied
    at both endpoints, and the recent-degree table must equal, per vertex,
    the number of present edges born after its last static reset.
    """
    problems: list[str] = []
    eu, ev = engine.graph.edge_arrays()
    if len(eu):
        born = np.fromiter(
            (engine.edge_insert_step[edge_key(int(u), int(v))]
             for u, v in zip(eu, ev)),
            dtype=np.int64, count=len(eu))
        protected = ((born > engine.applied_reset[eu])
                     & (born > engine.applied_reset[ev]))
        for i in np.nonzero(protected)[0]:
            u, v = int(eu[i]), int(ev[i])
            if not engine.gprime.has_edge(u, v):
                problems.append(f"fresh edge ({u},{v}) missing from G'")
        cnt = np.zeros(engine.n, dtype=np.int64)
        np.add.at(cnt, eu[born > engine.last_reset[eu]], 1)
        np.add.at(cnt, ev[born > engine.last_reset[ev]], 1)
    else:
        cnt = np.zeros(engine.n, dtype=np.int64)
    for i in range(engine.gprime.edge_count):
        u = int(engine.gprime._eu[i])
        v = int(engine.gprime._ev[i])
        if not engine.graph.has_edge(u, v):
            problems.append(f"G' edge ({u},{v}) missing from G")
            continue
        b = engine.edge_insert_step[edge_key(u, v)]
        if b <= engine.applied_reset[u] or b <= engine.applied_reset[v]:
            problems.append(f"G' edge ({u},{v}) predates an applied pass")
    for v in range(engine.n):
        if engine.recent.arr[v] != cnt[v]:
            problems.append(f"recent-degree drift at {v}")
        if engine.gp_deg[v] != engine.gprime.degree(v):
            problems.append(f"G' degree counter drift at {v}")
    return problems
