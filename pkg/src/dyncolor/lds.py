"""Dynamic coloring of bounded-arboricity graphs via a layered structure.

Vertices live on layers 1..k_cap. Every edge is oriented from the lower
layer to the higher (free choice inside a layer), and the structure
maintains four invariants:

  1. an oriented edge never points down a layer,
  2. out-degrees stay at most d',
  3. same-layer in-degrees stay at most d',
  4. no vertex above layer 1 could live a layer lower: its out-degree plus
     same-layer in-degree plus in-degree from one layer below exceeds d.

Invariant 4 is what keeps the layer count logarithmic for arboricity-alpha
graphs once d >= 2*alpha + 1: each layer's vertex count shrinks by a
constant factor.

Repairs are local. An insert that pushes an endpoint's up-degree (out plus
same-layer in) past d makes it rise to the lowest layer where at most d of
its current out- and same-layer neighbors sit at or above; the edges left
pointing into lower layers flip toward the risen vertex, and any neighbor
whose out-degree overflows d' rises in turn. A delete that leaves a vertex
droppable sends it down as far as invariant 4 allows in one move, flipping
the in-edges it overtakes (at most d of them) and re-checking neighbors
near the crossed range.

Colors are per layer: layer j owns a private palette of 2d'+1 colors, and
a greedy colorer keeps the graph induced by each layer properly colored.
Edges between layers never conflict because palettes are disjoint, so a
vertex's effective color is (layer-1)*(2d'+1) + its in-layer color. A
vertex changing layers moves its same-layer edges silently and then takes
a fresh greedy color in the new layer; nobody else is touched.
"""

from __future__ import annotations

import math
import sys
from collections import Counter
from dataclasses import dataclass
from itertools import chain

import numpy as np

from .graph import (DuplicateEdgeError, DynamicGraph, MissingEdgeError,
                    SelfLoopError, UpdateEvent, edge_key)
from .greedy import GreedyColorer


class LayerCapExceeded(RuntimeError):
    """A rise ran past the layer budget; the arboricity bound is wrong."""


@dataclass
class LdsConfig:
    n: int
    alpha: int
    d: int | None = None
    d_prime: int | None = None
    k_cap: int | None = None
    D_est: int | None = None
    Delta: int | None = None
    validate: bool = True

    def __post_init__(self) -> None:
        if self.n < 1 or self.alpha < 1:
            raise ValueError("need n >= 1 and alpha >= 1")
        logn = max(1, math.ceil(math.log2(max(2, self.n))))
        if self.d is None:
            self.d = 4 * self.alpha
        if self.k_cap is None:
            self.k_cap = logn + 1
        if self.D_est is None:
            self.D_est = self.alpha * logn
        if self.Delta is None:
            self.Delta = 16 * (self.d * self.k_cap + self.D_est)
        if self.d_prime is None:
            self.d_prime = self.Delta // 2
        if self.validate:
            if self.d < 2 * self.alpha + 1:
                raise ValueError(f"d={self.d} < 2*alpha+1={2 * self.alpha + 1}")
            if self.d_prime <= 2 * self.d:
                raise ValueError(f"d'={self.d_prime} must exceed 2d={2 * self.d}")

    @property
    def layer_palette(self) -> int:
        return 2 * self.d_prime + 1


@dataclass
class LdsReport:
    step: int
    flips: int = 0
    layer_moves: int = 0
    recolorings: int = 0


class LayeredEngine:
    def __init__(self, config: LdsConfig):
        self.config = config
        n = config.n
        self.n = n
        self.d = config.d
        self.d_prime = config.d_prime
        self.k_cap = config.k_cap

        self.L = np.ones(n, dtype=np.int64)
        self.col = np.zeros(n, dtype=np.int64)
        self.out_nbrs: list[set[int]] = [set() for _ in range(n)]
        self.in_nbrs: list[set[int]] = [set() for _ in range(n)]
        self.d_plus = np.zeros(n, dtype=np.int64)
        self.d_Lminus = np.zeros(n, dtype=np.int64)
        self.d_prev = np.zeros(n, dtype=np.int64)

        # dense oriented edge buffers, swap-remove on delete
        self._cap = 16
        self._etail = np.empty(self._cap, dtype=np.int32)
        self._ehead = np.empty(self._cap, dtype=np.int32)
        self._slot: dict[tuple[int, int], int] = {}
        self.edge_count = 0

        self.layer_graphs: dict[int, DynamicGraph] = {}
        self.colorers: dict[int, GreedyColorer] = {}

        self.flip_count = 0
        self.layer_move_count = 0
        self.recoloring_count = 0
        self.step = 0

        sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

    # -- bookkeeping primitives ---------------------------------------------

    def _layer(self, j: int) -> tuple[DynamicGraph, GreedyColorer]:
        if j not in self.layer_graphs:
            g = DynamicGraph(self.n)
            self.layer_graphs[j] = g
            self.colorers[j] = GreedyColorer(
                g, palette_cap=self.config.layer_palette, colors=self.col)
        return self.layer_graphs[j], self.colorers[j]

    def _record_edge(self, t: int, h: int) -> None:
        m = self.edge_count
        if m == self._cap:
            self._cap *= 2
            self._etail = np.resize(self._etail, self._cap)
            self._ehead = np.resize(self._ehead, self._cap)
        self._etail[m] = t
        self._ehead[m] = h
        self._slot[edge_key(t, h)] = m
        self.edge_count = m + 1

    def _erase_edge(self, t: int, h: int) -> None:
        key = edge_key(t, h)
        slot = self._slot.pop(key)
        last = self.edge_count - 1
        if slot != last:
            lt = int(self._etail[last])
            lh = int(self._ehead[last])
            self._etail[slot] = lt
            self._ehead[slot] = lh
            self._slot[edge_key(lt, lh)] = slot
        self.edge_count = last

    def _flip_edge(self, t: int, h: int) -> None:
        """Reorient t->h as h->t; layers do not change here."""
        L = self.L
        self.out_nbrs[t].remove(h)
        self.in_nbrs[h].remove(t)
        self.d_plus[t] -= 1
        if L[t] == L[h]:
            self.d_Lminus[h] -= 1
        elif L[t] == L[h] - 1:
            self.d_prev[h] -= 1
        self.out_nbrs[h].add(t)
        self.in_nbrs[t].add(h)
        self.d_plus[h] += 1
        if L[h] == L[t]:
            self.d_Lminus[t] += 1
        elif L[h] == L[t] - 1:
            self.d_prev[t] += 1
        slot = self._slot[edge_key(t, h)]
        self._etail[slot] = h
        self._ehead[slot] = t
        self.flip_count += 1

    def _same_layer_nbrs(self, v: int) -> list[int]:
        lv = self.L[v]
        out = [w for w in self.out_nbrs[v] if self.L[w] == lv]
        ins = [w for w in self.in_nbrs[v] if self.L[w] == lv]
        return out + ins

    def _change_layer(self, v: int, new_layer: int) -> None:
        """Move v between layers: silent edge migration, one fresh color."""
        old = int(self.L[v])
        assert new_layer != old
        g_old, _ = self._layer(old)
        for w in self._same_layer_nbrs(v):
            g_old.delete_edge(v, w)
        L = self.L
        for w in self.out_nbrs[v]:  # v sits in w's in-neighborhood
            if L[w] == old:
                self.d_Lminus[w] -= 1
            elif L[w] == old + 1:
                self.d_prev[w] -= 1
            if L[w] == new_layer:
                self.d_Lminus[w] += 1
            elif L[w] == new_layer + 1:
                self.d_prev[w] += 1
        L[v] = new_layer
        dl = dp = 0
        for u in self.in_nbrs[v]:
            if L[u] == new_layer:
                dl += 1
            elif L[u] == new_layer - 1:
                dp += 1
        self.d_Lminus[v] = dl
        self.d_prev[v] = dp
        g_new, colorer = self._layer(new_layer)
        for w in self._same_layer_nbrs(v):
            g_new.insert_edge(v, w)
        colorer.recolor_to_fresh(v)
        self.layer_move_count += 1
        self.recoloring_count += 1

    # -- repairs -------------------------------------------------------------

    def _rise(self, v: int) -> None:
        L = self.L
        l_old = int(L[v])
        cand = [int(L[u]) for u in self.out_nbrs[v]]
        cand += [l_old for u in self.in_nbrs[v] if L[u] == l_old]
        d_up = len(cand)
        assert d_up > self.d, "rise without trigger"
        counts = Counter(cand)
        j = l_old
        s = d_up
        while s > self.d:
            s -= counts.get(j, 0)
            j += 1
            if j > self.k_cap:
                raise LayerCapExceeded(
                    f"vertex {v} forced past layer {self.k_cap}; "
                    f"arboricity exceeds the configured bound")
        l_new = j
        assert l_new > l_old
        flip = sorted(u for u in self.out_nbrs[v] if L[u] <= l_new)
        for u in flip:
            self._flip_edge(v, u)
        self._change_layer(v, l_new)
        for u in flip:
            if self.d_plus[u] > self.d_prime:
                self._rise(u)

    def _inv4_violated(self, v: int) -> bool:
        return bool(self.L[v] > 1 and
                    self.d_plus[v] + self.d_Lminus[v] + self.d_prev[v] <= self.d)

    def _drop(self, v: int) -> None:
        L = self.L
        j = int(L[v])
        assert j > 1, "drop from layer 1"
        cnt = Counter(int(L[u]) for u in self.in_nbrs[v])
        s = int(self.d_plus[v] + self.d_Lminus[v])
        t = 0
        while j - (t + 1) >= 1 and s + cnt.get(j - (t + 1), 0) <= self.d:
            s += cnt.get(j - (t + 1), 0)
            t += 1
        assert t >= 1, "drop without trigger"
        l_new = j - t
        flip = sorted(u for u in self.in_nbrs[v] if l_new < L[u] <= j)
        for u in flip:
            self._flip_edge(u, v)
        self._change_layer(v, l_new)
        touched = sorted(set(
            u for u in chain(self.in_nbrs[v], self.out_nbrs[v])
            if l_new < L[u] <= j + 1))
        for u in touched:
            if self._inv4_violated(u):
                self._drop(u)

    # -- update operations ----------------------------------------------------

    def insert_edge(self, u: int, v: int) -> None:
        if u == v:
            raise SelfLoopError(f"self loop at {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex out of range: ({u},{v})")
        if edge_key(u, v) in self._slot:
            raise DuplicateEdgeError(f"edge ({u},{v}) already present")
        L = self.L
        # orient toward the lower layer; inside a layer the endpoint with
        # the smaller out-degree (then smaller id) takes the tail
        a, b = (u, v) if (L[u], self.d_plus[u], u) <= (L[v], self.d_plus[v], v) \
            else (v, u)
        t, h = a, b
        self.out_nbrs[t].add(h)
        self.in_nbrs[h].add(t)
        self.d_plus[t] += 1
        if L[t] == L[h]:
            self.d_Lminus[h] += 1
        elif L[t] == L[h] - 1:
            self.d_prev[h] += 1
        self._record_edge(t, h)
        if L[t] == L[h]:
            g, colorer = self._layer(int(L[t]))
            g.insert_edge(u, v)
            w = colorer.on_insert(u, v)
            if w is not None:
                self.recoloring_count += 1
        if self.d_plus[t] + self.d_Lminus[t] > self.d:
            self._rise(t)
        if self.d_plus[h] + self.d_Lminus[h] > self.d:
            self._rise(h)

    def delete_edge(self, u: int, v: int) -> None:
        key = edge_key(u, v)
        if key not in self._slot:
            raise MissingEdgeError(f"edge ({u},{v}) not present")
        if v in self.out_nbrs[u]:
            t, h = u, v
        else:
            t, h = v, u
        L = self.L
        self.out_nbrs[t].remove(h)
        self.in_nbrs[h].remove(t)
        self.d_plus[t] -= 1
        if L[t] == L[h]:
            self.d_Lminus[h] -= 1
            self.layer_graphs[int(L[t])].delete_edge(u, v)
        elif L[t] == L[h] - 1:
            self.d_prev[h] -= 1
        self._erase_edge(t, h)
        for w in sorted((u, v)):
            if self._inv4_violated(w):
                self._drop(w)

    def apply(self, ev: UpdateEvent) -> LdsReport:
        return self.process_update(ev)

    def process_update(self, ev: UpdateEvent) -> LdsReport:
        self.step += 1
        f0, m0, r0 = self.flip_count, self.layer_move_count, self.recoloring_count
        if ev.is_insert:
            self.insert_edge(ev.u, ev.v)
        else:
            self.delete_edge(ev.u, ev.v)
        return LdsReport(step=self.step,
                         flips=self.flip_count - f0,
                         layer_moves=self.layer_move_count - m0,
                         recolorings=self.recoloring_count - r0)

    # -- color and metric accessors -------------------------------------------

    def lds_color_of(self, v: int) -> int:
        return int((self.L[v] - 1) * self.config.layer_palette + self.col[v])

    def lds_flat_colors(self) -> np.ndarray:
        return (self.L - 1) * self.config.layer_palette + self.col

    def max_layer(self) -> int:
        return int(self.L.max())

    def max_dup(self) -> int:
        return int((self.d_plus + self.d_Lminus).max())

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        m = self.edge_count
        return self._etail[:m], self._ehead[:m]


def check_lds_invariants(engine: LayeredEngine, deep: bool = False) -> list[str]:
    """Invariants 1-4, degree caps, counter consistency, layer coloring.

    The vectorized tier is cheap enough to run after every update; the deep
    tier rebuilds every set from the edge list and is meant for sampling.
    """
    problems: list[str] = []
    n = engine.n
    d, d_prime = engine.d, engine.d_prime
    L = engine.L
    tails, heads = engine.edge_arrays()

    if np.any(L < 1) or np.any(L > engine.k_cap):
        problems.append("layer outside [1, k_cap]")
    if tails.size:
        if np.any(L[tails] > L[heads]):
            problems.append("invariant 1: edge oriented down a layer")
    dp_true = np.bincount(tails, minlength=n) if tails.size else np.zeros(n, dtype=np.int64)
    same = L[tails] == L[heads] if tails.size else np.zeros(0, dtype=bool)
    dl_true = np.bincount(heads[same], minlength=n) if tails.size else np.zeros(n, dtype=np.int64)
    below = L[tails] == L[heads] - 1 if tails.size else np.zeros(0, dtype=bool)
    dprev_true = np.bincount(heads[below], minlength=n) if tails.size else np.zeros(n, dtype=np.int64)

    if np.any(dp_true > d_prime):
        problems.append("invariant 2: out-degree exceeds d'")
    if np.any(dl_true > d_prime):
        problems.append("invariant 3: same-layer in-degree exceeds d'")
    inv4 = (L > 1) & (dp_true + dl_true + dprev_true <= d)
    if np.any(inv4):
        problems.append(
            f"invariant 4: droppable vertices {np.nonzero(inv4)[0][:8].tolist()}")
    if np.any(dp_true + dl_true > engine.config.Delta):
        problems.append("up-degree exceeds Delta")

    if not np.array_equal(dp_true, engine.d_plus):
        problems.append("out-degree counter drift")
    if not np.array_equal(dl_true, engine.d_Lminus):
        problems.append("same-layer in-degree counter drift")
    if not np.array_equal(dprev_true, engine.d_prev):
        problems.append("layer-below in-degree counter drift")

    if np.any(engine.col < 0) or np.any(engine.col >= engine.config.layer_palette):
        problems.append("in-layer color outside the palette")
    layer_edge_total = 0
    for j, g in engine.layer_graphs.items():
        eu, ev = g.edge_arrays()
        layer_edge_total += eu.size
        if eu.size:
            if np.any(L[eu] != j) or np.any(L[ev] != j):
                problems.append(f"layer graph {j} holds a foreign vertex")
            if np.any(engine.col[eu] == engine.col[ev]):
                problems.append(f"layer graph {j} is improperly colored")
    if tails.size and layer_edge_total != int(same.sum()):
        problems.append("layer graphs do not cover the same-layer edges")
    flat = engine.lds_flat_colors()
    if tails.size and np.any(flat[tails] == flat[heads]):
        problems.append("flattened coloring improper")

    if deep:
        problems.extend(_deep_check(engine))
    return problems


def _deep_check(engine: LayeredEngine) -> list[str]:
    problems: list[str] = []
    n = engine.n
    tails, heads = engine.edge_arrays()
    out_true: list[set[int]] = [set() for _ in range(n)]
    in_true: list[set[int]] = [set() for _ in range(n)]
    for t, h in zip(tails.tolist(), heads.tolist()):
        out_true[t].add(h)
        in_true[h].add(t)
    for v in range(n):
        if out_true[v] != engine.out_nbrs[v]:
            problems.append(f"out-neighbor set drift at {v}")
        if in_true[v] != engine.in_nbrs[v]:
            problems.append(f"in-neighbor set drift at {v}")
    by_layer: dict[int, set[tuple[int, int]]] = {}
    for t, h in zip(tails.tolist(), heads.tolist()):
        if engine.L[t] == engine.L[h]:
            by_layer.setdefault(int(engine.L[t]), set()).add(edge_key(t, h))
    for j, g in engine.layer_graphs.items():
        have = set(g.edges())
        want = by_layer.get(j, set())
        if have != want:
            problems.append(f"layer graph {j} is not the induced layer subgraph")
    for j, want in by_layer.items():
        if j not in engine.layer_graphs and want:
            problems.append(f"layer {j} has edges but no layer graph")
    return problems
