"""Seeded trace generators for the benchmark harness.

Every generator is deterministic in (n, steps, seed, params) and returns an
UpdateTrace whose events replay cleanly: no duplicate inserts, no deletes of
absent edges, no self loops. Forest-flavored generators maintain their own
component labels so each prefix of the trace honors the promised structure
(a forest, or a union of alpha forests, so arboricity stays <= alpha).
"""

from __future__ import annotations

import random

from .graph import DynamicGraph, UpdateEvent, UpdateTrace, edge_key


def _random_absent_pair(rng: random.Random, g: DynamicGraph, tries: int = 256) -> tuple[int, int] | None:
    n = g.n
    for _ in range(tries):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v and not g.has_edge(u, v):
            return u, v
    return None


class _EdgePool:
    """Present edges with O(1) uniform sampling and removal."""

    def __init__(self) -> None:
        self.items: list[tuple[int, int]] = []
        self.index: dict[tuple[int, int], int] = {}

    def add(self, e: tuple[int, int]) -> None:
        self.index[e] = len(self.items)
        self.items.append(e)

    def remove(self, e: tuple[int, int]) -> None:
        i = self.index.pop(e)
        last = self.items.pop()
        if i < len(self.items):
            self.items[i] = last
            self.index[last] = i

    def sample(self, rng: random.Random) -> tuple[int, int]:
        return self.items[rng.randrange(len(self.items))]

    def __len__(self) -> int:
        return len(self.items)


def random_graph(n: int, steps: int, seed: int, insert_prob: float = 0.6,
                 max_edges: int | None = None) -> UpdateTrace:
    """Mixed insert/delete churn with a density cap (default 4n edges)."""
    rng = random.Random(seed)
    if max_edges is None:
        max_edges = min(4 * n, n * (n - 1) // 2)
    g = DynamicGraph(n)
    pool = _EdgePool()
    events: list[UpdateEvent] = []
    for _ in range(steps):
        do_insert = g.edge_count == 0 or (g.edge_count < max_edges and rng.random() < insert_prob)
        if do_insert:
            pair = _random_absent_pair(rng, g)
            if pair is None:
                do_insert = False
            else:
                u, v = pair
                g.insert_edge(u, v)
                pool.add(edge_key(u, v))
                events.append(UpdateEvent("+", u, v))
        if not do_insert:
            u, v = pool.sample(rng)
            g.delete_edge(u, v)
            pool.remove((u, v))
            events.append(UpdateEvent("-", u, v))
    return UpdateTrace(n, events)


class _Forest:
    """One forest with component labels, relabeled by BFS on split/merge."""

    def __init__(self, n: int) -> None:
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self.comp = list(range(n))
        self.size = {c: 1 for c in range(n)}
        self.next_label = n

    def same_component(self, u: int, v: int) -> bool:
        return self.comp[u] == self.comp[v]

    def _relabel_from(self, start: int, label: int) -> int:
        old = self.comp[start]
        stack = [start]
        self.comp[start] = label
        count = 1
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if self.comp[y] == old:
                    self.comp[y] = label
                    count += 1
                    stack.append(y)
        return count

    def link(self, u: int, v: int) -> None:
        cu, cv = self.comp[u], self.comp[v]
        # relabel the smaller side into the larger
        if self.size[cu] < self.size[cv]:
            u, v = v, u
            cu, cv = cv, cu
        self.adj[u].add(v)
        self.adj[v].add(u)
        moved = self._relabel_from(v, cu)
        self.size[cu] += moved
        del self.size[cv]

    def cut(self, u: int, v: int) -> None:
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        old = self.comp[u]
        label = self.next_label
        self.next_label += 1
        moved = self._relabel_from(v, label)
        self.size[label] = moved
        self.size[old] -= moved


def random_forest(n: int, steps: int, seed: int, delete_frac: float = 0.3,
                  max_edges: int | None = None) -> UpdateTrace:
    """Forest churn: inserts join two components, deletes split a tree."""
    return union_of_forests(n, steps, seed, alpha=1, delete_frac=delete_frac,
                            max_edges=max_edges)


def union_of_forests(n: int, steps: int, seed: int, alpha: int = 2,
                     delete_frac: float = 0.3, max_edges: int | None = None) -> UpdateTrace:
    """Edge churn whose prefix stays a union of alpha forests (arboricity <= alpha)."""
    rng = random.Random(seed)
    if max_edges is None:
        max_edges = max(1, int(0.8 * alpha * (n - 1)))
    g = DynamicGraph(n)
    forests = [_Forest(n) for _ in range(alpha)]
    owner: dict[tuple[int, int], int] = {}
    pool = _EdgePool()
    events: list[UpdateEvent] = []
    for _ in range(steps):
        want_delete = len(pool) > 0 and (g.edge_count >= max_edges or rng.random() < delete_frac)
        if not want_delete:
            placed = False
            for _ in range(256):
                u = rng.randrange(n)
                v = rng.randrange(n)
                if u == v or g.has_edge(u, v):
                    continue
                start = rng.randrange(alpha)
                for k in range(alpha):
                    f = (start + k) % alpha
                    if not forests[f].same_component(u, v):
                        forests[f].link(u, v)
                        g.insert_edge(u, v)
                        e = edge_key(u, v)
                        owner[e] = f
                        pool.add(e)
                        events.append(UpdateEvent("+", u, v))
                        placed = True
                        break
                if placed:
                    break
            if not placed:
                want_delete = len(pool) > 0
                if not want_delete:
                    raise RuntimeError("generator stuck: cannot insert or delete")
        if want_delete:
            u, v = pool.sample(rng)
            e = (u, v)
            forests[owner.pop(e)].cut(u, v)
            g.delete_edge(u, v)
            pool.remove(e)
            events.append(UpdateEvent("-", u, v))
    return UpdateTrace(n, events)


def sliding_window(n: int, steps: int, seed: int, window: int = 100) -> UpdateTrace:
    """Every inserted edge is deleted exactly `window` steps later.

    Step t takes the scheduled deletion if one is due, otherwise inserts a
    fresh random edge due for deletion at t + window.
    """
    rng = random.Random(seed)
    g = DynamicGraph(n)
    due: dict[int, tuple[int, int]] = {}
    events: list[UpdateEvent] = []
    for t in range(steps):
        pending = due.pop(t, None)
        if pending is not None:
            u, v = pending
            g.delete_edge(u, v)
            events.append(UpdateEvent("-", u, v))
            continue
        pair = _random_absent_pair(rng, g)
        if pair is None:
            raise RuntimeError("sliding_window: vertex set too small for window")
        u, v = pair
        g.insert_edge(u, v)
        due[t + window] = (u, v)
        events.append(UpdateEvent("+", u, v))
    return UpdateTrace(n, events)


def adversarial_star(n: int, steps: int, seed: int, window: int | None = None) -> UpdateTrace:
    """Hammers one hub: leaf->hub inserts, oldest hub edge deleted once the
    window fills. Keeps the hub's recent degree and same-layer in-degree high."""
    if n < 3:
        raise ValueError("adversarial_star needs n >= 3")
    rng = random.Random(seed)
    if window is None:
        window = max(4, n // 4)
    window = min(window, n - 2)
    hub = n - 1
    live: list[int] = []  # leaves currently attached, oldest first
    free = list(range(n - 1))
    rng.shuffle(free)
    events: list[UpdateEvent] = []
    for _ in range(steps):
        if len(live) >= window or not free:
            leaf = live.pop(0)
            free.append(leaf)
            events.append(UpdateEvent("-", leaf, hub))
        else:
            leaf = free.pop()
            live.append(leaf)
            events.append(UpdateEvent("+", leaf, hub))
    return UpdateTrace(n, events)


def adversarial_path(n: int, steps: int, seed: int) -> UpdateTrace:
    """Builds the path 0-1-...-(n-1) left to right, tears it down, repeats.

    Stresses orientation cascades: long directed chains keep flipping."""
    events: list[UpdateEvent] = []
    t = 0
    while len(events) < steps:
        phase = t % (2 * (n - 1))
        if phase < n - 1:
            events.append(UpdateEvent("+", phase, phase + 1))
        else:
            k = phase - (n - 1)
            events.append(UpdateEvent("-", k, k + 1))
        t += 1
    return UpdateTrace(n, events)


TRACE_KINDS = {
    "random_graph": random_graph,
    "random_forest": random_forest,
    "union_of_forests": union_of_forests,
    "sliding_window": sliding_window,
    "adversarial_star": adversarial_star,
    "adversarial_path": adversarial_path,
}


def gen_trace(kind: str, n: int, steps: int, seed: int, **params) -> UpdateTrace:
    if kind not in TRACE_KINDS:
        raise ValueError(f"unknown trace kind {kind!r}; have {sorted(TRACE_KINDS)}")
    return TRACE_KINDS[kind](n, steps, seed, **params)
