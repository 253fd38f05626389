"""Trace generators: clean replay, determinism, structural promises."""

import pytest

from dyncolor.graph import DynamicGraph, replay
from dyncolor.traces import (
    TRACE_KINDS,
    adversarial_path,
    adversarial_star,
    gen_trace,
    random_forest,
    random_graph,
    sliding_window,
    union_of_forests,
)


ALL_KINDS = sorted(TRACE_KINDS)


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_generators_replay_cleanly(kind):
    tr = gen_trace(kind, n=32, steps=400, seed=3)
    assert tr.n == 32
    assert len(tr) == 400
    replay(tr)  # raises on duplicate inserts / absent deletes / self loops


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_generators_deterministic_in_seed(kind):
    a = gen_trace(kind, n=24, steps=200, seed=9)
    b = gen_trace(kind, n=24, steps=200, seed=9)
    assert a.events == b.events


def test_random_graph_density_cap():
    tr = random_graph(10, 600, seed=1, insert_prob=0.95, max_edges=12)
    g = DynamicGraph(10)
    for ev in tr.events:
        g.apply(ev)
        assert g.edge_count <= 12


def _is_forest(g: DynamicGraph) -> bool:
    """Union-find cycle test over the current edge set."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def test_random_forest_prefixes_stay_forests():
    tr = random_forest(20, 500, seed=4)
    g = DynamicGraph(20)
    for i, ev in enumerate(tr.events):
        g.apply(ev)
        if i % 25 == 0 or i == len(tr.events) - 1:
            assert _is_forest(g), f"cycle after event {i}"


def test_union_of_forests_respects_alpha():
    """Every prefix must decompose into alpha forests; the generator tracks
    its own partition, so it suffices that each forest's edge set is acyclic.
    Checked indirectly: total edges <= alpha*(n-1) always, and the final
    graph's arboricity witness (peeling at degree 2*alpha) succeeds."""
    alpha, n = 2, 24
    tr = union_of_forests(n, 600, seed=8, alpha=alpha)
    g = DynamicGraph(n)
    for ev in tr.events:
        g.apply(ev)
        assert g.edge_count <= alpha * (n - 1)
    # peel: any graph that is a union of alpha forests always has a vertex
    # of degree < 2*alpha in every nonempty subgraph
    deg = {v: g.degree(v) for v in range(n)}
    adj = {v: set(g.neighbors(v)) for v in range(n)}
    removed = set()
    for _ in range(n):
        pick = next((v for v in range(n)
                     if v not in removed and deg[v] <= 2 * alpha - 1), None)
        assert pick is not None, "peeling stalled: arboricity promise broken"
        removed.add(pick)
        for w in adj[pick]:
            if w not in removed:
                deg[w] -= 1


def test_sliding_window_deletes_on_schedule():
    window = 30
    tr = sliding_window(16, 300, seed=2, window=window)
    born = {}
    for t, ev in enumerate(tr.events):
        key = (min(ev.u, ev.v), max(ev.u, ev.v))
        if ev.is_insert:
            born[key] = t
        else:
            assert t - born.pop(key) == window
    replay(tr)


def test_adversarial_star_hits_one_hub():
    tr = adversarial_star(16, 200, seed=0)
    hub = 15
    for ev in tr.events:
        assert hub in (ev.u, ev.v)
    replay(tr)


def test_adversarial_path_cycles_build_teardown():
    n = 8
    tr = adversarial_path(n, 3 * (n - 1), seed=0)
    # first n-1 events build the path left to right
    for i in range(n - 1):
        ev = tr.events[i]
        assert ev.is_insert and (ev.u, ev.v) == (i, i + 1)
    # next n-1 tear it down in the same order
    for i in range(n - 1):
        ev = tr.events[n - 1 + i]
        assert not ev.is_insert and (ev.u, ev.v) == (i, i + 1)
    replay(tr)


def test_gen_trace_rejects_unknown_kind():
    with pytest.raises((KeyError, ValueError)):
        gen_trace("no_such_kind", n=8, steps=10, seed=0)
