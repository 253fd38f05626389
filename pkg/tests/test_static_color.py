"""Static subset coloring: greedy and degeneracy oracles, dual-route checks."""

import random

import pytest

from dyncolor.graph import DynamicGraph
from dyncolor.orientation import Orientation
from dyncolor.static_color import (
    ArboricityExceeded,
    DegeneracyOracle,
    GreedyStaticOracle,
    color_by_order,
    degeneracy_order,
    greedy_static,
    induced_via_orientation,
)
from dyncolor.traces import union_of_forests


def _proper_on_subset(graph, subset, colors) -> bool:
    sset = set(subset)
    for v in sset:
        for w in graph.adjacency[v]:
            if w in sset and colors[v] == colors[w]:
                return False
    return True


def test_greedy_static_on_triangle():
    g = DynamicGraph(3)
    for u, v in [(0, 1), (1, 2), (0, 2)]:
        g.insert_edge(u, v)
    colors = greedy_static(g, [0, 1, 2])
    assert colors == {0: 0, 1: 1, 2: 2}  # ascending-id greedy on a triangle


def test_greedy_static_ignores_outside_edges():
    g = DynamicGraph(4)
    for u, v in [(0, 1), (1, 2), (2, 3)]:
        g.insert_edge(u, v)
    colors = greedy_static(g, [0, 2])  # 0 and 2 are not adjacent
    assert colors == {0: 0, 2: 0}


def test_greedy_oracle_bound():
    assert GreedyStaticOracle().colors_bound(17) == 17


def test_degeneracy_oracle_bound():
    o = Orientation(4, cap=4)
    assert DegeneracyOracle(alpha=3, orientation=o).colors_bound(100) == 7


def test_star_colored_with_two_colors():
    # leaves peel first; the center is colored first in reverse order
    g = DynamicGraph(4)
    o = Orientation(4, cap=4)
    for leaf in (0, 1, 2):
        g.insert_edge(leaf, 3)
        o.insert(leaf, 3)
    order = degeneracy_order(g, range(4), o, alpha=1)
    assert order[-1] == 3  # center has degree 3 > 2, peels last
    colors = DegeneracyOracle(1, o).color_subset(g, range(4))
    assert colors[3] == 0
    assert {colors[leaf] for leaf in (0, 1, 2)} == {1}


def test_color_by_order_respects_back_degree():
    adj = {0: {1}, 1: {0, 2}, 2: {1}}
    colors = color_by_order([0, 1, 2], adj)
    assert _proper_on_subset(type("G", (), {"adjacency": adj}), [0, 1, 2], colors)
    assert max(colors.values()) <= 1


def test_peeling_stalls_on_dense_graph():
    g = DynamicGraph(4)
    o = Orientation(4, cap=8)
    for u in range(4):
        for v in range(u + 1, 4):
            g.insert_edge(u, v)
            o.insert(u, v)
    # K4: every vertex has degree 3 > 2*alpha for alpha=1
    with pytest.raises(ArboricityExceeded):
        degeneracy_order(g, range(4), o, alpha=1)


def test_dual_route_induced_edges_agree():
    """Orientation-scan route equals the adjacency route on random subsets."""
    alpha, n = 2, 40
    g = DynamicGraph(n)
    o = Orientation(n, cap=4 * alpha)
    tr = union_of_forests(n, 800, seed=12, alpha=alpha)
    rng = random.Random(99)
    for i, ev in enumerate(tr.events):
        if ev.is_insert:
            g.insert_edge(ev.u, ev.v)
            o.insert(ev.u, ev.v)
        else:
            g.delete_edge(ev.u, ev.v)
            o.delete(ev.u, ev.v)
        if i % 40 == 0:
            subset = rng.sample(range(n), rng.randint(1, n))
            assert induced_via_orientation(g, subset, o) == \
                g.induced_subgraph(set(subset))


def test_degeneracy_oracle_proper_and_bounded_on_churn():
    alpha, n = 2, 32
    g = DynamicGraph(n)
    o = Orientation(n, cap=4 * alpha)
    oracle = DegeneracyOracle(alpha, o)
    tr = union_of_forests(n, 600, seed=3, alpha=alpha)
    rng = random.Random(7)
    for i, ev in enumerate(tr.events):
        if ev.is_insert:
            g.insert_edge(ev.u, ev.v)
            o.insert(ev.u, ev.v)
        else:
            g.delete_edge(ev.u, ev.v)
            o.delete(ev.u, ev.v)
        if i % 50 == 0:
            subset = rng.sample(range(n), rng.randint(1, n))
            colors = oracle.color_subset(g, subset)
            assert set(colors) == set(subset)
            assert all(0 <= c < 2 * alpha + 1 for c in colors.values())
            assert _proper_on_subset(g, subset, colors)
