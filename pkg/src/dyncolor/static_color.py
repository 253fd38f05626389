"""Static subset coloring passes used by the interval hierarchy.

Two oracles share the same contract: color_subset(graph, subset) returns a
dict assigning every subset member a color in [0, colors_bound(n)), proper
on the subgraph induced by the subset. The greedy oracle works on any
graph and advertises n colors; the degeneracy oracle assumes arboricity at
most alpha, reads the induced subgraph off a maintained low-out-degree
orientation, and advertises 2*alpha+1 colors.
"""

from __future__ import annotations


class ArboricityExceeded(RuntimeError):
    """Degeneracy peeling stalled: some induced subgraph is denser than the
    promised arboricity allows."""


def greedy_static(graph, subset) -> dict[int, int]:
    """Color graph[subset] greedily in ascending vertex id."""
    sset = set(subset)
    colors: dict[int, int] = {}
    for v in sorted(sset):
        used = {colors[w] for w in graph.adjacency[v] if w in colors and w in sset}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


class GreedyStaticOracle:
    def colors_bound(self, n: int) -> int:
        return n

    def color_subset(self, graph, subset) -> dict[int, int]:
        return greedy_static(graph, subset)


def induced_via_orientation(graph, subset, orientation) -> set[tuple[int, int]]:
    """Edges of graph[subset], gathered by scanning out-neighborhoods only.

    With out-degrees capped this costs O(|subset| * cap) regardless of how
    dense the rest of the graph is. Must agree with graph.induced_subgraph.
    """
    sset = set(subset)
    edges: set[tuple[int, int]] = set()
    for v in sset:
        for w in orientation.out[v]:
            if w in sset:
                edges.add((v, w) if v < w else (w, v))
    return edges


def degeneracy_order(graph, subset, orientation, alpha: int) -> list[int]:
    """Peel subset vertices of residual degree <= 2*alpha, FIFO.

    Arboricity <= alpha guarantees every nonempty induced subgraph has a
    vertex of degree <= 2*alpha - 1, so the peel can only stall if the
    promise is false.
    """
    sset = set(subset)
    adj: dict[int, set[int]] = {v: set() for v in sset}
    for u, v in induced_via_orientation(graph, subset, orientation):
        adj[u].add(v)
        adj[v].add(u)
    deg = {v: len(adj[v]) for v in sset}
    threshold = 2 * alpha
    queue = [v for v in sorted(sset) if deg[v] <= threshold]
    queued = set(queue)
    order: list[int] = []
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        order.append(v)
        for w in adj[v]:
            if w in queued:
                continue
            deg[w] -= 1
            if deg[w] <= threshold:
                queue.append(w)
                queued.add(w)
    if len(order) != len(sset):
        raise ArboricityExceeded(
            f"peeling stalled with {len(sset) - len(order)} vertices above "
            f"degree {threshold}")
    return order


def color_by_order(order, adj) -> dict[int, int]:
    """Color in reverse peel order; back-degree bounds the palette."""
    colors: dict[int, int] = {}
    for v in reversed(order):
        used = {colors[w] for w in adj[v] if w in colors}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


class DegeneracyOracle:
    def __init__(self, alpha: int, orientation):
        self.alpha = alpha
        self.orientation = orientation

    def colors_bound(self, n: int) -> int:
        return 2 * self.alpha + 1

    def color_subset(self, graph, subset) -> dict[int, int]:
        order = degeneracy_order(graph, subset, self.orientation, self.alpha)
        sset = set(subset)
        adj: dict[int, set[int]] = {v: set() for v in sset}
        for u, v in induced_via_orientation(graph, subset, self.orientation):
            adj[u].add(v)
            adj[v].add(u)
        return color_by_order(order, adj)
