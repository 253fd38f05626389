"""Greedy dynamic coloring with at most one recoloring per edge insertion.

Maintains a proper coloring of its graph under updates. Deletions never
recolor. On an insertion whose endpoints collide, the endpoint with smaller
degree (ties toward the lower id) moves to the smallest color absent from
its neighborhood, so the palette never needs more than maxdeg+1 colors.
"""

from __future__ import annotations

import numpy as np

from .graph import DynamicGraph


class PaletteExhaustedError(Exception):
    pass


class GreedyColorer:
    def __init__(self, graph: DynamicGraph, palette_cap: int | None = None,
                 colors: np.ndarray | None = None):
        self.graph = graph
        self.palette_cap = palette_cap
        if colors is None:
            colors = np.zeros(graph.n, dtype=np.int64)
        self.colors = colors
        self.recolor_count = 0

    def color_of(self, v: int) -> int:
        return int(self.colors[v])

    def _smallest_absent(self, v: int) -> int:
        used = {int(self.colors[w]) for w in self.graph.adjacency[v]}
        c = 0
        while c in used:
            c += 1
        return c

    def recolor_to_fresh(self, v: int) -> int:
        """Unconditionally move v to the smallest color its neighbors avoid."""
        c = self._smallest_absent(v)
        if self.palette_cap is not None and c >= self.palette_cap:
            raise PaletteExhaustedError(
                f"vertex {v} needs color {c}, palette cap {self.palette_cap}")
        self.colors[v] = c
        self.recolor_count += 1
        return c

    def on_insert(self, u: int, v: int) -> int | None:
        """Handle an edge (u,v) just inserted into the graph.

        Returns the recolored vertex, or None if the endpoints already
        differed.
        """
        if self.colors[u] != self.colors[v]:
            return None
        du = len(self.graph.adjacency[u])
        dv = len(self.graph.adjacency[v])
        w = u if (du, u) < (dv, v) else v
        self.recolor_to_fresh(w)
        return w

    def on_delete(self, u: int, v: int) -> None:
        # removing an edge cannot break properness
        return None

    def check_proper(self) -> list[tuple[int, int]]:
        """Exhaustive conflict scan; empty iff the coloring is proper."""
        colors = self.colors
        eu, ev = self.graph.edge_arrays()
        bad = np.nonzero(colors[eu] == colors[ev])[0]
        return [(int(eu[i]), int(ev[i])) for i in bad]
