"""Dynamic graph core.

A fixed vertex set {0..n-1} with single-edge insertions and deletions.
Adjacency is kept as one set per vertex; in parallel, edge endpoints are
mirrored into dense numpy buffers (swap-remove on deletion) so that
whole-graph scans used by the runtime checkers are vectorizable.

Update traces are plain text: first line ``n <int>``, then one event per
line, ``+ <u> <v>`` or ``- <u> <v>``. Lines starting with ``#`` and blank
lines are ignored on read. Files written by write_trace round-trip
bit-exactly through read_trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np


class GraphError(Exception):
    """Base class for graph update errors."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class MissingEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class TraceFormatError(Exception):
    """Malformed trace file."""


@dataclass(frozen=True)
class UpdateEvent:
    """One trace event: op is '+' (insert) or '-' (delete)."""

    op: str
    u: int
    v: int

    @property
    def is_insert(self) -> bool:
        return self.op == "+"

    def line(self) -> str:
        return f"{self.op} {self.u} {self.v}"


def edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class DynamicGraph:
    """Undirected simple graph under single-edge updates."""

    def __init__(self, n: int):
        if n <= 0:
            raise VertexRangeError(f"need at least one vertex, got n={n}")
        self.n = n
        self.adjacency: list[set[int]] = [set() for _ in range(n)]
        self.edge_count = 0
        # dense endpoint mirror, swap-remove keeps slots [0, edge_count) live
        self._slot: dict[tuple[int, int], int] = {}
        cap = 16
        self._eu = np.empty(cap, dtype=np.int32)
        self._ev = np.empty(cap, dtype=np.int32)

    def _check_pair(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise VertexRangeError(f"edge ({u},{v}) outside vertex range [0,{self.n})")
        if u == v:
            raise SelfLoopError(f"self loop at {u}")

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u] if 0 <= u < self.n else False

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> set[int]:
        return self.adjacency[v]

    def insert_edge(self, u: int, v: int) -> None:
        self._check_pair(u, v)
        if v in self.adjacency[u]:
            raise DuplicateEdgeError(f"edge ({u},{v}) already present")
        self.adjacency[u].add(v)
        self.adjacency[v].add(u)
        m = self.edge_count
        if m == len(self._eu):
            self._eu = np.resize(self._eu, 2 * m)
            self._ev = np.resize(self._ev, 2 * m)
        self._eu[m] = u
        self._ev[m] = v
        self._slot[edge_key(u, v)] = m
        self.edge_count = m + 1

    def delete_edge(self, u: int, v: int) -> None:
        self._check_pair(u, v)
        if v not in self.adjacency[u]:
            raise MissingEdgeError(f"edge ({u},{v}) not present")
        self.adjacency[u].discard(v)
        self.adjacency[v].discard(u)
        slot = self._slot.pop(edge_key(u, v))
        last = self.edge_count - 1
        if slot != last:
            lu = int(self._eu[last])
            lv = int(self._ev[last])
            self._eu[slot] = lu
            self._ev[slot] = lv
            self._slot[edge_key(lu, lv)] = slot
        self.edge_count = last

    def apply(self, event: UpdateEvent) -> None:
        if event.op == "+":
            self.insert_edge(event.u, event.v)
        elif event.op == "-":
            self.delete_edge(event.u, event.v)
        else:
            raise TraceFormatError(f"unknown op {event.op!r}")

    def edges(self) -> Iterator[tuple[int, int]]:
        for i in range(self.edge_count):
            yield edge_key(int(self._eu[i]), int(self._ev[i]))

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Views of the live endpoint slots, for vectorized scans."""
        m = self.edge_count
        return self._eu[:m], self._ev[:m]

    def induced_subgraph(self, subset: set[int]) -> set[tuple[int, int]]:
        """Edges of G[subset], as normalized (u,v) pairs with u < v."""
        out: set[tuple[int, int]] = set()
        for v in subset:
            for w in self.adjacency[v]:
                if w > v and w in subset:
                    out.add((v, w))
        return out

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)


@dataclass
class UpdateTrace:
    n: int
    events: list[UpdateEvent]

    def __len__(self) -> int:
        return len(self.events)


def write_trace(path: str, trace: UpdateTrace) -> None:
    with open(path, "w") as fh:
        fh.write(f"n {trace.n}\n")
        for ev in trace.events:
            fh.write(ev.line() + "\n")


def read_trace(path: str) -> UpdateTrace:
    n = None
    events: list[UpdateEvent] = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if n is None:
                if len(parts) != 2 or parts[0] != "n":
                    raise TraceFormatError(f"line {lineno}: expected 'n <int>', got {line!r}")
                try:
                    n = int(parts[1])
                except ValueError:
                    raise TraceFormatError(f"line {lineno}: bad vertex count {parts[1]!r}")
                continue
            if len(parts) != 3 or parts[0] not in ("+", "-"):
                raise TraceFormatError(f"line {lineno}: expected '+|- u v', got {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise TraceFormatError(f"line {lineno}: bad endpoints in {line!r}")
            events.append(UpdateEvent(parts[0], u, v))
    if n is None:
        raise TraceFormatError("empty trace: missing 'n <int>' header")
    return UpdateTrace(n, events)


def replay(trace: UpdateTrace) -> DynamicGraph:
    """Apply every event in order; raises if the trace is not valid."""
    g = DynamicGraph(trace.n)
    for ev in trace.events:
        g.apply(ev)
    return g
