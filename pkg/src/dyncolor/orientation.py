"""Online edge orientation with bounded out-degree.

Each edge gets a direction when inserted: away from the endpoint with the
smaller current out-degree (ties toward the lower vertex id). Whenever a
vertex exceeds the cap, all of its out-edges are flipped at once and the
affected heads are rechecked. With cap >= 4*arboricity the total number of
flips stays small amortized; a per-update flip budget of 64*cap*log2(n)
turns a cap that is too small for the input into a CapTooSmallError instead
of an unbounded cascade.
"""

from __future__ import annotations

import math
from collections import deque

import numpy as np

from .graph import MissingEdgeError


class CapTooSmallError(Exception):
    pass


class Orientation:
    def __init__(self, n: int, cap: int):
        if cap < 1:
            raise ValueError("cap must be at least 1")
        self.n = n
        self.cap = cap
        self.out: list[set[int]] = [set() for _ in range(n)]
        self.out_degree_arr = np.zeros(n, dtype=np.int64)
        self.flip_count = 0
        self.flip_budget = 64 * cap * max(1, math.ceil(math.log2(max(2, n))))

    def out_degree(self, v: int) -> int:
        return len(self.out[v])

    def out_neighbors(self, v: int) -> set[int]:
        return self.out[v]

    def direction(self, u: int, v: int) -> tuple[int, int]:
        """(tail, head) of the stored edge; raises if absent."""
        if v in self.out[u]:
            return u, v
        if u in self.out[v]:
            return v, u
        raise MissingEdgeError(f"edge ({u},{v}) not oriented")

    def insert(self, u: int, v: int) -> int:
        """Orient a newly inserted edge; returns flips performed."""
        du, dv = len(self.out[u]), len(self.out[v])
        tail = u if (du, u) < (dv, v) else v
        head = v if tail == u else u
        self.out[tail].add(head)
        self.out_degree_arr[tail] += 1
        return self._cascade(tail)

    def delete(self, u: int, v: int) -> None:
        if v in self.out[u]:
            self.out[u].discard(v)
            self.out_degree_arr[u] -= 1
        elif u in self.out[v]:
            self.out[v].discard(u)
            self.out_degree_arr[v] -= 1
        else:
            raise MissingEdgeError(f"edge ({u},{v}) not oriented")

    def _cascade(self, start: int) -> int:
        flips = 0
        queue = deque([start])
        out = self.out
        deg = self.out_degree_arr
        while queue:
            w = queue.popleft()
            if len(out[w]) <= self.cap:
                continue
            heads = list(out[w])
            flips += len(heads)
            if flips > self.flip_budget:
                raise CapTooSmallError(
                    f"{flips} flips in one update at cap {self.cap}; "
                    "the arboricity promise does not hold")
            out[w].clear()
            deg[w] = 0
            for h in heads:
                out[h].add(w)
                deg[h] += 1
                queue.append(h)
        self.flip_count += flips
        return flips

    def max_out_degree(self) -> int:
        return int(self.out_degree_arr.max()) if self.n else 0

    def check_against(self, adjacency: list[set[int]]) -> list[str]:
        """Every graph edge oriented exactly one way, nothing extra."""
        problems: list[str] = []
        for v in range(self.n):
            for w in self.out[v]:
                if w not in adjacency[v]:
                    problems.append(f"orients absent edge ({v},{w})")
                if v in self.out[w]:
                    problems.append(f"edge ({v},{w}) oriented both ways")
            if len(self.out[v]) != self.out_degree_arr[v]:
                problems.append(f"out-degree counter drift at {v}")
        for v in range(self.n):
            for w in adjacency[v]:
                if w > v and w not in self.out[v] and v not in self.out[w]:
                    problems.append(f"edge ({v},{w}) unoriented")
        return problems
