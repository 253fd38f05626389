"""Two-player balls-and-bins game and its coupling to recent degrees.

Rules. There are n_bins bins, all starting empty. Each turn Player 1 places
up to k balls into bins of its choice, then Player 2 empties the largest bin
(ties broken toward the lowest bin id). In the randomized variant Player 2
additionally draws i uniformly from [1, k] and, if Player 1 placed at least
i balls this turn, empties the bin that received the i-th of them.

The per-turn maximum recorded by run_adversary is taken right after Player
1's move, i.e. at the peak, so bound checks against it are the strict form.

DominationMirror replays an interval-coloring run inside the game: vertices
are matched to bins through an explicitly maintained permutation, Player 1
places one ball per endpoint per edge insertion, and Player 2 moves at every
interval end. Sorted bin sizes then dominate sorted recent degrees pointwise
at every step, which is what the oracle test asserts.
"""

from __future__ import annotations

import heapq
import random
from typing import Callable, Sequence

import numpy as np


class TooManyBallsError(Exception):
    pass


class BadBinError(Exception):
    pass


class BinsGame:
    def __init__(self, n_bins: int, k: int, seed: int = 0, variant: str = "det"):
        if n_bins <= 0 or k <= 0:
            raise ValueError("n_bins and k must be positive")
        if variant not in ("det", "rand"):
            raise ValueError(f"variant must be det or rand, got {variant!r}")
        self.n_bins = n_bins
        self.k = k
        self.variant = variant
        self.bins = np.zeros(n_bins, dtype=np.int64)
        self.rng = random.Random(seed)
        self.step_count = 0
        self.last_placements: list[int] = []
        self.last_emptied: list[int] = []

    def player1_move(self, placements: Sequence[int]) -> None:
        if len(placements) > self.k:
            raise TooManyBallsError(f"{len(placements)} balls placed, k={self.k}")
        bins = self.bins
        for b in placements:
            if not 0 <= b < self.n_bins:
                raise BadBinError(f"bin {b} outside [0,{self.n_bins})")
            bins[b] += 1
        self.last_placements = list(placements)

    def player2_move(self) -> tuple[int, int | None]:
        """Empty the largest bin; in the rand variant maybe one more.

        Returns (largest_bin, extra_bin or None). Emptied bins are exactly 0
        afterwards and no other bin changes.
        """
        bins = self.bins
        largest = int(np.argmax(bins))  # first occurrence = lowest id on ties
        bins[largest] = 0
        extra: int | None = None
        if self.variant == "rand":
            i = self.rng.randint(1, self.k)
            if i <= len(self.last_placements):
                extra = self.last_placements[i - 1]
                bins[extra] = 0
        self.last_emptied = [largest] if extra is None else [largest, extra]
        self.step_count += 1
        return largest, extra


class FocusAdversary:
    """All k balls into bin 0 every turn."""

    def __call__(self, game: BinsGame) -> list[int]:
        return [0] * game.k


class RoundRobinAdversary:
    """One ball each into k consecutive bins, cycling through all bins."""

    def __init__(self) -> None:
        self.pointer = 0

    def __call__(self, game: BinsGame) -> list[int]:
        n = game.n_bins
        out = [(self.pointer + j) % n for j in range(game.k)]
        self.pointer = (self.pointer + game.k) % n
        return out


class SpreadAdversary:
    """One ball each into the k currently smallest bins (ties: lower id).

    Keeps a lazy heap over (size, bin) so a turn costs O(k log n_bins)
    instead of a full scan; stale entries are dropped against the true bin
    sizes and the heap is rebuilt when it grows too large. The chosen bins
    are exactly the k smallest of the visible state.
    """

    def __init__(self) -> None:
        self.heap: list[tuple[int, int]] | None = None

    def __call__(self, game: BinsGame) -> list[int]:
        bins = game.bins
        n = game.n_bins
        if self.heap is None or len(self.heap) > 8 * n:
            self.heap = [(int(bins[b]), b) for b in range(n)]
            heapq.heapify(self.heap)
        heap = self.heap
        for b in game.last_emptied:
            heapq.heappush(heap, (0, b))
        chosen: list[int] = []
        taken: set[int] = set()
        put_back: list[tuple[int, int]] = []
        while len(chosen) < min(game.k, n):
            size, b = heapq.heappop(heap)
            if b in taken or size != bins[b]:
                continue  # stale or duplicate entry
            chosen.append(b)
            taken.add(b)
            put_back.append((size + 1, b))
        for item in put_back:
            heapq.heappush(heap, item)
        return chosen


ADVERSARIES: dict[str, Callable[[], Callable[[BinsGame], list[int]]]] = {
    "focus": FocusAdversary,
    "roundrobin": RoundRobinAdversary,
    "spread": SpreadAdversary,
}


def run_adversary(n_bins: int, k: int, steps: int, variant: str = "det",
                  adversary: str = "spread", seed: int = 0) -> np.ndarray:
    """Play `steps` turns; returns the per-turn maximum bin size (post
    Player 1, pre emptying)."""
    if adversary not in ADVERSARIES:
        raise ValueError(f"unknown adversary {adversary!r}; have {sorted(ADVERSARIES)}")
    game = BinsGame(n_bins, k, seed=seed, variant=variant)
    strategy = ADVERSARIES[adversary]()
    out = np.zeros(steps, dtype=np.int64)
    bins = game.bins
    for t in range(steps):
        game.player1_move(strategy(game))
        out[t] = bins[np.argmax(bins)]
        game.player2_move()
    return out


class DominationMirror:
    """Balls-and-bins shadow of an interval-coloring run (N = n, k = 2*ell).

    The permutation sigma (vertex -> bin) realizes the coupling: insertions
    place balls through sigma; at an interval end the game empties its own
    largest bin and sigma is repaired by one swap against the engine's
    designated vertex; the randomized extra emptying reuses the engine's
    u_I draw as the shared coin, hitting sigma(u_I).
    """

    def __init__(self, n: int, ell: int):
        self.n = n
        self.k = 2 * ell
        self.bins = np.zeros(n, dtype=np.int64)
        self.sigma = np.arange(n, dtype=np.int64)
        self.sigma_inv = np.arange(n, dtype=np.int64)
        self._window_balls = 0

    def on_insert(self, u: int, v: int) -> None:
        self.bins[self.sigma[u]] += 1
        self.bins[self.sigma[v]] += 1
        self._window_balls += 2
        assert self._window_balls <= self.k, "more balls than one turn allows"

    def on_interval_end(self, v_designated: int, u_designated: int | None) -> None:
        bins = self.bins
        sigma = self.sigma
        sigma_inv = self.sigma_inv
        g = int(np.argmax(bins))
        bins[g] = 0
        j = v_designated
        i = int(sigma_inv[g])
        if i != j:
            sj = int(sigma[j])
            sigma[i] = sj
            sigma[j] = g
            sigma_inv[sj] = i
            sigma_inv[g] = j
        if u_designated is not None:
            bins[sigma[u_designated]] = 0
        self._window_balls = 0

    def dominates(self, recent_degrees: np.ndarray) -> bool:
        """Sorted bin sizes >= sorted recent degrees, pointwise."""
        return bool(np.all(np.sort(self.bins) >= np.sort(recent_degrees)))

    def dominates_via_sigma(self, recent_degrees: np.ndarray) -> bool:
        """Stronger per-vertex form: bins[sigma[v]] >= recent_degree[v]."""
        return bool(np.all(self.bins[self.sigma] >= recent_degrees))
