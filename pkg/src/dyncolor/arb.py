"""Interval engine specialization for graphs of arboricity at most alpha.

A low-out-degree orientation (cap 4*alpha) is maintained in front of the
engine; the static passes then use the degeneracy oracle, which reads
induced subgraphs off the orientation and colors them with at most
2*alpha+1 colors. The orientation is updated before the engine sees each
event so any static pass triggered by the event works on current data.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import UpdateEvent
from .interval import EngineConfig, IntervalEngine, UpdateReport
from .orientation import Orientation
from .static_color import DegeneracyOracle


@dataclass
class ArbReport:
    report: UpdateReport
    flips: int


class ArbPipeline:
    def __init__(self, config: EngineConfig, alpha: int, cap: int | None = None,
                 debug: bool = False):
        if alpha < 1:
            raise ValueError("alpha must be at least 1")
        self.alpha = alpha
        self.cap = 4 * alpha if cap is None else cap
        self.orientation = Orientation(config.n, self.cap)
        self.oracle = DegeneracyOracle(alpha, self.orientation)
        self.engine = IntervalEngine(config, oracle=self.oracle, debug=debug)

    def process_update(self, ev: UpdateEvent) -> ArbReport:
        if ev.is_insert:
            flips = self.orientation.insert(ev.u, ev.v)
        else:
            self.orientation.delete(ev.u, ev.v)
            flips = 0
        report = self.engine.process_update(ev)
        return ArbReport(report=report, flips=flips)

    def color_of(self, v: int) -> int:
        return self.engine.color_of(v)
