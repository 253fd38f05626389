"""Fully dynamic graph coloring engines and their benchmark harness."""

from .arb import ArbPipeline, ArbReport
from .ballsbins import BinsGame, DominationMirror, run_adversary
from .graph import (DuplicateEdgeError, DynamicGraph, GraphError,
                    MissingEdgeError, SelfLoopError, TraceFormatError,
                    UpdateEvent, UpdateTrace, read_trace, replay, write_trace)
from .greedy import GreedyColorer, PaletteExhaustedError
from .interval import (ColorAssignment, EngineConfig, IntervalEngine,
                       StaticCallRecord, UpdateReport, check_instance_exclusivity,
                       check_properness, check_residual, endpoint_level)
from .lds import (LayerCapExceeded, LayeredEngine, LdsConfig, LdsReport,
                  check_lds_invariants)
from .metrics import (run_arb, run_bins, run_general, run_lds, write_csv,
                      CheckFailure, RunResult)
from .orientation import CapTooSmallError, Orientation
from .static_color import (ArboricityExceeded, DegeneracyOracle,
                           GreedyStaticOracle, color_by_order, degeneracy_order,
                           greedy_static, induced_via_orientation)
from .traces import TRACE_KINDS, gen_trace

__version__ = "0.1.0"
