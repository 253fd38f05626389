"""Dynamic graph core: update semantics, dense mirrors, trace round-trips."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dyncolor.graph import (
    DuplicateEdgeError,
    DynamicGraph,
    MissingEdgeError,
    SelfLoopError,
    TraceFormatError,
    UpdateEvent,
    UpdateTrace,
    VertexRangeError,
    edge_key,
    read_trace,
    replay,
    write_trace,
)


def test_edge_key_normalizes():
    assert edge_key(3, 1) == (1, 3)
    assert edge_key(1, 3) == (1, 3)


def test_insert_delete_roundtrip():
    g = DynamicGraph(4)
    g.insert_edge(0, 1)
    g.insert_edge(2, 1)
    assert g.has_edge(1, 0) and g.has_edge(1, 2)
    assert g.degree(1) == 2
    assert g.neighbors(1) == {0, 2}
    g.delete_edge(1, 0)
    assert not g.has_edge(0, 1)
    assert g.edge_count == 1
    assert set(g.edges()) == {(1, 2)}


def test_update_errors():
    g = DynamicGraph(3)
    with pytest.raises(SelfLoopError):
        g.insert_edge(1, 1)
    with pytest.raises(VertexRangeError):
        g.insert_edge(0, 3)
    g.insert_edge(0, 1)
    with pytest.raises(DuplicateEdgeError):
        g.insert_edge(1, 0)
    with pytest.raises(MissingEdgeError):
        g.delete_edge(0, 2)
    with pytest.raises(VertexRangeError):
        DynamicGraph(0)


def test_edge_arrays_track_adjacency():
    g = DynamicGraph(5)
    pairs = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]
    for u, v in pairs:
        g.insert_edge(u, v)
    g.delete_edge(1, 2)
    g.delete_edge(4, 0)
    eu, ev = g.edge_arrays()
    assert len(eu) == g.edge_count == 4
    seen = {edge_key(int(a), int(b)) for a, b in zip(eu, ev)}
    assert seen == {(0, 1), (2, 3), (3, 4), (0, 2)}


def test_induced_subgraph_matches_bruteforce():
    g = DynamicGraph(6)
    for u, v in [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5)]:
        g.insert_edge(u, v)
    subset = {0, 1, 2, 4, 5}
    expect = {edge_key(u, v) for u, v in g.edges()
              if u in subset and v in subset}
    assert g.induced_subgraph(subset) == expect == {(0, 1), (0, 2), (1, 2), (4, 5)}


def test_max_degree():
    g = DynamicGraph(4)
    assert g.max_degree() == 0
    g.insert_edge(0, 1)
    g.insert_edge(0, 2)
    g.insert_edge(0, 3)
    assert g.max_degree() == 3


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=120),
       st.randoms(use_true_random=False))
def test_graph_agrees_with_reference_dict(pairs, rng):
    """Random churn: adjacency, degree, and dense mirrors all agree with a
    plain dict-of-sets reference."""
    g = DynamicGraph(8)
    ref: dict[int, set[int]] = {v: set() for v in range(8)}
    for u, v in pairs:
        if u == v:
            continue
        if v in ref[u]:
            if rng.random() < 0.5:
                g.delete_edge(u, v)
                ref[u].discard(v)
                ref[v].discard(u)
        else:
            g.insert_edge(u, v)
            ref[u].add(v)
            ref[v].add(u)
    assert [g.neighbors(v) for v in range(8)] == [ref[v] for v in range(8)]
    eu, ev = g.edge_arrays()
    mirrored = {edge_key(int(a), int(b)) for a, b in zip(eu, ev)}
    expect = {edge_key(u, v) for u in range(8) for v in ref[u] if u < v}
    assert mirrored == expect
    assert g.edge_count == len(expect)


def test_update_event_accessors():
    ins = UpdateEvent("+", 2, 5)
    rem = UpdateEvent("-", 5, 2)
    assert ins.is_insert and not rem.is_insert
    assert ins.line() == "+ 2 5"
    assert rem.line() == "- 5 2"


def test_trace_write_read_roundtrip(tmp_path):
    tr = UpdateTrace(5, [UpdateEvent("+", 0, 1), UpdateEvent("+", 1, 2),
                         UpdateEvent("-", 0, 1)])
    path = tmp_path / "t.txt"
    write_trace(str(path), tr)
    back = read_trace(str(path))
    assert back.n == 5
    assert back.events == tr.events
    # write again: byte-identical
    path2 = tmp_path / "t2.txt"
    write_trace(str(path2), back)
    assert path.read_bytes() == path2.read_bytes()


def test_trace_read_skips_comments_and_blanks(tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("# header comment\n\nn 3\n+ 0 1\n\n# mid\n- 0 1\n")
    tr = read_trace(str(path))
    assert tr.n == 3
    assert len(tr.events) == 2


@pytest.mark.parametrize("content", [
    "",                      # no header
    "+ 0 1\n",               # events before header
    "n 3\n* 0 1\n",          # bad op
    "n 3\n+ 0\n",            # missing endpoint
    "n x\n",                 # bad count
    "n 3\n+ a b\n",          # bad endpoints
])
def test_trace_read_rejects_malformed(tmp_path, content):
    path = tmp_path / "bad.txt"
    path.write_text(content)
    with pytest.raises(TraceFormatError):
        read_trace(str(path))


def test_replay_builds_final_graph():
    tr = UpdateTrace(4, [UpdateEvent("+", 0, 1), UpdateEvent("+", 1, 2),
                         UpdateEvent("-", 0, 1), UpdateEvent("+", 2, 3)])
    g = replay(tr)
    assert set(g.edges()) == {(1, 2), (2, 3)}


def test_replay_rejects_invalid_trace():
    tr = UpdateTrace(4, [UpdateEvent("+", 0, 1), UpdateEvent("+", 0, 1)])
    with pytest.raises(DuplicateEdgeError):
        replay(tr)
