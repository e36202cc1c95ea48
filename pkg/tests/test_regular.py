import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hamgrowth.errors import InternalError, InvalidInput
from hamgrowth.regular import (
    INF,
    init_state,
    iterate,
    oracle_grid_side,
    run,
    run_truncated_oracle,
    spanning_time,
)
from hamgrowth.young import EMPTY, YoungDiagram, rectangle
from strategies import diagrams, site_sets

FIX_Z = YoungDiagram((4, 3, 1))
FIX_A = [(1, 3), (1, 5), (3, 1), (3, 4), (4, 3)]


def occupied_window(state, side):
    return np.array([[state.site_occupied(x, y) for y in range(side)] for x in range(side)])


def test_fixation_example():
    trace = run(FIX_Z, FIX_A)
    window = range(6)
    occ = [{(x, y) for x in window for y in window if s.site_occupied(x, y)} for s in trace.steps]
    a1 = set(FIX_A) | {(1, 1), (3, 3), (1, 4), (3, 5)}
    assert occ[0] == set(FIX_A)
    assert occ[1] == a1
    assert occ[2] == a1 | {(x, y) for x in (1, 3) for y in window}
    assert not trace.spans and trace.time == 2
    assert trace.verdict == "fixates(2)"
    assert trace.tau is None and trace.tau_line == 2
    assert {line for _, line in trace.line_events} == {"c1", "c3"}


def test_single_site_spans_in_two():
    assert spanning_time(rectangle(1, 1), [(0, 0)]) == 2


def test_empty_zero_set_spans_at_once():
    assert spanning_time(EMPTY, []) == 1
    assert spanning_time(EMPTY, [(0, 0)]) == 1


def test_empty_set_fixates_for_nonempty_zero_set():
    trace = run(rectangle(1, 1), [])
    assert not trace.spans and trace.time == 0
    assert trace.tau_line is None


def test_counts_become_infinite():
    trace = run(rectangle(1, 1), [(0, 0)])
    assert trace.steps[1].row_counts[0] == INF
    assert trace.steps[1].occupied_sites() == INF


def test_rejects_negative_sites():
    with pytest.raises(InvalidInput):
        init_state([(-1, 0)])


def test_step_guard():
    with pytest.raises(InternalError):
        iterate(init_state([(0, 0)]), rectangle(1, 1), max_steps=1)


@given(diagrams(4, 4), site_sets(5, 6))
def test_matches_truncated_grid(z, sites):
    trace = run(z, sites)
    side = oracle_grid_side(z, sites)
    ref = run_truncated_oracle(z, sites, side)
    assert len(ref) == len(trace.steps)
    for s, o in zip(trace.steps, ref):
        assert np.array_equal(occupied_window(s, side), o)
    assert trace.spans == bool(ref[-1].all())


def test_oracle_rejects_small_grid():
    with pytest.raises(InvalidInput):
        run_truncated_oracle(FIX_Z, FIX_A, 5)


@given(diagrams(4, 4), site_sets(5, 6))
def test_monotone_in_time(z, sites):
    states = run(z, sites).steps
    for a, b in zip(states, states[1:]):
        assert all(x & ~y == 0 for x, y in zip(a.row_bits, b.row_bits))
        assert a.row_bits != b.row_bits


@given(diagrams(4, 4), site_sets(5, 6), st.permutations(range(6)), st.permutations(range(6)))
def test_permutation_invariant(z, sites, px, py):
    moved = {(px[x], py[y]) for x, y in sites}
    a, b = run(z, sites), run(z, moved)
    assert (a.spans, a.time) == (b.spans, b.time)


@given(diagrams(4, 4), site_sets(5, 5), site_sets(5, 2))
def test_more_sites_never_slower_to_span(z, sites, extra):
    # monotone map: a superset's iterates contain the subset's iterates
    t_small = spanning_time(z, sites)
    t_big = spanning_time(z, sites | extra)
    if t_small is not None:
        assert t_big is not None and t_big <= t_small


@given(diagrams(4, 4), diagrams(4, 4), site_sets(5, 6))
def test_smaller_zero_set_never_slower(z, w, sites):
    small, big = z & w, z
    t_big = spanning_time(big, sites)
    if t_big is not None:
        t_small = spanning_time(small, sites)
        assert t_small is not None and t_small <= t_big
