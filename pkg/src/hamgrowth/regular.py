"""Exact neighborhood growth on the infinite plane from a finite initial set.

The plane is split into classes: each column meeting the initial set is its
own class, every other column belongs to one generic column class, and the
same for rows.  A state records which (column class, row class) cells are
occupied.  All sites of a cell share their row and column counts, so they
are occupied together; this is what makes the finite encoding exact.

Cells are packed as bitsets.  ``row_bits[j]`` has bit ``i`` set when cell
``(i, j)`` is occupied, and ``col_bits[i]`` is the transposed view.  The
last index on each axis is the generic class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from hamgrowth.errors import InternalError, InvalidInput
from hamgrowth.young import YoungDiagram

INF = math.inf

Site = tuple[int, int]


def membership_threshold(z: YoungDiagram, u) -> int:
    """Smallest column count that puts ``(u, v)`` outside ``z``.

    An empty site with row count ``u`` and column count ``v`` is occupied
    exactly when ``v >= membership_threshold(z, u)``.  An infinite ``u``
    lies beyond every finite coordinate, so its threshold is 0.
    """
    if u == INF or u >= z.width:
        return 0
    return z.col(u)


@dataclass(frozen=True)
class ExtendedState:
    cols: tuple[int, ...]
    rows: tuple[int, ...]
    row_bits: tuple[int, ...]
    col_bits: tuple[int, ...]

    @classmethod
    def empty(cls, cols: Sequence[int], rows: Sequence[int]) -> "ExtendedState":
        return cls(tuple(cols), tuple(rows), (0,) * (len(rows) + 1), (0,) * (len(cols) + 1))

    @property
    def ncols(self) -> int:
        """Number of real column classes; index ``ncols`` is generic."""
        return len(self.cols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def occupied(self, i: int, j: int) -> bool:
        return bool(self.row_bits[j] >> i & 1)

    def matrix(self) -> list[list[bool]]:
        """``occ[i][j]`` over (ncols + 1) x (nrows + 1) cells."""
        return [[self.occupied(i, j) for j in range(self.nrows + 1)] for i in range(self.ncols + 1)]

    @cached_property
    def row_counts(self) -> tuple:
        gen = 1 << self.ncols
        real = gen - 1
        return tuple(
            INF if b & gen else (b & real).bit_count() for b in self.row_bits
        )

    @cached_property
    def col_counts(self) -> tuple:
        gen = 1 << self.nrows
        real = gen - 1
        return tuple(
            INF if b & gen else (b & real).bit_count() for b in self.col_bits
        )

    @property
    def full_row(self) -> int:
        return (1 << (self.ncols + 1)) - 1

    @property
    def full_col(self) -> int:
        return (1 << (self.nrows + 1)) - 1

    def is_full(self) -> bool:
        full = self.full_row
        return all(b == full for b in self.row_bits)

    def n_occupied_cells(self) -> int:
        return sum(b.bit_count() for b in self.row_bits)

    def occupied_sites(self):
        """Number of occupied sites of the plane, ``INF`` once a generic cell fills."""
        if self.row_bits[-1] or any(b >> self.ncols & 1 for b in self.row_bits):
            return INF
        return self.n_occupied_cells()

    def covered_lines(self) -> list[str]:
        """Ids of covered lines: ``r<y>``/``c<x>`` for real, ``r*``/``c*`` generic."""
        out = []
        full = self.full_row
        for j, b in enumerate(self.row_bits):
            if b == full:
                out.append(f"r{self.rows[j]}" if j < self.nrows else "r*")
        full = self.full_col
        for i, b in enumerate(self.col_bits):
            if b == full:
                out.append(f"c{self.cols[i]}" if i < self.ncols else "c*")
        return out

    def column_class(self, x: int) -> int:
        try:
            return self.cols.index(x)
        except ValueError:
            return self.ncols

    def row_class(self, y: int) -> int:
        try:
            return self.rows.index(y)
        except ValueError:
            return self.nrows

    def site_occupied(self, x: int, y: int) -> bool:
        return self.occupied(self.column_class(x), self.row_class(y))


def advance(
    state: ExtendedState,
    z: YoungDiagram,
    row_bonus: Optional[Sequence[int]] = None,
    col_bonus: Optional[Sequence[int]] = None,
) -> ExtendedState:
    """One synchronous application of the growth map.

    ``row_bonus[j]``/``col_bonus[i]`` are added to the counts of row class
    ``j`` and column class ``i``; with no bonus this is the regular map,
    with enhancement values it is the enhanced map.
    """
    n = z.height
    rc = state.row_counts
    cc = state.col_counts
    if row_bonus is not None:
        rc = [u + b for u, b in zip(rc, row_bonus)]
    if col_bonus is not None:
        cc = [v + b for v, b in zip(cc, col_bonus)]

    heights = [membership_threshold(z, u) for u in rc]
    # column counts at or above n behave like infinity for every threshold
    keys = [n if v >= n else v for v in cc]

    col_ge = [0] * (n + 2)
    for i, key in enumerate(keys):
        col_ge[key] |= 1 << i
    for h in range(n - 1, -1, -1):
        col_ge[h] |= col_ge[h + 1]

    row_le = [0] * (n + 1)
    for j, h in enumerate(heights):
        row_le[h] |= 1 << j
    for k in range(1, n + 1):
        row_le[k] |= row_le[k - 1]

    row_bits = tuple(b | col_ge[h] for b, h in zip(state.row_bits, heights))
    col_bits = tuple(b | row_le[key] for b, key in zip(state.col_bits, keys))
    return ExtendedState(state.cols, state.rows, row_bits, col_bits)


def init_state(sites: Iterable[Site]) -> ExtendedState:
    sites = set((int(x), int(y)) for x, y in sites)
    if any(x < 0 or y < 0 for x, y in sites):
        raise InvalidInput("sites must have nonnegative coordinates")
    cols = tuple(sorted({x for x, _ in sites}))
    rows = tuple(sorted({y for _, y in sites}))
    ci = {x: i for i, x in enumerate(cols)}
    rj = {y: j for j, y in enumerate(rows)}
    row_bits = [0] * (len(rows) + 1)
    col_bits = [0] * (len(cols) + 1)
    for x, y in sites:
        row_bits[rj[y]] |= 1 << ci[x]
        col_bits[ci[x]] |= 1 << rj[y]
    return ExtendedState(cols, rows, tuple(row_bits), tuple(col_bits))


def step(state: ExtendedState, z: YoungDiagram) -> ExtendedState:
    return advance(state, z)


@dataclass
class GrowthTrace:
    """Record of a run: every distinct state, the verdict and line events.

    ``time`` is the index of the last distinct state.  For a spanning run it
    equals ``tau``.  ``tau_line`` is the first step at which some row or
    column (real or generic) is covered; ``None`` if that never happens.
    """

    steps: list[ExtendedState]
    spans: bool
    time: int
    line_events: list[tuple[int, str]] = field(default_factory=list)

    @property
    def tau(self) -> Optional[int]:
        return self.time if self.spans else None

    @property
    def tau_line(self) -> Optional[int]:
        return self.line_events[0][0] if self.line_events else None

    @property
    def verdict(self) -> str:
        return f"spans({self.time})" if self.spans else f"fixates({self.time})"

    @property
    def final(self) -> ExtendedState:
        return self.steps[-1]


def iterate(
    state: ExtendedState,
    z: YoungDiagram,
    row_bonus=None,
    col_bonus=None,
    max_steps: Optional[int] = None,
    keep: bool = True,
) -> tuple[list[ExtendedState], bool, int]:
    """Iterate from ``state`` to spanning or fixation.

    Returns (states, spans, time); ``states`` holds only the final state
    when ``keep`` is false.
    """
    if max_steps is None:
        max_steps = (state.ncols + 1) * (state.nrows + 1) + 2
    states = [state]
    t = 0
    while True:
        if state.is_full():
            return states, True, t
        nxt = advance(state, z, row_bonus, col_bonus)
        if nxt.row_bits == state.row_bits:
            return states, False, t
        t += 1
        if t > max_steps:
            raise InternalError(f"no fixation within {max_steps} steps")
        state = nxt
        if keep:
            states.append(state)
        else:
            states[0] = state


def run(z: YoungDiagram, sites: Iterable[Site], max_steps: Optional[int] = None) -> GrowthTrace:
    states, spans, t = iterate(init_state(sites), z, max_steps=max_steps)
    events = []
    seen: set[str] = set()
    for k, s in enumerate(states):
        for line in s.covered_lines():
            if line not in seen:
                seen.add(line)
                events.append((k, line))
    return GrowthTrace(states, spans, t, events)


def spanning_time(z: YoungDiagram, sites: Iterable[Site]) -> Optional[int]:
    """tau(Z, A), or ``None`` when ``A`` does not span."""
    _, spans, t = iterate(init_state(sites), z, keep=False)
    return t if spans else None


def oracle_grid_side(z: YoungDiagram, sites: Iterable[Site]) -> int:
    sites = list(sites)
    xs = {x for x, _ in sites}
    ys = {y for _, y in sites}
    need = len(xs) + len(ys) + z.width + z.height + 2
    return max([need] + [x + 1 for x in xs] + [y + 1 for y in ys])


def run_truncated_oracle(z: YoungDiagram, sites: Iterable[Site], grid_side: int) -> list[np.ndarray]:
    """Direct synchronous simulation on the window ``[0, grid_side)^2``.

    Returns the occupied arrays ``occ[x, y]`` up to the first repeat.  The
    window is large enough that any count reaching ``m`` (or ``n``) already
    decides membership the way an infinite count would.
    """
    sites = list(sites)
    xs = {x for x, _ in sites}
    ys = {y for _, y in sites}
    need = len(xs) + len(ys) + z.width + z.height + 2
    if grid_side < need or any(x >= grid_side or y >= grid_side for x, y in sites):
        raise InvalidInput(f"grid side {grid_side} too small (need {need} and all sites inside)")
    m, n = z.width, z.height
    inside = np.zeros((m + 1, n + 1), dtype=bool)
    for u, v in z.cells():
        inside[u, v] = True
    occ = np.zeros((grid_side, grid_side), dtype=bool)
    for x, y in sites:
        occ[x, y] = True
    out = [occ]
    while True:
        row = np.minimum(occ.sum(axis=0), m)  # per y
        col = np.minimum(occ.sum(axis=1), n)  # per x
        blocked = inside[row[None, :], col[:, None]]
        nxt = occ | ~blocked
        if np.array_equal(nxt, occ):
            return out
        occ = nxt
        out.append(occ)
