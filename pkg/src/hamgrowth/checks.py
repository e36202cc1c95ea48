"""Structural assertions on recorded runs.

Every function takes a list of states from one run and returns a list of
human-readable violations; an empty list means the property held.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from hamgrowth.enhanced import EnhancementPair, block_violations, bonuses, tau_en
from hamgrowth.errors import InvalidInput
from hamgrowth.regular import ExtendedState, init_state, iterate
from hamgrowth.young import YoungDiagram

Site = tuple[int, int]


def crosspoint_violations(states: Sequence[ExtendedState]) -> list[str]:
    """Newly occupied, non-neighboring x and y have an occupied crossing.

    Only cell pairs in distinct row classes and distinct column classes can
    hold non-neighboring sites with crossings outside their own cells.
    """
    base = states[0].row_bits
    out = []
    for t, s in enumerate(states):
        occ = s.row_bits
        new = [b & ~a for a, b in zip(base, occ)]
        for j1 in range(len(occ)):
            if not new[j1]:
                continue
            for j2 in range(j1 + 1, len(occ)):
                if new[j1] & ~occ[j2] and new[j2] & ~occ[j1]:
                    out.append(f"step {t}: rows {j1},{j2} have new sites with both crossings empty")
    return out


def _covered(s: ExtendedState) -> tuple[set[int], set[int]]:
    rows = {j for j, b in enumerate(s.row_bits) if b == s.full_row}
    cols = {i for i, b in enumerate(s.col_bits) if b == s.full_col}
    return rows, cols


def _empty_lines(s: ExtendedState) -> tuple[set[int], set[int]]:
    return (
        {j for j, b in enumerate(s.row_bits) if b == 0},
        {i for i, b in enumerate(s.col_bits) if b == 0},
    )


def line_growth_violations(states: Sequence[ExtendedState]) -> list[str]:
    """Rectangle zero-sets: a line that is empty at ``t+1`` and covered at
    ``t+2`` needs a transverse line empty at ``t`` and covered at ``t+1``
    that crosses it."""
    out = []
    for t in range(len(states) - 2):
        s0, s1, s2 = states[t : t + 3]
        er0, ec0 = _empty_lines(s0)
        er1, ec1 = _empty_lines(s1)
        cr1, cc1 = _covered(s1)
        cr2, cc2 = _covered(s2)
        fresh_cols = ec0 & cc1
        fresh_rows = er0 & cr1
        for j in er1 & cr2:
            if not fresh_cols:
                out.append(f"step {t + 2}: row class {j} covered with no fresh column at {t + 1}")
        for i in ec1 & cc2:
            if not fresh_rows:
                out.append(f"step {t + 2}: column class {i} covered with no fresh row at {t + 1}")
    return out


def l_growth_violations(states: Sequence[ExtendedState]) -> list[str]:
    """L zero-sets: while growth goes on, every two steps cover a new line.

    If step ``t+2`` still adds sites, some line covered at ``t+2`` was not
    covered at ``t``.
    """
    out = []
    for t in range(len(states) - 2):
        s0, s1, s2 = states[t : t + 3]
        if s2.row_bits == s1.row_bits:
            continue
        r0, c0 = _covered(s0)
        r2, c2 = _covered(s2)
        if not (r2 - r0 or c2 - c0):
            out.append(f"steps {t + 1}-{t + 2}: growth without a newly covered line")
    return out


def _require_contiguous(s: ExtendedState) -> None:
    if s.cols != tuple(range(s.ncols)) or s.rows != tuple(range(s.nrows)):
        raise InvalidInput("real rows and columns must be 0..k-1 for shape checks")


def young_part_violations(states: Sequence[ExtendedState], base: Optional[Iterable[Site]] = None) -> list[str]:
    """Every iterate is ``base`` (default: the initial state) together with
    a Young diagram.

    Requires real rows/columns to be exactly ``0..k-1`` so that class order
    is coordinate order and the generic class lies beyond every real one.
    """
    s0 = states[0]
    _require_contiguous(s0)
    if base is None:
        base_bits = list(s0.row_bits)
    else:
        base_bits = [0] * (s0.nrows + 1)
        for x, y in base:
            base_bits[y] |= 1 << x
    out = []
    for t, s in enumerate(states):
        reach = 0
        for j in range(s.nrows, -1, -1):
            extra = s.row_bits[j] & ~base_bits[j]
            if extra:
                reach = max(reach, extra.bit_length())
            need = (1 << reach) - 1
            if s.row_bits[j] & need != need:
                out.append(f"step {t}: row class {j} misses cells below the grown part")
    return out


def young_shape_violations(s: ExtendedState) -> list[str]:
    """The occupied cells form a Young diagram on the class grid."""
    lengths = []
    for j, b in enumerate(s.row_bits):
        if b & (b + 1):
            return [f"row class {j} is not a left-justified run"]
        lengths.append(b.bit_length())
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        return [f"row lengths not weakly decreasing: {lengths}"]
    return []


def enhanced_structure_violations(
    z: YoungDiagram, e: EnhancementPair, states: Sequence[ExtendedState], spans: bool
) -> list[str]:
    """Young shape, concave-corner growth (spanning runs) and simultaneity."""
    out = []
    rb, cb = bonuses(e)
    for t, s in enumerate(states):
        out.extend(f"step {t}: {v}" for v in young_shape_violations(s))
        groups: dict[tuple[int, int], bool] = {}
        for j in range(s.nrows):
            for i in range(s.ncols):
                key = (rb[j], cb[i])
                occ = s.occupied(i, j)
                if groups.setdefault(key, occ) != occ:
                    out.append(f"step {t}: cells with enhancements {key} disagree")
        if spans and t + 1 < len(states):
            nxt = states[t + 1]
            for j in range(s.nrows + 1):
                for i in range(s.ncols + 1):
                    left = i == 0 or s.occupied(i - 1, j)
                    below = j == 0 or s.occupied(i, j - 1)
                    if left and below and not nxt.occupied(i, j):
                        out.append(f"step {t}: concave corner ({i},{j}) did not grow")
    if spans:
        out.extend(block_violations(z, e, states))
    return out


def audit_enhanced(z: YoungDiagram, e: EnhancementPair) -> tuple[int | None, list[str]]:
    """Run ``e`` on ``z`` keeping states; return (tau, violations)."""
    run = tau_en(z, e, keep=True)
    return run.tau, enhanced_structure_violations(z, e, run.states, run.spans)


def thin_enhanced_agreement(z: YoungDiagram, sites: Iterable[Site]) -> list[str]:
    """Regular growth from a standard-arrangement thin set and enhanced growth
    from its line counts occupy the region strictly below the set in step.

    Compared until the region below is covered by the regular run.
    """
    from hamgrowth.thin import thin_to_enhancements

    sites = frozenset(sites)
    e = thin_to_enhancements(sites)
    below = {
        (x, y)
        for (px, py) in sites
        for x in range(px + 1)
        for y in range(py + 1)
        if (x, y) not in sites
    }
    reg, _, _ = iterate(init_state(sites), z)
    enh = tau_en(z, e, keep=True).states
    out = []
    for t in range(len(reg)):
        b = enh[min(t, len(enh) - 1)]
        a = reg[t]
        for x, y in below:
            if a.occupied(x, y) != b.occupied(x, y):
                out.append(f"step {t}: site {(x, y)} regular={a.occupied(x, y)} enhanced={b.occupied(x, y)}")
        if all(a.occupied(x, y) for x, y in below):
            break
    return out
