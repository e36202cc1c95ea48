"""Enhanced neighborhood growth started from the empty set.

Row ``j`` carries a fixed bonus ``r[j]`` and column ``i`` a bonus ``c[i]``
that are added to the counts before the zero-set test.  The run uses the
same cell engine as the regular dynamics: columns ``0..len(c)-1`` are
real classes, every other column is generic (bonus 0), likewise for rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from hamgrowth.regular import ExtendedState, iterate
from hamgrowth.errors import InvalidInput
from hamgrowth.young import YoungDiagram, boxplus


def _enh_vector(seq: Iterable[int], name: str) -> tuple[int, ...]:
    vals = [int(x) for x in seq]
    while vals and vals[-1] == 0:
        vals.pop()
    if any(x < 0 for x in vals):
        raise InvalidInput(f"{name} enhancements must be nonnegative: {vals}")
    if any(a < b for a, b in zip(vals, vals[1:])):
        raise InvalidInput(f"{name} enhancements must be weakly decreasing: {vals}")
    return tuple(vals)


@dataclass(frozen=True)
class EnhancementPair:
    """Row enhancements ``r`` and column enhancements ``c`` (zeros stripped)."""

    r: tuple[int, ...] = ()
    c: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "r", _enh_vector(self.r, "row"))
        object.__setattr__(self, "c", _enh_vector(self.c, "column"))

    @classmethod
    def from_diagrams(cls, row_shape: YoungDiagram, col_shape: YoungDiagram) -> "EnhancementPair":
        """Pair whose row diagram is ``row_shape`` and column diagram ``col_shape``."""
        return cls(row_shape.rows, col_shape.cols)

    @property
    def R(self) -> YoungDiagram:
        return YoungDiagram(self.r)

    @property
    def C(self) -> YoungDiagram:
        return YoungDiagram.from_columns(self.c)

    @property
    def n_rows(self) -> int:
        """N0: support length of the row enhancements."""
        return len(self.r)

    @property
    def n_cols(self) -> int:
        return len(self.c)

    def __str__(self) -> str:
        return format_enhancements(self)


@dataclass
class EnhancedRun:
    spans: bool
    time: int
    states: list[ExtendedState]

    @property
    def tau(self) -> Optional[int]:
        return self.time if self.spans else None

    @property
    def verdict(self) -> str:
        return f"spans({self.time})" if self.spans else f"fixates({self.time})"


def initial_state(e: EnhancementPair) -> ExtendedState:
    return ExtendedState.empty(range(e.n_cols), range(e.n_rows))


def bonuses(e: EnhancementPair) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return e.r + (0,), e.c + (0,)


def tau_en(
    z: YoungDiagram,
    e: EnhancementPair,
    max_steps: Optional[int] = None,
    keep: bool = False,
) -> EnhancedRun:
    """Simulate the enhanced map from the empty set until spanning or fixation."""
    rb, cb = bonuses(e)
    states, spans, t = iterate(initial_state(e), z, rb, cb, max_steps=max_steps, keep=keep)
    return EnhancedRun(spans, t, states)


def spans_by_containment(z: YoungDiagram, e: EnhancementPair) -> bool:
    return z.issubset(boxplus(e.R, e.C))


def distinct_nonzero(vals: Iterable[int]) -> int:
    return len({v for v in vals if v})


def _intervals(vals: tuple[int, ...]) -> list[int]:
    """Block index of each real position: maximal runs of equal values."""
    out, k = [], 0
    for p, v in enumerate(vals):
        if p and v != vals[p - 1]:
            k += 1
        out.append(k)
    return out


def block_violations(z: YoungDiagram, e: EnhancementPair, states: list[ExtendedState]) -> list[str]:
    """Cells of blocks ``I_i x J_j`` with ``i + j < t`` still empty at step ``t``.

    Blocks are the maximal runs of equal column (resp. row) enhancements;
    the generic class forms the last block on each axis.
    """
    ci = _intervals(e.c) + [len(set(e.c))]
    rj = _intervals(e.r) + [len(set(e.r))]
    out = []
    for t, s in enumerate(states):
        for j in range(s.nrows + 1):
            for i in range(s.ncols + 1):
                if ci[i] + rj[j] < t and not s.occupied(i, j):
                    out.append(f"step {t}: block cell ({i},{j}) empty")
    return out


def partition_bound_check(z: YoungDiagram, e: EnhancementPair) -> bool:
    """Spanning time is at most M + N + 1 and block containment holds each step.

    M and N count the nonzero row and column enhancements.  The distinct-value
    form (which is what the block argument actually gives) is checked too.
    """
    if not spans_by_containment(z, e):
        raise InvalidInput("enhancements do not span for this zero-set")
    run = tau_en(z, e, keep=True)
    bound_entries = len(e.r) + len(e.c) + 1
    bound_distinct = distinct_nonzero(e.r) + distinct_nonzero(e.c) + 1
    return (
        run.spans
        and run.time <= bound_distinct <= bound_entries
        and not block_violations(z, e, run.states)
    )


def parse_enhancements(text: str) -> EnhancementPair:
    """Parse ``"r: 4 2 1 / c: 3 1"`` or the same on two lines."""
    parts = [p.strip() for chunk in text.splitlines() for p in chunk.split("/")]
    found: dict[str, tuple[int, ...]] = {}
    for part in parts:
        if not part or part.startswith("#"):
            continue
        key, sep, body = part.partition(":")
        key = key.strip().lower()
        if not sep or key not in ("r", "c") or key in found:
            raise InvalidInput(f"malformed enhancement line: {part!r}")
        try:
            found[key] = tuple(int(tok) for tok in body.split())
        except ValueError as exc:
            raise InvalidInput(f"malformed enhancement line: {part!r}") from exc
    return EnhancementPair(found.get("r", ()), found.get("c", ()))


def format_enhancements(e: EnhancementPair) -> str:
    r = " ".join(map(str, e.r))
    c = " ".join(map(str, e.c))
    return f"r: {r} / c: {c}".replace(":  /", ": /").rstrip()
