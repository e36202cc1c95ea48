"""Text formats for site lists and run traces."""

from __future__ import annotations

from typing import Iterable, Sequence

from hamgrowth.errors import InvalidInput
from hamgrowth.regular import INF, ExtendedState

Site = tuple[int, int]


def parse_sites(text: str) -> frozenset:
    """One ``i j`` pair per line or per ``;``-separated chunk; ``#`` starts a comment."""
    out = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for chunk in line.split(";"):
            toks = chunk.replace(",", " ").split()
            if not toks:
                continue
            if len(toks) != 2:
                raise InvalidInput(f"expected 'i j', got {chunk.strip()!r}")
            try:
                x, y = int(toks[0]), int(toks[1])
            except ValueError as exc:
                raise InvalidInput(f"non-integer site {chunk.strip()!r}") from exc
            if x < 0 or y < 0:
                raise InvalidInput(f"negative coordinate in {chunk.strip()!r}")
            out.add((x, y))
    return frozenset(out)


def format_sites(sites: Iterable[Site], inline: bool = False) -> str:
    ordered = sorted(sites, key=lambda p: (p[1], p[0]))
    sep = "; " if inline else "\n"
    return sep.join(f"{x} {y}" for x, y in ordered)


def _count(v) -> str:
    return "inf" if v == INF else str(v)


def trace_lines(states: Sequence[ExtendedState], spans: bool) -> list[str]:
    """``step=<t> occupied=<k> lines_covered=<ids> verdict=<...>`` per state."""
    last = len(states) - 1
    final = f"spans({last})" if spans else f"fixates({last})"
    out = []
    for t, s in enumerate(states):
        lines = ",".join(s.covered_lines()) or "-"
        verdict = final if t == last else "running"
        out.append(f"step={t} occupied={_count(s.occupied_sites())} lines_covered={lines} verdict={verdict}")
    return out
