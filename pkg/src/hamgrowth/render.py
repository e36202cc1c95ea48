"""Static ASCII and SVG panels of a run, one panel per step.

A panel shows the window ``[0, W) x [0, H)`` of the plane, where ``W`` and
``H`` are one past the largest real column and row.  Everything beyond
the window belongs to the generic classes and is drawn as a band marked
``*`` on the right and on top.
"""

from __future__ import annotations

from typing import Sequence

from hamgrowth.errors import InvalidInput
from hamgrowth.regular import ExtendedState

FULL, EMPTY = "#", "."
CELL = 16
GAP = 24


def _window(s: ExtendedState) -> tuple[int, int]:
    return max(s.cols, default=-1) + 1, max(s.rows, default=-1) + 1


def _cell(s: ExtendedState, x, y) -> bool:
    i = s.ncols if x is None else s.column_class(x)
    j = s.nrows if y is None else s.row_class(y)
    return s.occupied(i, j)


def ascii_panel(s: ExtendedState, title: str = "") -> str:
    width, height = _window(s)
    label = max(len(str(height - 1)), 1)
    xs = list(range(width))
    rows = []
    if title:
        rows.append(title)
    mark = lambda occ: FULL if occ else EMPTY
    band = " ".join(mark(_cell(s, x, None)) for x in xs)
    rows.append(f"{'*':>{label}} {band} | {mark(_cell(s, None, None))}".rstrip())
    rows.append(" " * label + " " + "-" * (2 * width) + "+--")
    for y in range(height - 1, -1, -1):
        body = " ".join(mark(_cell(s, x, y)) for x in xs)
        rows.append(f"{y:>{label}} {body} | {mark(_cell(s, None, y))}")
    axis = " ".join(str(x % 10) for x in xs)
    rows.append(f"{'':>{label}} {axis}   *")
    return "\n".join(rows)


def render_ascii(states: Sequence[ExtendedState]) -> str:
    if not states:
        raise InvalidInput("nothing to render")
    return "\n\n".join(ascii_panel(s, f"step {t}") for t, s in enumerate(states)) + "\n"


def render_svg(states: Sequence[ExtendedState]) -> str:
    if not states:
        raise InvalidInput("nothing to render")
    width, height = _window(states[0])
    pw, ph = (width + 1) * CELL, (height + 1) * CELL
    total_w = len(states) * (pw + GAP) + GAP
    total_h = ph + 2 * GAP
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{total_h}" '
        f'viewBox="0 0 {total_w} {total_h}">',
        f'<rect width="{total_w}" height="{total_h}" fill="white"/>',
    ]
    for t, s in enumerate(states):
        ox, oy = GAP + t * (pw + GAP), GAP
        out.append(f'<text x="{ox}" y="{oy - 8}" font-family="monospace" font-size="12">step {t}</text>')
        # generic band: top row and right column
        out.append(f'<rect x="{ox}" y="{oy}" width="{pw}" height="{CELL}" fill="#e8e8e8"/>')
        out.append(f'<rect x="{ox + width * CELL}" y="{oy}" width="{CELL}" height="{ph}" fill="#e8e8e8"/>')
        for col in range(width + 1):
            x = None if col == width else col
            for row in range(height + 1):
                y = None if row == height else row
                if _cell(s, x, y):
                    px = ox + col * CELL
                    py = oy + (height - row) * CELL if y is not None else oy
                    out.append(f'<rect x="{px + 2}" y="{py + 2}" width="{CELL - 4}" height="{CELL - 4}" fill="black"/>')
        out.append(f'<rect x="{ox}" y="{oy}" width="{pw}" height="{ph}" fill="none" stroke="black"/>')
        out.append(
            f'<text x="{ox + width * CELL + 4}" y="{oy + 12}" font-family="monospace" font-size="11">*</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(states: Sequence[ExtendedState], mode: str) -> str:
    if mode == "ascii":
        return render_ascii(states)
    if mode == "svg":
        return render_svg(states)
    raise InvalidInput(f"unsupported render mode {mode!r}")
