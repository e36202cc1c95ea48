"""Finite Young diagrams and the tropical algebra on them.

A diagram is stored as its row lengths, bottom row first.  Site ``(u, v)``
lies in the diagram when ``v < len(rows)`` and ``u < rows[v]``.  The same
type serves as zero-set, enhancement shape and enhanced-growth state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from hamgrowth.errors import InvalidInput


def _canonical(seq: Iterable[int]) -> tuple[int, ...]:
    rows = [int(x) for x in seq]
    while rows and rows[-1] == 0:
        rows.pop()
    return tuple(rows)


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(x) for x in self.rows)
        if any(x < 1 for x in rows):
            raise InvalidInput(f"row lengths must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise InvalidInput(f"row lengths must be weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, seq: Iterable[int]) -> "YoungDiagram":
        """Build from a zero-padded row sequence (trailing zeros dropped)."""
        return cls(_canonical(seq))

    @classmethod
    def from_columns(cls, seq: Iterable[int]) -> "YoungDiagram":
        return cls(_canonical(seq)).transpose()

    @classmethod
    def from_cells(cls, cells: Iterable[tuple[int, int]]) -> "YoungDiagram":
        """Downward closure of a finite set of sites."""
        heights: dict[int, int] = {}
        for u, v in cells:
            heights[v] = max(heights.get(v, 0), u + 1)
        if not heights:
            return cls()
        top = max(heights)
        rows = [0] * (top + 1)
        best = 0
        for v in range(top, -1, -1):
            best = max(best, heights.get(v, 0))
            rows[v] = best
        return cls(tuple(rows))

    # derived views

    @property
    def width(self) -> int:
        """m, the number of columns of the bounding rectangle."""
        return self.rows[0] if self.rows else 0

    @property
    def height(self) -> int:
        """n, the number of rows of the bounding rectangle."""
        return len(self.rows)

    @property
    def cols(self) -> tuple[int, ...]:
        """Column lengths, leftmost column first."""
        return tuple(sum(1 for r in self.rows if r > u) for u in range(self.width))

    @property
    def size(self) -> int:
        return sum(self.rows)

    def __len__(self) -> int:
        return self.size

    def __bool__(self) -> bool:
        return bool(self.rows)

    def row(self, v: int) -> int:
        return self.rows[v] if 0 <= v < len(self.rows) else 0

    def col(self, u: int) -> int:
        if u < 0:
            return 0
        return sum(1 for r in self.rows if r > u)

    def contains(self, u, v) -> bool:
        """Membership of ``(u, v)``; infinite coordinates are never inside."""
        return 0 <= v < len(self.rows) and 0 <= u < self.rows[v]

    def __contains__(self, site) -> bool:
        u, v = site
        return self.contains(u, v)

    def cells(self) -> Iterator[tuple[int, int]]:
        for v, r in enumerate(self.rows):
            for u in range(r):
                yield (u, v)

    def transpose(self) -> "YoungDiagram":
        return YoungDiagram(self.cols)

    # lattice operations on zero-extended row sequences

    def issubset(self, other: "YoungDiagram") -> bool:
        return len(self.rows) <= len(other.rows) and all(
            a <= b for a, b in zip(self.rows, other.rows)
        )

    __le__ = issubset

    def __ge__(self, other: "YoungDiagram") -> bool:
        return other.issubset(self)

    def __lt__(self, other: "YoungDiagram") -> bool:
        return self != other and self.issubset(other)

    def __gt__(self, other: "YoungDiagram") -> bool:
        return self != other and other.issubset(self)

    def __or__(self, other: "YoungDiagram") -> "YoungDiagram":
        n = max(self.height, other.height)
        return YoungDiagram(tuple(max(self.row(v), other.row(v)) for v in range(n)))

    def __and__(self, other: "YoungDiagram") -> "YoungDiagram":
        n = min(self.height, other.height)
        return YoungDiagram.from_rows(min(self.rows[v], other.rows[v]) for v in range(n))

    def corners(self) -> list[tuple[int, int]]:
        """Removable cells: those whose removal leaves a Young diagram."""
        out = []
        for v, r in enumerate(self.rows):
            if v + 1 == len(self.rows) or self.rows[v + 1] < r:
                out.append((r - 1, v))
        return out

    def remove(self, cell: tuple[int, int]) -> "YoungDiagram":
        u, v = cell
        if cell not in self.corners():
            raise InvalidInput(f"{cell} is not a removable corner of {self}")
        rows = list(self.rows)
        rows[v] -= 1
        return YoungDiagram.from_rows(rows)

    def sub_diagrams(self) -> Iterator["YoungDiagram"]:
        """All Young diagrams contained in this one, lexicographic by rows."""
        bound = self.rows

        def rec(v: int, cap: int, prefix: list[int]):
            if v == len(bound) or cap == 0:
                yield YoungDiagram(tuple(prefix))
                return
            yield YoungDiagram(tuple(prefix))
            for x in range(1, min(cap, bound[v]) + 1):
                prefix.append(x)
                yield from rec(v + 1, x, prefix)
                prefix.pop()

        yield from rec(0, self.width, [])

    def __str__(self) -> str:
        return format_diagram(self)

    def __repr__(self) -> str:
        return f"YoungDiagram({self.rows})"


EMPTY = YoungDiagram()


def rectangle(a: int, b: int) -> YoungDiagram:
    """R_{a,b}: ``a`` columns wide, ``b`` rows tall."""
    if a < 1 or b < 1:
        raise InvalidInput(f"rectangle sides must be positive, got {(a, b)}")
    return YoungDiagram((a,) * b)


def from_rectangles(rects: Iterable[tuple[int, int]]) -> YoungDiagram:
    rects = list(rects)
    for a, b in rects:
        if a < 1 or b < 1:
            raise InvalidInput(f"rectangle sides must be positive, got {(a, b)}")
    height = max((b for _, b in rects), default=0)
    return YoungDiagram(
        tuple(max(a for a, b in rects if b > j) for j in range(height))
    )


def reduce_down(x: YoungDiagram, k: int) -> YoungDiagram:
    """Drop the ``k`` bottom rows."""
    if k < 0:
        raise InvalidInput("k must be nonnegative")
    return YoungDiagram(x.rows[k:])


def reduce_left(x: YoungDiagram, k: int) -> YoungDiagram:
    """Drop the ``k`` leftmost columns."""
    if k < 0:
        raise InvalidInput("k must be nonnegative")
    return YoungDiagram.from_rows(max(0, r - k) for r in x.rows)


def shift_diag(x: YoungDiagram, k: int) -> YoungDiagram:
    return reduce_down(reduce_left(x, k), k)


def min_plus(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """Min-plus convolution of two finitely supported profiles, zero-extended.

    The result has ``len(f) + len(g)`` entries; every later entry is 0.
    """
    n = len(f) + len(g)
    ff = list(f) + [0] * (n - len(f))
    gg = list(g) + [0] * (n - len(g))
    return [min(ff[i1] + gg[i - i1] for i1 in range(i + 1)) for i in range(n)]


def boxplus(x: YoungDiagram, y: YoungDiagram) -> YoungDiagram:
    """Infimal sum: complement of the Minkowski sum of the complements."""
    return YoungDiagram.from_columns(min_plus(x.cols, y.cols))


def boxminus(z: YoungDiagram, y: YoungDiagram) -> YoungDiagram:
    """Infimal difference: the least diagram ``x`` with ``z <= boxplus(x, y)``."""
    cz, cy = z.cols, y.cols
    out = []
    for i in range(len(cz)):
        best = 0
        for i2 in range(len(cz) - i):
            best = max(best, cz[i + i2] - (cy[i2] if i2 < len(cy) else 0))
        out.append(best)
    return YoungDiagram.from_columns(out)


def largest_square(z: YoungDiagram) -> int:
    s = 0
    while s < len(z.rows) and z.rows[s] >= s + 1:
        s += 1
    return s


def staircase(a: int, b: int, k: int) -> YoungDiagram:
    """S_{a,b,k} = {(i, j): i // b + j // a <= k - 1}."""
    if a < 1 or b < 1 or k < 1:
        raise InvalidInput(f"staircase parameters must be positive, got {(a, b, k)}")
    return YoungDiagram(tuple(b * (k - j // a) for j in range(a * k)))


def threshold(theta: int) -> YoungDiagram:
    """Zero-set of threshold growth, {(u, v): u + v <= theta - 1}."""
    if theta < 0:
        raise InvalidInput("threshold must be nonnegative")
    return staircase(1, 1, theta) if theta else EMPTY


def all_diagrams_in(m: int, n: int) -> Iterator[YoungDiagram]:
    """Every Young diagram inside R_{m,n}, the empty one included."""
    if m == 0 or n == 0:
        yield EMPTY
        return
    yield from rectangle(m, n).sub_diagrams()


def parse_diagram(text: str) -> YoungDiagram:
    """Parse ``"4 3 1"`` (bottom row first) or ``"empty"``."""
    body = text.strip()
    if body.lower() in ("empty", ""):
        return EMPTY
    try:
        rows = tuple(int(tok) for tok in body.replace(",", " ").split())
    except ValueError as exc:
        raise InvalidInput(f"malformed diagram: {text!r}") from exc
    return YoungDiagram(rows)


def format_diagram(z: YoungDiagram) -> str:
    return " ".join(map(str, z.rows)) if z.rows else "empty"
