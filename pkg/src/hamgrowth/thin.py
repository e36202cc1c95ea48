"""Thin initial sets, their standard arrangement and witness constructions.

A thin set has every site alone in its row or alone in its column.  Up to
permuting rows and columns it is described by the multiset of row counts
of size at least 2 (``rvec``), the same for columns (``cvec``), and the
number ``w`` of isolated sites.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from hamgrowth.enhanced import EnhancementPair, spans_by_containment
from hamgrowth.regular import spanning_time
from hamgrowth.errors import InvalidInput
from hamgrowth.young import YoungDiagram, rectangle, reduce_down, reduce_left, shift_diag

Site = tuple[int, int]
SiteSet = frozenset


@dataclass(frozen=True)
class ThinSetSpec:
    rvec: tuple[int, ...] = ()
    cvec: tuple[int, ...] = ()
    w: int = 0

    def __post_init__(self):
        rvec = tuple(int(x) for x in self.rvec)
        cvec = tuple(int(x) for x in self.cvec)
        for name, vec in (("rvec", rvec), ("cvec", cvec)):
            if any(x < 2 for x in vec):
                raise InvalidInput(f"{name} entries must be at least 2: {vec}")
            if any(a < b for a, b in zip(vec, vec[1:])):
                raise InvalidInput(f"{name} must be weakly decreasing: {vec}")
        if self.w < 0:
            raise InvalidInput("w must be nonnegative")
        object.__setattr__(self, "rvec", rvec)
        object.__setattr__(self, "cvec", cvec)

    @property
    def frame(self) -> tuple[int, int]:
        """(width, height) of the rectangle holding the standard arrangement."""
        width = len(self.cvec) + self.w + sum(self.rvec)
        height = len(self.rvec) + self.w + sum(self.cvec)
        return width, height

    def transpose(self) -> "ThinSetSpec":
        return ThinSetSpec(self.cvec, self.rvec, self.w)

    def __str__(self) -> str:
        return format_thin_spec(self)


def standard_arrangement(spec: ThinSetSpec) -> SiteSet:
    """The diagonal chain from the top-left to the bottom-right of the frame.

    Vertical blocks of ``cvec`` sizes come first (largest at column 0), then
    the isolated sites, then horizontal blocks ending with the largest in
    row 0.
    """
    _, height = spec.frame
    x, y = 0, height - 1
    out = []
    for cv in spec.cvec:
        out.extend((x, y - k) for k in range(cv))
        x += 1
        y -= cv
    for _ in range(spec.w):
        out.append((x, y))
        x += 1
        y -= 1
    for rv in reversed(spec.rvec):
        out.extend((x + k, y) for k in range(rv))
        x += rv
        y -= 1
    assert y == -1 and x == spec.frame[0]
    return frozenset(out)


def _line_counts(sites: Iterable[Site]) -> tuple[Counter, Counter]:
    rows = Counter(y for _, y in sites)
    cols = Counter(x for x, _ in sites)
    return rows, cols


def is_thin(sites: Iterable[Site]) -> bool:
    sites = set(sites)
    rows, cols = _line_counts(sites)
    return all(rows[y] == 1 or cols[x] == 1 for x, y in sites)


def canonicalize(sites: Iterable[Site]) -> ThinSetSpec:
    sites = set(sites)
    if not is_thin(sites):
        raise InvalidInput("set is not thin")
    rows, cols = _line_counts(sites)
    rvec = sorted((k for k in rows.values() if k >= 2), reverse=True)
    cvec = sorted((k for k in cols.values() if k >= 2), reverse=True)
    w = sum(1 for x, y in sites if rows[y] == 1 and cols[x] == 1)
    return ThinSetSpec(tuple(rvec), tuple(cvec), w)


def standard_violations(sites: Iterable[Site]) -> list[str]:
    """Failures of the two defining properties of the standard arrangement."""
    sites = set(sites)
    out = []
    rows, cols = _line_counts(sites)
    top = max((y for _, y in sites), default=-1)
    right = max((x for x, _ in sites), default=-1)
    rc = [rows[y] for y in range(top + 1)]
    cc = [cols[x] for x in range(right + 1)]
    if any(a < b for a, b in zip(rc, rc[1:])):
        out.append(f"row counts not weakly decreasing: {rc}")
    if any(a < b for a, b in zip(cc, cc[1:])):
        out.append(f"column counts not weakly decreasing: {cc}")
    for p, q in itertools.permutations(sites, 2):
        if p[0] <= q[0] and p[1] <= q[1] and p[0] != q[0] and p[1] != q[1]:
            out.append(f"{p} below {q} off a common line")
    return out


def iter_specs(max_entry: int, max_len: int, max_w: int) -> Iterator[ThinSetSpec]:
    """Every spec with entries in ``[2, max_entry]``, vectors of length
    at most ``max_len`` and ``w <= max_w``, in a fixed order."""
    values = list(range(max_entry, 1, -1))
    vecs = [()]
    for length in range(1, max_len + 1):
        vecs.extend(itertools.combinations_with_replacement(values, length))
    for rvec in vecs:
        for cvec in vecs:
            for w in range(max_w + 1):
                yield ThinSetSpec(rvec, cvec, w)


def thin_spanning_time(z: YoungDiagram, spec: ThinSetSpec) -> Optional[int]:
    return spanning_time(z, standard_arrangement(spec))


def witness_rectangle(m: int, n: int) -> ThinSetSpec:
    """Thin set spanning R_{m,n} as slowly as the closed form allows.

    For ``m != n`` the construction spans in ``2 * min(m, n)`` steps.  For
    ``m == n`` no explicit vectors are available, so small specs are
    searched for one spanning in ``2n - 1`` steps; failing that (which
    happens for ``n == 1``) the slowest spec found is returned.
    """
    if m < 1 or n < 1:
        raise InvalidInput("rectangle sides must be positive")
    if m > n:
        return ThinSetSpec(tuple(range(m - 1, 1, -1)), tuple(range(n, 1, -1)), 2)
    if m < n:
        return witness_rectangle(n, m).transpose()
    spec, _ = search_square_witness(n)
    return spec


def search_square_witness(n: int, max_w: int = 4) -> tuple[ThinSetSpec, int]:
    """First spec (in ``iter_specs`` order) spanning R_{n,n} in exactly ``2n - 1``.

    Returns ``(spec, tau)``; if the target is never hit, the slowest
    spanning spec within the caps is returned instead.
    """
    z = rectangle(n, n)
    target = 2 * n - 1
    best: tuple[Optional[ThinSetSpec], int] = (None, -1)
    for spec in iter_specs(n + 1, n, max_w):
        tau = thin_spanning_time(z, spec)
        if tau is None:
            continue
        if tau == target:
            return spec, tau
        if tau > best[1]:
            best = (spec, tau)
    return best


def l_shape(a: int, b: int, c: int, d: int) -> YoungDiagram:
    if not (a > c >= 1 and d > b >= 1):
        raise InvalidInput(f"not an L-shape: need a > c >= 1 and d > b >= 1, got {(a, b, c, d)}")
    return YoungDiagram((a,) * b + (c,) * (d - b))


def witness_L(a: int, b: int, c: int, d: int) -> tuple[YoungDiagram, ThinSetSpec, int]:
    """Lower-bound witness for Z = R_{a,b} u R_{c,d}.

    Returns ``(zero_set, spec, claimed_tau)`` where ``zero_set`` is the
    shifted zero-set the spec is run on.  With ``b <= c``: if ``d - b > c``
    the zero-set drops its ``b`` bottom rows and becomes a rectangle;
    otherwise it drops ``c - b`` left columns and a thin chain with
    ``n = max(a - c + b, d)`` is used.  ``b > c`` is handled by transposing.
    """
    z = l_shape(a, b, c, d)
    if b > c:
        zt, spec, tau = witness_L(d, c, b, a)
        return zt.transpose(), spec.transpose(), tau
    if d - b > c:
        shifted = reduce_down(z, b)
        return shifted, witness_rectangle(c, d - b), 2 * c
    shifted = reduce_left(z, c - b)
    top = max(a - c + b, d)
    spec = ThinSetSpec(tuple(range(top - 1, 1, -1)), tuple(range(b, 1, -1)), 2)
    tau = 2 * b + 1 if a - c + b >= d else 2 * b
    return shifted, spec, tau


def thin_to_enhancements(sites: Iterable[Site]) -> EnhancementPair:
    """Row and column counts of a standard-arrangement thin set as enhancements."""
    sites = set(sites)
    if not is_thin(sites):
        raise InvalidInput("set is not thin")
    bad = standard_violations(sites)
    if bad:
        raise InvalidInput(f"set is not in standard arrangement: {bad[0]}")
    rows, cols = _line_counts(sites)
    top = max((y for _, y in sites), default=-1)
    right = max((x for x, _ in sites), default=-1)
    return EnhancementPair(
        tuple(rows[y] for y in range(top + 1)),
        tuple(cols[x] for x in range(right + 1)),
    )


def enhancements_to_thin(e: EnhancementPair, z: YoungDiagram) -> SiteSet:
    """Thin set whose regular run from ``z`` is no faster than ``e`` on ``z`` shifted.

    ``e`` must span for the diagonal shift of ``z``.  Each enhancement is
    raised by one and padded with ones up to a square frame of side ``N``
    that holds both ``z`` and R_{M0+1, N0+1}.
    """
    inner = shift_diag(z, 1)
    if not spans_by_containment(inner, e):
        raise InvalidInput("enhancements do not span for the shifted zero-set")
    n0, m0 = e.n_rows, e.n_cols
    side = max(m0 + 1, n0 + 1, z.width, z.height)
    spec = ThinSetSpec(
        tuple(x + 1 for x in e.r),
        tuple(x + 1 for x in e.c),
        side - n0 + side - m0,
    )
    return standard_arrangement(spec)


def parse_thin_spec(text: str) -> ThinSetSpec:
    """Parse ``"r: 4 2 / c: 2 2 / w: 3"`` or the same on three lines."""
    parts = [p.strip() for chunk in text.splitlines() for p in chunk.split("/")]
    found: dict[str, str] = {}
    for part in parts:
        if not part or part.startswith("#"):
            continue
        key, sep, body = part.partition(":")
        key = key.strip().lower()
        if not sep or key not in ("r", "c", "w") or key in found:
            raise InvalidInput(f"malformed thin-spec line: {part!r}")
        found[key] = body
    try:
        rvec = tuple(int(t) for t in found.get("r", "").split())
        cvec = tuple(int(t) for t in found.get("c", "").split())
        w = int(found.get("w", "0").strip() or 0)
    except ValueError as exc:
        raise InvalidInput(f"malformed thin spec: {text!r}") from exc
    return ThinSetSpec(rvec, cvec, w)


def format_thin_spec(spec: ThinSetSpec) -> str:
    r = " ".join(map(str, spec.rvec))
    c = " ".join(map(str, spec.cvec))
    return " / ".join(f"{k}: {v}".rstrip() for k, v in (("r", r), ("c", c), ("w", spec.w)))
