"""Extremal spanning times: exact enhanced maximum and certified lower bounds.

The enhanced maximum is exact: it suffices to scan row diagrams ``R``
inside the zero-set, each paired with its least spanning partner
``Z boxminus R``.  The thin-set and general maxima range over unbounded
families, so the searches here only ever certify lower bounds; they are
reported next to the proven upper bounds.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import Callable, Optional, Sequence

from hamgrowth.enhanced import EnhancementPair, spans_by_containment, tau_en
from hamgrowth.errors import Inconsistency, InvalidInput
from hamgrowth.regular import init_state, iterate, spanning_time
from hamgrowth.thin import (
    ThinSetSpec,
    iter_specs,
    standard_arrangement,
    thin_spanning_time,
)
from hamgrowth.young import (
    YoungDiagram,
    boxminus,
    largest_square,
    reduce_down,
    reduce_left,
    staircase,
)

Site = tuple[int, int]

EXHAUSTIVE_LIMIT = 16


def general_upper(z: YoungDiagram) -> int:
    """2mn + 5 for the bounding rectangle R_{m,n} of ``z``."""
    return 2 * z.width * z.height + 5


def en_upper(z: YoungDiagram) -> int:
    return 4 * largest_square(z) + 1


def th_upper(z: YoungDiagram) -> int:
    return 8 * largest_square(z) + 2


def en_lower(z: YoungDiagram) -> int:
    return math.isqrt(largest_square(z) - 1) + 1 if largest_square(z) else 0


def th_lower(z: YoungDiagram) -> Optional[int]:
    s = largest_square(z)
    if s < 1:
        return None
    return math.isqrt(s - 2) + 1 if s > 1 else 0


def best_of(items: Sequence, score: Callable, workers: int = 1) -> tuple[int, Optional[int]]:
    """Deterministic max-reduction: (index, value) of the first maximal score.

    ``score`` returns an int or ``None`` (not a candidate).  The result does
    not depend on ``workers``; scores are merged in candidate order.
    """
    if workers > 1 and len(items) > 1:
        chunk = max(1, len(items) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(score, items, chunksize=chunk))
    else:
        values = [score(item) for item in items]
    best_i, best_v = -1, None
    for i, v in enumerate(values):
        if v is not None and (best_v is None or v > best_v):
            best_i, best_v = i, v
    return best_i, best_v


# exact enhanced maximum


def _score_reduced(z: YoungDiagram, row_shape: YoungDiagram) -> int:
    e = EnhancementPair.from_diagrams(row_shape, boxminus(z, row_shape))
    if not spans_by_containment(z, e):
        raise Inconsistency(f"least partner of {row_shape} does not span {z}")
    run = tau_en(z, e)
    if not run.spans:
        raise Inconsistency(f"containment says {e} spans {z}, simulation fixates")
    return run.time


def _score_pair(z: YoungDiagram, pair: tuple[YoungDiagram, YoungDiagram]) -> Optional[int]:
    e = EnhancementPair.from_diagrams(*pair)
    run = tau_en(z, e)
    if run.spans != spans_by_containment(z, e):
        raise Inconsistency(f"containment and simulation disagree for {e} on {z}")
    return run.tau


@dataclass(frozen=True)
class MuEnResult:
    value: int
    witness: EnhancementPair
    candidates: int


@lru_cache(maxsize=None)
def _mu_en_cached(z: YoungDiagram, full: bool) -> MuEnResult:
    return _mu_en(z, full, 1)


def _mu_en(z: YoungDiagram, full: bool, workers: int) -> MuEnResult:
    subs = list(z.sub_diagrams())
    if full:
        items = [(r, c) for r in subs for c in subs]
        i, v = best_of(items, partial(_score_pair, z), workers)
        witness = EnhancementPair.from_diagrams(*items[i])
    else:
        i, v = best_of(subs, partial(_score_reduced, z), workers)
        witness = EnhancementPair.from_diagrams(subs[i], boxminus(z, subs[i]))
    if not en_lower(z) <= v <= en_upper(z):
        raise Inconsistency(f"mu_en({z}) = {v} outside [{en_lower(z)}, {en_upper(z)}]")
    return MuEnResult(v, witness, len(items) if full else len(subs))


def mu_en_exact(z: YoungDiagram, full: bool = False, workers: int = 1) -> MuEnResult:
    """Maximum enhanced spanning time over all finite-support enhancements.

    With ``full`` every pair of sub-diagrams is scanned instead of the
    reduced family; both must give the same value.
    """
    if workers == 1:
        return _mu_en_cached(z, full)
    return _mu_en(z, full, workers)


# thin-set search


@dataclass(frozen=True)
class ThinCaps:
    max_entry: int
    max_len: int = 4
    max_w: int = 4

    @classmethod
    def default(cls, z: YoungDiagram) -> "ThinCaps":
        return cls(max(z.width, z.height) + 1, 4, 4)


@dataclass
class ThinSearchResult:
    best: Optional[int]
    witness: Optional[ThinSetSpec]
    candidates: int
    upper: int
    violations: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.best is not None


def mu_th_search(
    z: YoungDiagram,
    caps: Optional[ThinCaps] = None,
    seeds: Sequence[ThinSetSpec] = (),
    workers: int = 1,
    checks: Sequence[Callable] = (),
) -> ThinSearchResult:
    """Slowest spanning standard-arrangement thin set within ``caps``.

    ``seeds`` are extra specs (outside the caps) evaluated first.  Each
    ``checks`` callable is applied to the states of every candidate run.
    """
    caps = caps or ThinCaps.default(z)
    specs = list(seeds) + list(iter_specs(caps.max_entry, caps.max_len, caps.max_w))
    i, v = best_of(specs, partial(thin_spanning_time, z), workers)
    result = ThinSearchResult(v, specs[i] if v is not None else None, len(specs), th_upper(z))
    for spec in specs if checks else ():
        states, _, _ = iterate(init_state(standard_arrangement(spec)), z)
        for check in checks:
            result.violations.extend(f"{spec}: {msg}" for msg in check(states))
    return result


# general search over a window


def window_candidates(width: int, height: int, max_sites: Optional[int] = None) -> list[tuple[Site, ...]]:
    """One subset of the window per row/column-permutation class.

    Keeps the subsets whose rows and columns are both lexicographically
    non-increasing; every class contains at least one such subset because
    alternately sorting rows and columns strictly increases the row-major
    reading until both are sorted.
    """
    if width * height > EXHAUSTIVE_LIMIT:
        raise InvalidInput(
            f"window {width}x{height} too large for exhaustive search; use heuristic mode"
        )
    if max_sites is None:
        max_sites = width * height
    out = []
    top = 1 << width

    def rec(y: int, cap: int, rows: list[int]):
        if y == height:
            cols = [
                sum(((rows[yy] >> (width - 1 - x)) & 1) << (height - 1 - yy) for yy in range(height))
                for x in range(width)
            ]
            if all(a >= b for a, b in zip(cols, cols[1:])):
                sites = tuple(
                    (x, yy)
                    for yy in range(height)
                    for x in range(width)
                    if rows[yy] >> (width - 1 - x) & 1
                )
                if len(sites) <= max_sites:
                    out.append(sites)
            return
        for p in range(cap, -1, -1):
            rows.append(p)
            rec(y + 1, p, rows)
            rows.pop()

    rec(0, top - 1, [])
    return out


@dataclass
class MuSearchResult:
    best: Optional[int]
    witness: Optional[tuple[Site, ...]]
    candidates: int
    exhaustive: bool
    violations: list[str] = field(default_factory=list)


def _checked_time(z: YoungDiagram, sites: tuple[Site, ...]) -> Optional[int]:
    tau = spanning_time(z, sites)
    if tau is not None and tau > general_upper(z):
        raise Inconsistency(f"{sites} spans {z} in {tau} > 2mn+5 = {general_upper(z)}")
    return tau


def mu_search(
    z: YoungDiagram,
    window: tuple[int, int],
    max_sites: Optional[int] = None,
    heuristic: Optional[bool] = None,
    restarts: int = 200,
    seed: int = 0,
    checks: Sequence[Callable] = (),
    workers: int = 1,
) -> MuSearchResult:
    """Slowest spanning set found inside a ``width x height`` window.

    Exhaustive (up to row/column permutation) when the window has at most
    16 sites, otherwise random restarts with single-site hill climbing.
    Each ``checks`` callable receives the states of every spanning
    candidate and returns violations, which are collected.
    """
    width, height = window
    if width < 1 or height < 1:
        raise InvalidInput("window sides must be positive")
    if heuristic is None:
        heuristic = width * height > EXHAUSTIVE_LIMIT
    if not heuristic:
        cands = window_candidates(width, height, max_sites)
        i, v = best_of(cands, partial(_checked_time, z), workers)
        result = MuSearchResult(v, cands[i] if v is not None else None, len(cands), True)
        if checks:
            for sites in cands:
                states, spans, _ = iterate(init_state(sites), z)
                if spans:
                    for check in checks:
                        result.violations.extend(f"{sites}: {msg}" for msg in check(states))
        return result
    return _hill_climb(z, width, height, max_sites, restarts, seed)


def _hill_climb(z, width, height, max_sites, restarts, seed) -> MuSearchResult:
    rng = random.Random(seed)
    cells = [(x, y) for y in range(height) for x in range(width)]
    limit = max_sites if max_sites is not None else len(cells)
    best: tuple[Optional[int], Optional[tuple[Site, ...]]] = (None, None)
    evaluated = 0

    def score(s: frozenset) -> Optional[int]:
        nonlocal evaluated
        evaluated += 1
        return _checked_time(z, tuple(sorted(s)))

    for _ in range(restarts):
        size = rng.randint(0, limit)
        cur = frozenset(rng.sample(cells, size))
        cur_t = score(cur)
        improved = True
        while improved:
            improved = False
            for cell in rng.sample(cells, len(cells)):
                nxt = cur ^ {cell}
                if len(nxt) > limit:
                    continue
                t = score(nxt)
                if t is not None and (cur_t is None or t > cur_t):
                    cur, cur_t, improved = nxt, t, True
        if cur_t is not None and (best[0] is None or cur_t > best[0]):
            best = (cur_t, tuple(sorted(cur)))
    return MuSearchResult(best[0], best[1], evaluated, False)


# slope lower bounds


@dataclass(frozen=True)
class RatSlope:
    bound: int
    witness: Site
    k: int
    a: int
    b: int


def ratslope_bound(z: YoungDiagram, a: int, b: int) -> RatSlope:
    """Lower bound on the enhanced maximum from the line ``a x + b y``.

    ``k`` is least with ``a i + b j < k a b`` on ``z``; among sites of ``z``
    with ``a i + b j >= (k-1) a b`` the best ``min(ceil((i+1)/b),
    ceil((j+1)/a))`` is returned, ties to the lexicographically least site.
    """
    if a < 1 or b < 1:
        raise InvalidInput("slope parameters must be positive")
    if not z:
        raise InvalidInput("zero-set must be nonempty")
    ab = a * b
    k = max(a * i + b * j for i, j in z.cells()) // ab + 1
    best: Optional[tuple[int, Site]] = None
    for i, j in sorted(z.cells()):
        if a * i + b * j >= (k - 1) * ab:
            val = min(-(-(i + 1) // b), -(-(j + 1) // a))
            if best is None or val > best[0]:
                best = (val, (i, j))
    assert best is not None
    return RatSlope(best[0], best[1], k, a, b)


def ratslope_enhancements(z: YoungDiagram, rs: RatSlope) -> EnhancementPair:
    """Staircase enhancements behind a slope bound; they span ``z``."""
    i0, j0 = rs.witness
    k1 = -(-(i0 + 1) // rs.b)
    k2 = -(-(j0 + 1) // rs.a)
    return EnhancementPair.from_diagrams(staircase(rs.a, rs.b, k1), staircase(rs.a, rs.b, k2))


def ratslope_best(z: YoungDiagram, max_ab: int) -> RatSlope:
    best = None
    for a in range(1, max_ab + 1):
        for b in range(1, max_ab + 1):
            rs = ratslope_bound(z, a, b)
            if best is None or rs.bound > best.bound:
                best = rs
    return best


def _equal_runs(lengths: Sequence[int], floor: int) -> list[tuple[int, int, int]]:
    """(length, run size, number of longer lines) for runs with length >= floor."""
    out = []
    p = 0
    while p < len(lengths) and lengths[p] >= floor:
        q = p
        while q < len(lengths) and lengths[q] == lengths[p]:
            q += 1
        out.append((lengths[p], q - p, p))
        p = q
    return out


def lift(e: EnhancementPair, rows_added: int, cols_added: int, side: int) -> EnhancementPair:
    """Raise row enhancements by ``rows_added`` and column ones by
    ``cols_added`` on the first ``side`` lines.

    A run with enhancements ``e`` on ``Z`` shifted left by ``rows_added``
    and down by ``cols_added`` matches the lifted run on ``Z``.
    """
    r = [(e.r[j] if j < len(e.r) else 0) + rows_added for j in range(side)]
    c = [(e.c[i] if i < len(e.c) else 0) + cols_added for i in range(side)]
    return EnhancementPair(tuple(r), tuple(c))


def general_lb_witness(z: YoungDiagram) -> EnhancementPair:
    """Enhancements spanning ``z`` in at least ``sqrt(s)`` steps.

    Few repeated long rows: the rows of ``z`` alone are slow.  Few repeated
    long columns: likewise with columns.  Otherwise strip the longer rows
    and columns, use the unit-slope staircase pair on what remains and
    lift it back.  Ties between equally long runs are all tried.
    """
    if not z:
        raise InvalidInput("zero-set must be nonempty")
    s = largest_square(z)
    root = math.sqrt(s)
    row_runs = _equal_runs(z.rows, s)
    col_runs = _equal_runs(z.cols, s)
    k_r = max(size for _, size, _ in row_runs)
    k_c = max(size for _, size, _ in col_runs)
    if k_r < root:
        return _certified(z, EnhancementPair.from_diagrams(z, YoungDiagram()))
    if k_c < root:
        return _certified(z, EnhancementPair.from_diagrams(YoungDiagram(), z))
    best: Optional[tuple[int, EnhancementPair]] = None
    for _, size_r, d_r in row_runs:
        if size_r != k_r:
            continue
        for _, size_c, d_c in col_runs:
            if size_c != k_c:
                continue
            inner = reduce_down(reduce_left(z, d_c), d_r)
            if not inner:
                continue
            e = ratslope_enhancements(inner, ratslope_bound(inner, 1, 1))
            side = max(z.width, z.height, len(e.r), len(e.c)) + 1
            lifted = lift(e, d_c, d_r, side)
            while not spans_by_containment(z, lifted):
                side += 1
                lifted = lift(e, d_c, d_r, side)
            tau = tau_en(z, lifted).time
            if best is None or tau > best[0]:
                best = (tau, lifted)
    if best is None:
        # every reduction is empty (hooks with s = 1); any spanning pair will do
        return _certified(z, EnhancementPair.from_diagrams(z, YoungDiagram()))
    return _certified(z, best[1])


def _certified(z: YoungDiagram, e: EnhancementPair) -> EnhancementPair:
    tau = tau_en(z, e).tau
    if tau is None or tau < en_lower(z):
        raise Inconsistency(f"witness {e} for {z} gives {tau} < {en_lower(z)}")
    return e


# reports


def rectangle_formula(z: YoungDiagram) -> Optional[int]:
    """Closed-form maximal spanning time when ``z`` is a rectangle R_{m,n}."""
    m, n = z.width, z.height
    if not z or z.size != m * n:
        return None
    return 2 * n - 1 if m == n else 2 * min(m, n)


@dataclass
class BoundsReport:
    zero_set: YoungDiagram
    mu_en: Optional[MuEnResult] = None
    ratslope: Optional[RatSlope] = None
    general_witness: Optional[EnhancementPair] = None
    general_witness_tau: Optional[int] = None
    thin: Optional[ThinSearchResult] = None
    search: Optional[MuSearchResult] = None

    @property
    def m(self) -> int:
        return self.zero_set.width

    @property
    def n(self) -> int:
        return self.zero_set.height

    @property
    def s(self) -> int:
        return largest_square(self.zero_set)

    def chain_violations(self) -> list[str]:
        """Every lower <= value <= upper comparison whose two sides are known."""
        z = self.zero_set
        pairs = []
        if self.mu_en is not None:
            v = self.mu_en.value
            pairs += [("mu_en_lower", en_lower(z), "mu_en_exact", v),
                      ("mu_en_exact", v, "mu_en_upper", en_upper(z))]
            if self.ratslope is not None:
                pairs.append(("ratslope_lower", self.ratslope.bound, "mu_en_exact", v))
            if self.general_witness_tau is not None:
                pairs.append(("general_witness_tau", self.general_witness_tau, "mu_en_exact", v))
            if self.thin is not None and self.thin.found:
                pairs.append(("mu_th_best_found", self.thin.best, "2*mu_en_exact", 2 * v))
        if self.thin is not None and self.thin.found:
            pairs.append(("mu_th_best_found", self.thin.best, "mu_th_upper", th_upper(z)))
        if self.search is not None and self.search.best is not None:
            pairs.append(("mu_best_found", self.search.best, "mu_upper_general", general_upper(z)))
            formula = rectangle_formula(z)
            if formula is not None:
                pairs.append(("mu_best_found", self.search.best, "mu_formula", formula))
        return [f"{a} = {x} > {b} = {y}" for a, x, b, y in pairs if x > y]

    def items(self) -> list[tuple[str, object]]:
        z = self.zero_set
        out: list[tuple[str, object]] = [
            ("zeroset", " ".join(map(str, z.rows)) or "empty"),
            ("m", self.m),
            ("n", self.n),
            ("s", self.s),
            ("mu_upper_general", general_upper(z)),
            ("mu_en_upper", en_upper(z)),
            ("mu_th_upper", th_upper(z)),
            ("mu_en_lower", en_lower(z)),
            ("mu_th_lower", th_lower(z)),
        ]
        if rectangle_formula(z) is not None:
            out.append(("mu_formula", rectangle_formula(z)))
        if self.ratslope is not None:
            rs = self.ratslope
            out += [("ratslope_lower", rs.bound), ("ratslope_witness", f"a={rs.a} b={rs.b} k={rs.k} site={rs.witness[0]},{rs.witness[1]}")]
        if self.general_witness is not None:
            out += [("general_witness", str(self.general_witness)), ("general_witness_tau", self.general_witness_tau)]
        if self.mu_en is not None:
            out += [("mu_en_exact", self.mu_en.value), ("mu_en_witness", str(self.mu_en.witness))]
        if self.thin is not None:
            out += [("mu_th_best_found", self.thin.best), ("mu_th_witness", str(self.thin.witness) if self.thin.witness else None)]
        if self.search is not None:
            wit = self.search.witness
            out += [("mu_best_found", self.search.best),
                    ("mu_witness", "; ".join(f"{x} {y}" for x, y in wit) if wit is not None else None)]
        bad = self.chain_violations()
        out.append(("chain", "ok" if not bad else "; ".join(bad)))
        return out


def bounds(
    z: YoungDiagram,
    exact: bool = True,
    thin_caps: Optional[ThinCaps] = None,
    window: Optional[tuple[int, int]] = None,
    max_ab: int = 3,
    workers: int = 1,
) -> BoundsReport:
    """Assemble closed-form bounds, exact mu_en and certified search results."""
    report = BoundsReport(z)
    if exact:
        report.mu_en = mu_en_exact(z, workers=workers)
    if z:
        report.ratslope = ratslope_best(z, max_ab)
        report.general_witness = general_lb_witness(z)
        report.general_witness_tau = tau_en(z, report.general_witness).tau
    if thin_caps is not None:
        report.thin = mu_th_search(z, thin_caps, workers=workers)
    if window is not None:
        report.search = mu_search(z, window, workers=workers)
    return report
