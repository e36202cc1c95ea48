"""Named audit families: every applicable inequality, as pass/fail lines.

Family names::

    all-MxN            every zero-set inside R_{M,N}
    rectangles-MxN     R_{m,n} for m <= M, n <= N
    l-shapes-K         L-shapes with a, d <= K
    thresholds-K       threshold zero-sets for theta <= K
    enhanced-random[-COUNT[-SEED]]
                       random (Z, R, C) inside R_{6,6}
    standard           the default instance of each family above
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from hamgrowth import checks
from hamgrowth.enhanced import (
    EnhancementPair,
    block_violations,
    distinct_nonzero,
    spans_by_containment,
    tau_en,
)
from hamgrowth.errors import InvalidInput
from hamgrowth.extremal import (
    en_lower,
    en_upper,
    general_lb_witness,
    mu_en_exact,
    mu_search,
    mu_th_search,
    ratslope_best,
    rectangle_formula,
    th_upper,
    window_candidates,
)
from hamgrowth.regular import init_state, iterate, spanning_time
from hamgrowth.thin import (
    enhancements_to_thin,
    l_shape,
    search_square_witness,
    thin_spanning_time,
    witness_L,
    witness_rectangle,
)
from hamgrowth.young import (
    YoungDiagram,
    all_diagrams_in,
    boxminus,
    format_diagram,
    largest_square,
    rectangle,
    reduce_down,
    reduce_left,
    shift_diag,
    threshold,
)

SEARCH_WINDOW = (4, 4)


@dataclass(frozen=True)
class AuditLine:
    family: str
    subject: str
    check: str
    ok: bool
    detail: str = ""

    def __str__(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{tag} {self.family} [{self.subject}] {self.check}{tail}"


@dataclass
class AuditResult:
    family: str
    lines: list[AuditLine] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(line.ok for line in self.lines)

    @property
    def failures(self) -> list[AuditLine]:
        return [line for line in self.lines if not line.ok]

    def summary(self) -> str:
        return f"audit {self.family}: {len(self.lines) - len(self.failures)}/{len(self.lines)} checks passed"


class _Recorder:
    def __init__(self, family: str, result: AuditResult, progress=None):
        self.family = family
        self.result = result
        self.progress = progress

    def __call__(self, subject: str, check: str, ok: bool, detail: str = "") -> bool:
        line = AuditLine(self.family, subject, check, bool(ok), detail)
        self.result.lines.append(line)
        if self.progress is not None:
            self.progress(line)
        return ok

    def violations(self, subject: str, check: str, found: list[str]) -> None:
        detail = f"{len(found)} violations, first: {found[0]}" if found else ""
        self(subject, check, not found, detail)


def _name(z: YoungDiagram) -> str:
    return format_diagram(z)


# families


def audit_all(rec: _Recorder, m: int, n: int) -> None:
    """Exact mu_en chain, reduction cross-check, thin bridge and thin search."""
    for z in all_diagrams_in(m, n):
        name = _name(z)
        s = largest_square(z)
        reduced = mu_en_exact(z)
        full = mu_en_exact(z, full=True)
        v = reduced.value
        rec(name, "ceil(sqrt s) <= mu_en <= 4s+1", en_lower(z) <= v <= en_upper(z),
            f"{en_lower(z)} <= {v} <= {en_upper(z)}")
        rec(name, "reduced enumeration = full-pair enumeration", v == full.value, f"{v} vs {full.value}")
        for label, w in (("<-1", reduce_left(z, 1)), ("v1", reduce_down(z, 1))):
            rec(name, f"mu_en(Z) >= mu_en(Z{label})", v >= mu_en_exact(w).value, f"{v} vs {mu_en_exact(w).value}")
        diag = mu_en_exact(shift_diag(z, 1)).value
        rec(name, "mu_en(Z) <= mu_en(Z shifted diagonally) + 2", v <= diag + 2, f"{v} vs {diag}+2")
        if z:
            rs = ratslope_best(z, 3)
            rec(name, "ratslope_best(Z,3) <= mu_en", rs.bound <= v, f"{rs.bound} vs {v}")
            e = general_lb_witness(z)
            t = tau_en(z, e).tau
            rec(name, "general witness tau_en >= sqrt s", t is not None and t >= math.sqrt(s), f"tau_en={t}")

        found: list[str] = []
        for r in z.sub_diagrams():
            e = EnhancementPair.from_diagrams(r, boxminus(z, r))
            tau, bad = checks.audit_enhanced(z, e)
            found.extend(f"{e}: {b}" for b in bad)
        rec.violations(name, "enhanced structure on reduced candidates", found)

        _bridge(rec, z, name)

        th = mu_th_search(z, checks=(checks.young_part_violations, checks.crosspoint_violations))
        if th.found:
            rec(name, "mu_th_found <= 8s+2", th.best <= th_upper(z), f"{th.best} <= {th_upper(z)}")
            rec(name, "mu_th_found <= 2 mu_en", th.best <= 2 * v, f"{th.best} <= {2 * v}")
        rec.violations(name, "thin runs: Young part and crosspoint", th.violations)


def _bridge(rec: _Recorder, z: YoungDiagram, name: str) -> None:
    """Thin sets built from enhancements for the diagonal shift are no faster."""
    inner = shift_diag(z, 1)
    subs = list(inner.sub_diagrams())
    bad, agree, structure = [], [], []
    count = 0
    for r in subs:
        for c in subs:
            e = EnhancementPair.from_diagrams(r, c)
            if not spans_by_containment(inner, e):
                continue
            count += 1
            sites = enhancements_to_thin(e, z)
            t_en = tau_en(inner, e).time
            states, spans, t = iterate(init_state(sites), z)
            if not spans or t < t_en:
                bad.append(f"{e}: tau={t if spans else None} < tau_en={t_en}")
            structure.extend(checks.young_part_violations(states))
            structure.extend(checks.crosspoint_violations(states))
            agree.extend(f"{e}: {msg}" for msg in checks.thin_enhanced_agreement(z, sites))
    rec.violations(name, f"thin bridge tau(Z,A) >= tau_en on {count} pairs", bad)
    rec.violations(name, "thin bridge runs: Young part and crosspoint", structure)
    rec.violations(name, "thin and enhanced runs agree below the set", agree)


def audit_rectangles(rec: _Recorder, big_m: int, big_n: int) -> None:
    cands = window_candidates(*SEARCH_WINDOW)
    for m in range(1, big_m + 1):
        for n in range(1, big_n + 1):
            z = rectangle(m, n)
            name = f"R_{m},{n}"
            formula = rectangle_formula(z)
            if m != n:
                spec = witness_rectangle(m, n)
                t = thin_spanning_time(z, spec)
                rec(name, "witness spans in exactly 2 min(m,n)", t == formula, f"{spec}: tau={t}, formula={formula}")
            else:
                spec, t = search_square_witness(n)
                rec(name, "searched witness spans in exactly 2n-1", t == formula, f"{spec}: tau={t}, formula={formula}")
            _window_scan(rec, z, name, cands, formula, "formula", checks.line_growth_violations,
                         "a line filled in one step has a crossing line filled the step before")


def _window_scan(rec, z, name, cands, cap, cap_name, growth_check, growth_label) -> None:
    upper = 2 * z.width * z.height + 5
    worst, worst_sites = -1, None
    growth: list[str] = []
    cross: list[str] = []
    for sites in cands:
        states, spans, t = iterate(init_state(sites), z)
        if not spans:
            continue
        if t > worst:
            worst, worst_sites = t, sites
        growth.extend(f"{sites}: {msg}" for msg in growth_check(states))
        cross.extend(f"{sites}: {msg}" for msg in checks.crosspoint_violations(states))
    detail = f"best {worst} at {list(worst_sites)}" if worst_sites is not None else "none spans"
    w, h = SEARCH_WINDOW
    rec(name, f"{w}x{h} window search <= {cap_name} = {cap}", worst <= cap, detail)
    rec(name, f"{w}x{h} window search <= 2mn+5 = {upper}", worst <= upper, detail)
    rec.violations(name, f"window runs: {growth_label}", growth)
    rec.violations(name, "window runs: crosspoint", cross)


def audit_lshapes(rec: _Recorder, k: int) -> None:
    cands = window_candidates(*SEARCH_WINDOW)
    for a in range(2, k + 1):
        for c in range(1, a):
            for d in range(2, k + 1):
                for b in range(1, d):
                    z = l_shape(a, b, c, d)
                    name = f"L a={a} b={b} c={c} d={d}"
                    shifted, spec, claimed = witness_L(a, b, c, d)
                    t = thin_spanning_time(shifted, spec)
                    low = 2 * min(b, c)
                    rec(name, "witness tau >= 2 min(b,c)", t is not None and t >= low,
                        f"{spec} on {_name(shifted)}: tau={t}, claimed={claimed}")
                    _window_scan(rec, z, name, cands, 2 * (b + c), "2(b+c)", checks.l_growth_violations,
                                 "a new line is covered every two steps")


def audit_thresholds(rec: _Recorder, k: int) -> None:
    """Reports mu_en and the search value next to the theta window."""
    cands = window_candidates(*SEARCH_WINDOW)
    for theta in range(1, k + 1):
        z = threshold(theta)
        name = f"theta={theta}"
        v = mu_en_exact(z).value
        rec(name, "ceil(sqrt s) <= mu_en <= 4s+1", en_lower(z) <= v <= en_upper(z), f"mu_en={v}")
        best = max((t for t in map(lambda a: spanning_time(z, a), cands) if t is not None), default=None)
        hi = 2 * theta * theta + 5
        rec(name, "window search <= 2 theta^2 + 5", best is None or best <= hi,
            f"best found {best}; window [{theta + 1}, {hi}]")


def audit_enhanced_random(rec: _Recorder, count: int, seed: int) -> None:
    rng = random.Random(seed)
    mismatch, bound, blocks, structure = [], [], [], []
    spanning = 0
    for _ in range(count):
        z, r, c = (random_diagram(rng, 6, 6) for _ in range(3))
        e = EnhancementPair.from_diagrams(r, c)
        run = tau_en(z, e, keep=True)
        if run.spans != spans_by_containment(z, e):
            mismatch.append(f"Z={_name(z)} {e}")
        structure.extend(f"Z={_name(z)} {e}: {msg}" for msg in
                         checks.enhanced_structure_violations(z, e, run.states, run.spans))
        if run.spans:
            spanning += 1
            big_m, big_n = len(e.r), len(e.c)
            if run.time > big_m + big_n + 1 or run.time > distinct_nonzero(e.r) + distinct_nonzero(e.c) + 1:
                bound.append(f"Z={_name(z)} {e}: tau={run.time}")
            blocks.extend(block_violations(z, e, run.states))
    subject = f"{count} triples, seed {seed}"
    rec.violations(subject, "containment agrees with simulation", mismatch)
    rec.violations(subject, f"tau_en <= M+N+1 on {spanning} spanning cases", bound)
    rec.violations(subject, "block containment", blocks)
    rec.violations(subject, "enhanced structure", structure)


def random_diagram(rng: random.Random, m: int, n: int) -> YoungDiagram:
    """Uniform weakly decreasing row sequence inside R_{m,n}."""
    return YoungDiagram.from_rows(sorted((rng.randint(0, m) for _ in range(n)), reverse=True))


# dispatch

STANDARD_FAMILIES = ("all-3x3", "rectangles-4x4", "l-shapes-4", "thresholds-4", "enhanced-random")


def _parse(family: str) -> Iterator[tuple[str, Callable[[_Recorder], None]]]:
    if family == "standard":
        for name in STANDARD_FAMILIES:
            yield from _parse(name)
        return
    if m := re.fullmatch(r"all-(\d+)x(\d+)", family):
        a, b = int(m[1]), int(m[2])
        yield family, lambda rec: audit_all(rec, a, b)
    elif m := re.fullmatch(r"rectangles-(\d+)x(\d+)", family):
        a, b = int(m[1]), int(m[2])
        yield family, lambda rec: audit_rectangles(rec, a, b)
    elif m := re.fullmatch(r"l-shapes-(\d+)", family):
        k = int(m[1])
        yield family, lambda rec: audit_lshapes(rec, k)
    elif m := re.fullmatch(r"thresholds-(\d+)", family):
        k = int(m[1])
        yield family, lambda rec: audit_thresholds(rec, k)
    elif m := re.fullmatch(r"enhanced-random(?:-(\d+)(?:-(\d+))?)?", family):
        count = int(m[1]) if m[1] else 1000
        seed = int(m[2]) if m[2] else 0
        yield family, lambda rec: audit_enhanced_random(rec, count, seed)
    else:
        raise InvalidInput(f"unknown audit family {family!r}")


def audit(family: str, progress: Optional[Callable[[AuditLine], None]] = None) -> AuditResult:
    """Run a named family; ``progress`` sees each line as it is recorded."""
    jobs = list(_parse(family))
    result = AuditResult(family)
    for name, job in jobs:
        job(_Recorder(name, result, progress))
    return result
