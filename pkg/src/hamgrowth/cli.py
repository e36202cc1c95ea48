"""Command-line entry point.

Every input (zero-set, initial set, enhancements, thin spec) is accepted
inline or as the path of a file holding the same text.  Results are
printed as ``key = value`` lines; ``--json PATH`` also writes them as a
JSON object.  Exit codes: 0 success, 1 failed audit or bound chain,
2 usage error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Callable, Optional, Sequence

from hamgrowth import audit as audit_mod
from hamgrowth import checks
from hamgrowth.enhanced import parse_enhancements, spans_by_containment, tau_en
from hamgrowth.errors import Inconsistency, InternalError, InvalidInput
from hamgrowth.extremal import (
    ThinCaps,
    bounds,
    mu_en_exact,
    mu_search,
    mu_th_search,
    ratslope_best,
    ratslope_bound,
    th_upper,
)
from hamgrowth.formats import format_sites, parse_sites, trace_lines
from hamgrowth.regular import INF, run
from hamgrowth.render import render
from hamgrowth.thin import (
    canonicalize,
    is_thin,
    parse_thin_spec,
    standard_arrangement,
    thin_spanning_time,
    witness_L,
    witness_rectangle,
)
from hamgrowth.young import format_diagram, parse_diagram

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _text(value: str) -> str:
    """Inline text, or the contents of ``value`` if it names a file."""
    if os.path.isfile(value):
        with open(value, encoding="utf-8") as fh:
            return fh.read()
    return value


def _zeroset(args):
    text = args.zeroset_opt if args.zeroset_opt is not None else args.zeroset
    if text is None:
        raise InvalidInput("a zero-set is required (positional or --zeroset)")
    lines = [ln.split("#", 1)[0].strip() for ln in _text(text).splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) != 1:
        raise InvalidInput("zero-set must be a single line")
    return parse_diagram(lines[0])


def _pair(text: str, sep: str = "x") -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.lower().split(sep))
    except ValueError as exc:
        raise InvalidInput(f"expected A{sep}B, got {text!r}") from exc
    if a < 1 or b < 1:
        raise InvalidInput(f"{text!r} must have positive parts")
    return a, b


def _caps(text: Optional[str]) -> Optional[ThinCaps]:
    if text is None:
        return None
    try:
        vals = [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise InvalidInput(f"caps must be E,L,W integers, got {text!r}") from exc
    if len(vals) != 3 or min(vals) < 0:
        raise InvalidInput(f"caps must be three nonnegative integers E,L,W, got {text!r}")
    return ThinCaps(*vals)


def _fmt(value) -> str:
    if value is None:
        return "none"
    if value is True or value is False:
        return str(value).lower()
    if value == INF:
        return "inf"
    return str(value)


def _jsonable(value):
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return value


class Report:
    def __init__(self, out):
        self.out = out
        self.items: list[tuple[str, object]] = []
        self.lines: list[str] = []

    def put(self, key: str, value) -> None:
        self.items.append((key, value))
        self.out.write(f"{key} = {_fmt(value)}\n")

    def line(self, text: str) -> None:
        self.lines.append(text)
        self.out.write(text + "\n")

    def dump(self, path: Optional[str]) -> None:
        if not path:
            return
        doc = {k: _jsonable(v) for k, v in self.items}
        if self.lines:
            doc["lines"] = self.lines
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")


# verbs


def cmd_sim(args, rep: Report) -> int:
    z = _zeroset(args)
    sites = parse_sites(_text(args.init)) if args.init else frozenset()
    trace = run(z, sites)
    rep.put("zeroset", format_diagram(z))
    rep.put("sites", format_sites(sites, inline=True) or "none")
    for line in trace_lines(trace.steps, trace.spans):
        rep.line(line)
    rep.put("verdict", trace.verdict)
    rep.put("tau", trace.tau)
    rep.put("tau_line", trace.tau_line)
    bad = checks.crosspoint_violations(trace.steps)
    rep.put("crosspoint_violations", len(bad))
    _emit_render(args, trace.steps, rep.out)
    if bad:
        raise Inconsistency(bad[0])
    return EXIT_OK


def cmd_tau_en(args, rep: Report) -> int:
    z = _zeroset(args)
    e = parse_enhancements(_text(args.enh))
    result = tau_en(z, e, keep=True)
    rep.put("zeroset", format_diagram(z))
    rep.put("enhancements", str(e))
    for line in trace_lines(result.states, result.spans):
        rep.line(line)
    rep.put("verdict", result.verdict)
    rep.put("tau_en", result.tau)
    rep.put("spans_by_containment", spans_by_containment(z, e))
    bad = checks.enhanced_structure_violations(z, e, result.states, result.spans)
    rep.put("structure_violations", len(bad))
    _emit_render(args, result.states, rep.out)
    if bad or spans_by_containment(z, e) != result.spans:
        raise Inconsistency(bad[0] if bad else "containment and simulation disagree")
    return EXIT_OK


def cmd_mu_en(args, rep: Report) -> int:
    z = _zeroset(args)
    res = mu_en_exact(z, full=args.full, workers=args.workers)
    rep.put("zeroset", format_diagram(z))
    rep.put("mu_en", res.value)
    rep.put("witness", str(res.witness))
    rep.put("candidates", res.candidates)
    rep.put("mode", "full" if args.full else "reduced")
    return EXIT_OK


def cmd_mu_th(args, rep: Report) -> int:
    z = _zeroset(args)
    res = mu_th_search(z, _caps(args.caps), workers=args.workers)
    rep.put("zeroset", format_diagram(z))
    rep.put("mu_th_best_found", res.best if res.found else "none found")
    rep.put("witness", str(res.witness) if res.witness else None)
    rep.put("candidates", res.candidates)
    rep.put("mu_th_upper", th_upper(z))
    return EXIT_OK


def cmd_mu(args, rep: Report) -> int:
    z = _zeroset(args)
    heuristic = True if args.heuristic else None
    res = mu_search(z, _pair(args.window), args.max_sites, heuristic, args.restarts, args.seed, workers=args.workers)
    rep.put("zeroset", format_diagram(z))
    rep.put("window", args.window)
    rep.put("mode", "exhaustive" if res.exhaustive else "heuristic")
    rep.put("mu_best_found", res.best)
    rep.put("witness", format_sites(res.witness, inline=True) if res.witness is not None else None)
    rep.put("candidates", res.candidates)
    rep.put("mu_upper_general", 2 * z.width * z.height + 5)
    return EXIT_OK


def cmd_bounds(args, rep: Report) -> int:
    z = _zeroset(args)
    window = _pair(args.window) if args.window else None
    report = bounds(z, thin_caps=_caps(args.caps), window=window, max_ab=args.max_ab, workers=args.workers)
    for key, value in report.items():
        rep.put(key, value)
    return EXIT_FAIL if report.chain_violations() else EXIT_OK


def cmd_ratslope(args, rep: Report) -> int:
    z = _zeroset(args)
    if args.a is not None or args.b is not None:
        if args.a is None or args.b is None:
            raise InvalidInput("give both --a and --b")
        rs = ratslope_bound(z, args.a, args.b)
    else:
        rs = ratslope_best(z, args.max_ab)
    rep.put("zeroset", format_diagram(z))
    rep.put("a", rs.a)
    rep.put("b", rs.b)
    rep.put("k", rs.k)
    rep.put("witness", f"{rs.witness[0]} {rs.witness[1]}")
    rep.put("bound", rs.bound)
    return EXIT_OK


def cmd_audit(args, rep: Report) -> int:
    show: Callable = rep.line if args.verbose else (lambda line: None)
    result = audit_mod.audit(args.family, progress=lambda ln: show(str(ln)) if ln.ok else rep.line(str(ln)))
    rep.put("family", args.family)
    rep.put("checks", len(result.lines))
    rep.put("failures", len(result.failures))
    rep.put("result", "pass" if result.passed else "fail")
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_render(args, rep: Report) -> int:
    z = _zeroset(args)
    if args.enh:
        states = tau_en(z, parse_enhancements(_text(args.enh)), keep=True).states
    else:
        sites = parse_sites(_text(args.init)) if args.init else frozenset()
        states = run(z, sites).steps
    text = render(states, args.mode)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        rep.put("written", args.out)
    else:
        rep.out.write(text)
    return EXIT_OK


def cmd_thin(args, rep: Report) -> int:
    choices = [args.spec is not None, args.rect is not None, args.lshape is not None, args.init is not None]
    if sum(choices) != 1:
        raise InvalidInput("give exactly one of --spec, --rect, --lshape, --init")
    claimed = None
    z = None
    if args.rect:
        m, n = args.rect
        spec = witness_rectangle(m, n)
        z = parse_diagram(" ".join([str(m)] * n))
        claimed = 2 * n - 1 if m == n else 2 * min(m, n)
    elif args.lshape:
        z, spec, claimed = witness_L(*args.lshape)
    elif args.init:
        sites = parse_sites(_text(args.init))
        if not is_thin(sites):
            raise InvalidInput("set is not thin")
        spec = canonicalize(sites)
    else:
        spec = parse_thin_spec(_text(args.spec))
    if z is None and (args.zeroset_opt is not None or args.zeroset is not None):
        z = _zeroset(args)
    rep.put("spec", str(spec))
    rep.put("frame", "{}x{}".format(*spec.frame))
    rep.put("sites", format_sites(standard_arrangement(spec), inline=True) or "none")
    if z is not None:
        rep.put("zeroset", format_diagram(z))
        rep.put("tau", thin_spanning_time(z, spec))
    if claimed is not None:
        rep.put("claimed_tau", claimed)
    return EXIT_OK


def _emit_render(args, states, out) -> None:
    mode = getattr(args, "render", "none")
    if mode == "none":
        return
    text = render(states, mode)
    if args.render_out:
        with open(args.render_out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


# parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hamgrowth", description="Neighborhood growth on the Hamming plane.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name: str, func, help_text: str, zeroset: bool = True):
        p = sub.add_parser(name, help=help_text, description=help_text)
        if zeroset:
            p.add_argument("zeroset", nargs="?", help='zero-set rows, e.g. "4 3 1", or a file')
            p.add_argument("--zeroset", dest="zeroset_opt", help="same as the positional argument")
        p.add_argument("--json", metavar="PATH", help="also write results as JSON")
        p.set_defaults(func=func)
        return p

    def renderable(p):
        p.add_argument("--render", choices=["ascii", "svg", "none"], default="none")
        p.add_argument("--render-out", metavar="PATH", help="write the rendering here instead of stdout")

    p = verb("sim", cmd_sim, "regular growth from a finite initial set")
    p.add_argument("--init", help='initial sites, "i j; i j" or a file; default empty')
    renderable(p)

    p = verb("tau-en", cmd_tau_en, "enhanced growth from the empty set")
    p.add_argument("--enh", required=True, help='enhancements, "r: 2 1 / c: 1" or a file')
    renderable(p)

    p = verb("mu-en", cmd_mu_en, "exact maximal enhanced spanning time")
    p.add_argument("--full", action="store_true", help="scan all pairs instead of the reduced family")
    p.add_argument("--workers", type=int, default=1)

    p = verb("mu-th", cmd_mu_th, "slowest thin set within caps (a lower bound)")
    p.add_argument("--caps", metavar="E,L,W", help="max entry, max vector length, max isolated sites")
    p.add_argument("--workers", type=int, default=1)

    p = verb("mu", cmd_mu, "slowest spanning set inside a window (a lower bound)")
    p.add_argument("--window", required=True, metavar="WxH")
    p.add_argument("--max-sites", type=int)
    p.add_argument("--heuristic", action="store_true", help="random restarts even for small windows")
    p.add_argument("--restarts", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = verb("bounds", cmd_bounds, "closed-form bounds, exact mu_en and optional searches")
    p.add_argument("--window", metavar="WxH", help="also run the window search")
    p.add_argument("--caps", metavar="E,L,W", help="also run the thin search")
    p.add_argument("--max-ab", type=int, default=3)
    p.add_argument("--workers", type=int, default=1)

    p = verb("ratslope", cmd_ratslope, "slope lower bound on mu_en")
    p.add_argument("--max-ab", type=int, default=3)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)

    p = verb("audit", cmd_audit, "run a named audit family", zeroset=False)
    p.add_argument("family", help="all-MxN, rectangles-MxN, l-shapes-K, thresholds-K, enhanced-random[-N[-SEED]], standard")
    p.add_argument("-v", "--verbose", action="store_true", help="print passing checks too")

    p = verb("render", cmd_render, "draw a run step by step")
    p.add_argument("--init", help="initial sites for regular growth")
    p.add_argument("--enh", help="enhancements for enhanced growth")
    p.add_argument("--mode", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--out", metavar="PATH")

    p = verb("thin", cmd_thin, "thin-set specs and witness constructions")
    p.add_argument("--spec", help='"r: 4 2 / c: 2 2 / w: 3" or a file')
    p.add_argument("--rect", type=int, nargs=2, metavar=("M", "N"), help="rectangle witness")
    p.add_argument("--lshape", type=int, nargs=4, metavar=("A", "B", "C", "D"), help="L-shape witness")
    p.add_argument("--init", help="a thin set to canonicalize")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    rep = Report(out)
    try:
        code = args.func(args, rep)
    except InvalidInput as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (Inconsistency, InternalError) as exc:
        sys.stderr.write(f"inconsistency: {exc}\n")
        rep.dump(args.json)
        return EXIT_INTERNAL
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    rep.dump(args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
