"""Command-line front end.

Exit codes: 0 when results match the printed baselines, 3 when the run
completed with findings in the discrepancy ledger, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import List, Optional

from . import baseline
from .enumeration import PipelineConfig, default_ncap, run_pipeline
from .irreducibility import DEFAULT_BUDGET, DEGREE_CAP, PolynomialZ, certify, corollary_run
from .laguerre import LaguerrePair, valuation_profile
from .newton import build_polygon, ffl_check, rightmost_slope
from .numeric import is_prime
from .quadratic import MODES
from .reports import (
    RunReport,
    corollary_report,
    lemma5_report,
    render_text,
    theorem1_report,
    write_jsonl,
)


def _positive(name, minimum=1):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"{name} must be >= {minimum}")
        return value
    return parse


def _add_pipeline_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--smax", type=_positive("--smax"), default=30)
    p.add_argument("--ncap", type=_positive("--ncap", 2), default=None,
                   help="largest n scanned (default 10**7, or $LAGVERIFY_NCAP)")
    p.add_argument("--mode", choices=MODES, default="printed",
                   help="normalization for the n = 2 quadratic family")
    p.add_argument("--jobs", type=_positive("--jobs"), default=1)


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
    p.set_defaults(fmt="text")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lagverify", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theorem1", help="enumerate T, T1..T4 and X")
    _add_pipeline_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("lemma5", help="exceptional b1 of the n = 2 quadratic family")
    p.add_argument("--mode", choices=MODES + ("both",), default="both")
    p.add_argument("--bound", type=_positive("--bound"), default=10**4,
                   help="brute-force range |b1| <= bound")
    _add_output_flags(p)

    p = sub.add_parser("corollary", help="certify g1 at every pair the corollary needs")
    _add_pipeline_flags(p)
    p.add_argument("--budget", type=_positive("--budget"), default=DEFAULT_BUDGET)
    p.add_argument("--degree-cap", type=_positive("--degree-cap"), default=DEGREE_CAP)
    p.add_argument("--extended", action="store_true")
    _add_output_flags(p)

    p = sub.add_parser("certify", help="certify polynomials read from a file")
    p.add_argument("file", help="one polynomial per line, ascending integer coefficients")
    p.add_argument("--budget", type=_positive("--budget"), default=DEFAULT_BUDGET)
    _add_output_flags(p)

    p = sub.add_parser("inspect-np", help="Newton polygon of g1(x, n, s) at p")
    p.add_argument("n", type=_positive("n"))
    p.add_argument("s", type=_positive("s"))
    p.add_argument("p", type=_positive("p", 2))
    _add_output_flags(p)

    p = sub.add_parser("enumerate", help="dump survivor records as JSON Lines")
    _add_pipeline_flags(p)
    return parser


def _config(args) -> PipelineConfig:
    ncap = args.ncap if args.ncap is not None else default_ncap()
    return PipelineConfig(s_max=args.smax, n_cap=ncap, mode=args.mode, jobs=args.jobs)


def _emit(report: RunReport, args, out) -> int:
    if not args.timings:
        report.timings = None
    out.write(report.to_json() if args.fmt == "json" else render_text(report))
    return report.exit_code


def cmd_theorem1(args, out) -> int:
    t0 = time.perf_counter()
    result = run_pipeline(_config(args))
    report = theorem1_report(result)
    report.timings = {"pipeline": time.perf_counter() - t0}
    return _emit(report, args, out)


def cmd_lemma5(args, out) -> int:
    modes = MODES if args.mode == "both" else (args.mode,)
    t0 = time.perf_counter()
    report = lemma5_report(modes=modes, bound=args.bound)
    report.timings = {"lemma5": time.perf_counter() - t0}
    return _emit(report, args, out)


def cmd_corollary(args, out) -> int:
    cfg = _config(args)
    t0 = time.perf_counter()
    result = run_pipeline(cfg)
    t1 = time.perf_counter()
    run = corollary_run(result, budget=args.budget, degree_cap=args.degree_cap,
                        printed_X=baseline.PRINTED_X, extended=args.extended, jobs=args.jobs)
    config = dict(cfg.to_dict(), budget=args.budget, degree_cap=args.degree_cap, extended=args.extended)
    report = corollary_report(result, run, config)
    report.timings = {"pipeline": t1 - t0, "certify": time.perf_counter() - t1}
    return _emit(report, args, out)


def read_polynomials(path: str) -> List[PolynomialZ]:
    polys = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            try:
                polys.append(PolynomialZ(tuple(int(tok) for tok in text.split())))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    return polys


def cmd_certify(args, out) -> int:
    polys = read_polynomials(args.file)
    certs = []
    for f in polys:
        if f.degree < 1:
            raise ValueError("constant polynomials cannot be certified")
        certs.append({"coefficients": list(f.coeffs), "certificate": certify(f, args.budget).to_dict()})
    report = RunReport("certify", {"file": args.file, "budget": args.budget}, {"polynomials": certs})
    return _emit(report, args, out)


def inspect_np(n: int, s: int, p: int) -> dict:
    prof = valuation_profile(p, LaguerrePair(n, s))
    poly = build_polygon(prof)
    checks = [(0, 1)]
    if n // 2 > 1:
        checks.append((1, n // 2))
    return {
        "pair": [n, s],
        "p": p,
        "vertices": [list(v) for v in poly.vertices],
        "edges": [{"from": list(a), "to": list(b), "slope": str(m)} for a, b, m in poly.edges],
        "rightmost_slope": str(rightmost_slope(prof)),
        "ffl": [ffl_check(prof, l, k).to_dict() for l, k in checks],
    }


def cmd_inspect(args, out) -> int:
    report = RunReport("inspect-np", {"n": args.n, "s": args.s, "p": args.p},
                       inspect_np(args.n, args.s, args.p))
    if args.fmt == "json":
        return _emit(report, args, out)
    r = report.results
    out.write(f"g1({args.n}, {args.s}) at p = {args.p}\n")
    out.write("vertices: " + " ".join(f"({x},{y})" for x, y in r["vertices"]) + "\n")
    for e in r["edges"]:
        out.write(f"  edge {tuple(e['from'])} -> {tuple(e['to'])}  slope {e['slope']}\n")
    out.write(f"rightmost slope: {r['rightmost_slope']}\n")
    for o in r["ffl"]:
        verdict = "holds" if o["holds"] else f"fails ({o['violated']}, j={o['witness_j']})"
        out.write(f"FFL(l={o['l']}, k={o['k']}): {verdict}\n")
    return 0


def cmd_enumerate(args, out) -> int:
    result = run_pipeline(_config(args))
    pairs = sorted(result.records, key=lambda t: (t[1], t[0]))
    write_jsonl((result.records[p].to_dict() for p in pairs), out)
    return 0


COMMANDS = {
    "theorem1": cmd_theorem1,
    "lemma5": cmd_lemma5,
    "corollary": cmd_corollary,
    "certify": cmd_certify,
    "inspect-np": cmd_inspect,
    "enumerate": cmd_enumerate,
}


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "inspect-np" and not is_prime(args.p):
        parser.error(f"p = {args.p} is not prime")
    try:
        return COMMANDS[args.command](args, out)
    except (ValueError, OSError) as exc:
        print(f"lagverify: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
