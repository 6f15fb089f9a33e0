"""Command line entry point: ``leadmono {compute,hilbert,stats,verify,bench}``.

Exit codes: 0 success, 2 invalid input, 3 genericity violation (``N_d < 0``),
4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time

from .instance import InstanceSpec, parse_degrees
from .lgb import TIERS, TRACE_FIELDS, GenericityError, degree_bound, lgb_improved
from .oracle import DEFAULT_BUDGET, DEFAULT_PRIME, OracleBudgetError, verify
from .series import artinian_cap, generic_hilbert_series

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_GENERICITY = 3
EXIT_MISMATCH = 4


class InputError(ValueError):
    pass


def _spec(args) -> InstanceSpec:
    try:
        degrees = parse_degrees(args.d)
        return InstanceSpec(args.n, args.m, degrees)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _tiers(text: str) -> list[int]:
    try:
        tiers = [int(t) for t in text.split(",") if t]
    except ValueError:
        raise InputError(f"bad tier list {text!r}") from None
    bad = [t for t in tiers if t not in TIERS]
    if bad or not tiers:
        raise InputError(f"tiers must come from {TIERS}, got {text!r}")
    return tiers


def _seeds(text: str) -> list[int]:
    out = []
    try:
        for part in text.split(","):
            lo, sep, hi = part.partition("-")
            out.extend(range(int(lo), int(hi) + 1) if sep else [int(lo)])
    except ValueError:
        raise InputError(f"bad seed list {text!r}") from None
    return out


def _table(rows: list[list], header: list[str]) -> str:
    cols = [header] + [[str(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(header))]
    return "\n".join("  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cols)


def _csv(rows: list[list], header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_compute(args) -> int:
    spec = _spec(args)
    result = lgb_improved(spec, args.tier, threads=args.threads)
    if args.format == "json":
        print(result.to_json())
    elif args.format == "csv":
        sys.stdout.write(result.traces_csv())
    else:
        print(f"{spec}  D={result.D}  tier={args.tier}")
        for deg, gens in result.by_degree().items():
            print(f"degree {deg} ({len(gens)}): " + " ".join(map(str, gens)))
        print(f"{len(result.L_G)} leading monomials")
        print()
        print(_table([[getattr(t, k) for k in TRACE_FIELDS] for t in result.traces], list(TRACE_FIELDS)))
    return EXIT_OK


def cmd_hilbert(args) -> int:
    spec = _spec(args)
    cap = args.cap
    if cap is None:
        cap = artinian_cap(spec) if spec.n <= spec.m else degree_bound(spec)
    series = generic_hilbert_series(spec, cap)
    if args.format == "json":
        print(json.dumps(series.to_dict()))
    else:
        print(series)
        print(f"finite: {str(series.finite).lower()}")
    return EXIT_OK


def cmd_stats(args) -> int:
    spec = _spec(args)
    tiers = _tiers(args.tiers)
    runs = {t: lgb_improved(spec, t, threads=args.threads) for t in tiers}
    header = ["d"] + [f"candidates_tier{t}" for t in tiers] + [f"relevant_tier{t}" for t in tiers]
    degrees = [tr.d for tr in runs[tiers[0]].traces]
    rows = []
    for i, d in enumerate(degrees):
        rows.append(
            [d]
            + [runs[t].traces[i].candidates_checked for t in tiers]
            + [runs[t].traces[i].relevant_generators for t in tiers]
        )
    if args.format == "json":
        print(json.dumps([dict(zip(header, r)) for r in rows]))
    elif args.format == "csv":
        sys.stdout.write(_csv(rows, header))
    else:
        print(_table(rows, header))
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = _spec(args)
    seeds = _seeds(args.seeds)
    try:
        trials = verify(spec, seeds, prime=args.prime, budget=args.budget)
    except OracleBudgetError as exc:
        raise InputError(str(exc)) from None
    for t in trials:
        print(json.dumps(t.to_dict()))
    matched = sum(t.match for t in trials)
    verdict = "PASS" if matched == len(trials) else "FAIL"
    print(f"{verdict}: {matched}/{len(trials)} seeds match for {spec}", file=sys.stderr)
    return EXIT_OK if verdict == "PASS" else EXIT_MISMATCH


BENCH_FIELDS = [
    "tier",
    "seconds",
    "candidates_checked",
    "pre_checked",
    "divisibility_tests",
    "relevant_generators",
    "peak_candidates",
    "peak_candidate_bytes",
]


def bench_rows(spec: InstanceSpec, tiers, threads: int = 1) -> list[dict]:
    rows = []
    for tier in tiers:
        start = time.perf_counter()
        result = lgb_improved(spec, tier, threads=threads)
        elapsed = time.perf_counter() - start
        peak = max(t.candidates_checked + t.pre_checked for t in result.traces)
        rows.append(
            {
                "tier": tier,
                "seconds": round(elapsed, 4),
                "candidates_checked": sum(t.candidates_checked for t in result.traces),
                "pre_checked": sum(t.pre_checked for t in result.traces),
                "divisibility_tests": sum(t.divisibility_tests for t in result.traces),
                "relevant_generators": sum(t.relevant_generators for t in result.traces),
                "peak_candidates": peak,
                # exponent rows are stored one byte per variable up to degree 255
                "peak_candidate_bytes": peak * spec.n * (1 if result.D < 256 else 2),
            }
        )
    return rows


def cmd_bench(args) -> int:
    spec = _spec(args)
    rows = bench_rows(spec, _tiers(args.tiers), args.threads)
    sys.stdout.write(_csv([[r[k] for k in BENCH_FIELDS] for r in rows], BENCH_FIELDS))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leadmono",
        description="Leading monomials of a minimal Groebner basis of a generic homogeneous sequence.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log per-degree progress")
    sub = parser.add_subparsers(dest="command", required=True)

    def instance(p):
        p.add_argument("-n", type=int, required=True, help="number of variables")
        p.add_argument("-m", type=int, required=True, help="number of polynomials")
        p.add_argument("-d", required=True, help="degree list, e.g. 2,2,3,4 or 2^19")

    p = sub.add_parser("compute", help="run LGB and print L_G with its degree trace")
    instance(p)
    p.add_argument("--tier", type=int, choices=TIERS, default=4)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("hilbert", help="print the generic Hilbert series")
    instance(p)
    p.add_argument("--cap", type=int, default=None, help="expand up to this degree")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("stats", help="candidate and generator counts per degree, tiers side by side")
    instance(p)
    p.add_argument("--tiers", default="0,1,2,3")
    p.add_argument("--format", choices=("text", "json", "csv"), default="csv")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="compare LGB with Buchberger on random sequences")
    instance(p)
    p.add_argument("--seeds", default="1-5", help="comma list or ranges, e.g. 1-5,9")
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max monomials of degree D")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time and count work per tier")
    instance(p)
    p.add_argument("--tiers", default="0,4")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GenericityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERICITY


if __name__ == "__main__":
    sys.exit(main())
