"""Command-line front end: ``verify`` runs check suites, ``scan-dispersion`` writes a CSV scan."""
from __future__ import annotations

import argparse
import sys

from . import momentum
from .report import FAIL
from .suites import SUITES, SuiteConfig, run_suites, summary

SCAN_LIMIT = 1e-6


def _positive(value: str) -> float:
    x = float(value)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return x


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mcs-dkp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--mass", type=_positive, default=1.0)
    v.add_argument("--p1", type=float, default=2.0)
    v.add_argument("--p2", type=float, default=2.0)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--tol", type=_positive, default=1e-9,
                   help="replaces every tolerance that defaults to 1e-9")
    v.add_argument("--format", choices=("text", "json"), default="text")

    s = sub.add_parser("scan-dispersion", help="locate p0 on a momentum grid and write a CSV table")
    s.add_argument("--p1min", type=float, default=-5.0)
    s.add_argument("--p1max", type=float, default=5.0)
    s.add_argument("--p2min", type=float, default=-5.0)
    s.add_argument("--p2max", type=float, default=5.0)
    s.add_argument("--grid", type=int, default=20)
    s.add_argument("--mass", type=_positive, default=1.0)
    s.add_argument("--out", required=True)
    return parser


def _verify(args) -> int:
    cfg = SuiteConfig(args.suite, args.mass, args.p1, args.p2, args.seed, args.tol)
    reports = run_suites(cfg)
    for r in reports:
        print(r.to_json() if args.format == "json" else r.to_text())
    if args.format == "text":
        counts = summary(reports)
        print(f"{counts['total']} checks: {counts['pass']} pass, {counts['fail']} fail, "
              f"{counts['erratum-note']} erratum-note")
    return 1 if any(r.status == FAIL for r in reports) else 0


def _scan(args, parser: argparse.ArgumentParser) -> int:
    if args.grid < 2:
        parser.error("--grid must be at least 2")
    rows = momentum.dispersion_scan((args.p1min, args.p1max), (args.p2min, args.p2max), args.mass, args.grid)
    try:
        momentum.write_scan_csv(rows, args.out)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    worst = momentum.max_relative_error(rows)
    print(f"{len(rows)} rows written to {args.out}; max relative error {worst:.3e}")
    return 1 if not worst <= SCAN_LIMIT else 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return _verify(args)
    return _scan(args, parser)


if __name__ == "__main__":
    sys.exit(main())
