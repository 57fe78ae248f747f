"""Command line: ``verify`` runs the check suites, ``calc`` evaluates one expression."""

from __future__ import annotations

import argparse
import json
import sys

from . import verify
from .calc import CalcError, calc
from .roots import RootSystemError, load_system


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="affine-nichols",
                                description="Exact checks for affine nil-Hecke and Nichols algebra identities.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and emit a JSON report")
    v.add_argument("--system", default="A2", help="preset name (A2, B2, G2, ...) or a JSON Cartan matrix file")
    v.add_argument("--suite", default="all", choices=verify.SUITES + ("all",))
    v.add_argument("--max-length", type=_positive, default=None)
    v.add_argument("--trials", type=_positive, default=25)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--margin", type=_nonnegative, default=0)
    v.add_argument("--k-lower-bound", type=int, choices=(1, 2), default=2)
    v.add_argument("--out", default="-", help="report path, '-' for stdout")

    c = sub.add_parser("calc", help="evaluate an expression")
    c.add_argument("--system", default="A2")
    c.add_argument("expression")
    return p


def _summary(checks: list[dict]) -> dict:
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for c in checks:
        counts[c["status"]] += 1
    return counts


def cmd_verify(args, parser) -> int:
    try:
        system = load_system(args.system)
    except (RootSystemError, OSError, ValueError) as exc:
        parser.error(f"cannot load system {args.system!r}: {exc}")
    suites = verify.SUITES if args.suite == "all" else (args.suite,)
    cfg = verify.RunConfig(system, suites, args.max_length, args.trials, args.seed,
                           args.margin, args.k_lower_bound)
    checks = verify.run(cfg)
    counts = _summary(checks)
    report = {
        "system": system.name,
        "config": {"suite": args.suite, "max_length": args.max_length, "trials": args.trials,
                   "seed": args.seed, "margin": args.margin, "k_lower_bound": args.k_lower_bound},
        "checks": checks,
        "summary": counts,
    }
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out == "-":
        print(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    for c in checks:
        if c["status"] != "pass":
            print(f"{c['status']:7s} {c['id']}  {c.get('reason', '')}", file=sys.stderr)
    print(f"{system.name}: {counts['pass']} passed, {counts['fail']} failed, "
          f"{counts['skipped']} skipped", file=sys.stderr)
    return 1 if counts["fail"] else 0


def cmd_calc(args, parser) -> int:
    try:
        system = load_system(args.system)
    except (RootSystemError, OSError, ValueError) as exc:
        parser.error(f"cannot load system {args.system!r}: {exc}")
    try:
        print(calc(system, args.expression))
    except CalcError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args, parser)
    return cmd_calc(args, parser)


if __name__ == "__main__":
    sys.exit(main())
