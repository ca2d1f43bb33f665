"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from . import conway, verify
from .diagrams import DiagramError, enumerate_diagrams, parse, render
from .poly import render as render_poly
from .weights import deframe_by_substitution, eval_weight

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
TABLE_BOUND = 7


class UsageError(Exception):
    pass


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        d = parse(args.diagram)
    except DiagramError as exc:
        raise UsageError(str(exc)) from exc
    w = deframe_by_substitution(d) if args.deframe else eval_weight(d)
    if args.json:
        out = {
            "diagram": render(d),
            "canonical": render(d.canonical()),
            "polynomial": render_poly(w),
            **w.to_json(),
        }
        if args.conway:
            out["conway"] = conway.conway_weight(d)
        print(json.dumps(out))
    elif args.conway:
        print(conway.conway_weight(d))
    else:
        print(render_poly(w))
    return EXIT_OK


def table_rows(n: int, all_diagrams: bool = False) -> list[dict]:
    rows = []
    for d in enumerate_diagrams(n, indecomposable=not all_diagrams):
        rows.append({"diagram": render(d), "polynomial": render_poly(eval_weight(d)), "crossings": d.crossing_count()})
    rows.sort(key=lambda r: r["diagram"])
    return rows


def cmd_table(args: argparse.Namespace) -> int:
    if args.n < 0 or args.n > args.bound:
        raise UsageError(f"order must be between 0 and {args.bound}")
    rows = table_rows(args.n, args.all_diagrams)
    if args.json:
        print(json.dumps(rows))
    else:
        w = csv.DictWriter(sys.stdout, fieldnames=["diagram", "polynomial", "crossings"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    command = " ".join(["verify", args.suite] + ([f"--max-order {args.max_order}"] if args.max_order is not None else [])
                       + [f"--algebra {args.algebra}"])
    report = verify.run_suites(names, args.max_order, args.algebra, command)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} [{c.suite}] {c.name} ({c.seconds:.2f}s)"
            if c.detail:
                line += f": {c.detail}"
            if not c.passed:
                line += f"\n     reproduce: {c.reproducer}"
            print(line)
        if report.conway_sigma is not None:
            print(f"conway specialization: c=0, y={report.conway_sigma:+d}")
        print(f"{'ok' if report.passed else 'FAILED'} in {report.seconds:.2f}s")
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(report.to_json(), fh, indent=2)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gl11weight", description="Universal gl(1|1) weight system on chord diagrams.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate W on one diagram")
    e.add_argument("diagram", help="e.g. 0-2,1-3 or ABAB")
    e.add_argument("--json", action="store_true")
    e.add_argument("--deframe", action="store_true", help="set c = 0")
    e.add_argument("--conway", action="store_true", help="print the Conway weight instead")
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("table", help="tabulate W on diagrams of one order")
    t.add_argument("n", type=int)
    t.add_argument("--all-diagrams", action="store_true", help="include decomposable diagrams")
    t.add_argument("--json", action="store_true")
    t.add_argument("--bound", type=int, default=TABLE_BOUND, help=argparse.SUPPRESS)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=list(verify.SUITES) + ["all"])
    v.add_argument("--max-order", type=int, default=None)
    v.add_argument("--algebra", choices=["gl11", "bosonic"], default="gl11")
    v.add_argument("--json", action="store_true")
    v.add_argument("--output", help="also write the JSON report here")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
