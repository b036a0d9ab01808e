"""Command line interface.

Subcommands:

* ``lclab run <problem.json> [--format json|md] [--seed N] [--box R]
  [--timings]`` — execute the tasks of a problem file.
* ``lclab verify-paper [--seed N] [--field rational|p:<prime>]
  [--format json|md] [--quick]`` — run the built-in verification battery.
* ``lclab search-converse --n <n> --max-degree <d> --max-i <i>`` —
  enumerate sequences with full rank and saturated semigroup but
  vanishing top cohomology.

Exit codes: 0 success, 1 battery check failed, 2 parse/validation error,
3 precondition violation, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .errors import InternalConsistencyError, ParseError, PreconditionError
from .problem import parse_problem
from .report import (
    battery_report_markdown,
    report_skeleton,
    run_report_markdown,
    to_json,
)
from .runner import (
    EXIT_INTERNAL,
    EXIT_PARSE,
    EXIT_PRECONDITION,
    run,
    run_verification,
)
from .semigroup import converse_search


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lclab",
        description=(
            "Exact graded local cohomology of monomial quotients: "
            "run problem files or verify the built-in theorem battery."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run the tasks of a problem file")
    p_run.add_argument("problem", help="path to a JSON problem file")
    p_run.add_argument("--format", choices=("json", "md"), default="json")
    p_run.add_argument("--seed", type=int, default=0)
    p_run.add_argument("--box", type=int, default=None,
                       help="override the problem's box radius")
    p_run.add_argument("--timings", action="store_true",
                       help="include wall-clock timings (breaks byte-identical output)")

    p_verify = sub.add_parser(
        "verify-paper", help="run the built-in verification battery"
    )
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--field", default="rational",
                          help="rational or p:<prime>")
    p_verify.add_argument("--format", choices=("json", "md"), default="json")
    p_verify.add_argument("--quick", action="store_true",
                          help="shrink corpus sizes for a smoke run")

    p_conv = sub.add_parser(
        "search-converse",
        help="search for saturated full-rank sequences with vanishing top cohomology",
    )
    p_conv.add_argument("--n", type=int, required=True)
    p_conv.add_argument("--max-degree", type=int, required=True)
    p_conv.add_argument("--max-i", type=int, required=True)
    p_conv.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_run(args) -> int:
    try:
        with open(args.problem, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"error: cannot read {args.problem}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        problem = parse_problem(text)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.box is not None:
        problem = replace(problem, box_radius=args.box)
    report, code = run(problem, seed=args.seed, with_timings=args.timings)
    if args.format == "md":
        sys.stdout.write(run_report_markdown(report))
    else:
        sys.stdout.write(to_json(report))
    return code


def _cmd_verify(args) -> int:
    try:
        report, code = run_verification(
            seed=args.seed, field_desc=args.field, quick=args.quick
        )
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "md":
        sys.stdout.write(battery_report_markdown(report))
    else:
        sys.stdout.write(to_json(report))
    return code


def _cmd_search_converse(args) -> int:
    try:
        found = converse_search(args.n, args.max_degree, args.max_i)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    report = report_skeleton("rational", args.seed)
    report["candidates"] = [
        {
            "sequence": [list(e) for e in exps],
            "rank": rep.rank,
            "saturated": rep.saturated,
            "h_nonzero": rep.h_nonzero,
        }
        for exps, rep in found
    ]
    sys.stdout.write(to_json(report))
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "verify-paper":
            return _cmd_verify(args)
        return _cmd_search_converse(args)
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
