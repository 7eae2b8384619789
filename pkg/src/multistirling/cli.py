"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter

from . import formats
from .families import Family, build_table
from .identities import (
    DEFAULT_DEPTH,
    DEFAULT_ENTRIES,
    DEFAULT_MAX_N,
    THEOREMS,
    SuiteConfig,
    default_grid,
    run_suite,
)
from .multilog import format_index, li_series, parse_index
from .series import compose, nested_map, one_minus_exp_neg

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_ORDER = 16
SERIES_NAMES = ("li", "li-nested", "li-one-minus-exp-neg")


class UsageError(Exception):
    pass


def max_order_cap() -> int:
    raw = os.environ.get("MULTILOG_MAX_ORDER", "64")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"MULTILOG_MAX_ORDER must be an integer, got {raw!r}") from None


def _index_arg(text: str):
    try:
        index = parse_index(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return index


def _int_list(text: str):
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _theorem_list(text: str):
    items = tuple(p.strip() for p in text.split(",") if p.strip())
    bad = [t for t in items if t not in THEOREMS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown theorem(s) {','.join(bad)}; choose from 1-7")
    return items


def _check_order(n: int, what: str) -> None:
    if n < 0:
        raise UsageError(f"{what} must be non-negative")
    cap = max_order_cap()
    if n > cap:
        raise UsageError(f"{what}={n} exceeds MULTILOG_MAX_ORDER={cap}")


def _emit(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_table(args) -> int:
    _check_order(args.max_n, "max-n")
    table = build_table(args.family, args.index, args.max_n)
    text = formats.table_to_csv(table) if args.format == "csv" else formats.table_to_json(table)
    _emit(text, args.out)
    return EXIT_OK


def named_series(name: str, index, order: int):
    li = li_series(index, order)
    if name == "li":
        return li
    if name == "li-nested":
        return compose(li, nested_map(order))
    if name == "li-one-minus-exp-neg":
        return compose(li, one_minus_exp_neg(order))
    raise UsageError(f"unknown series {name!r}")


def cmd_series(args) -> int:
    _check_order(args.order, "order")
    series = named_series(args.name, args.index, args.order)
    if args.format == "csv":
        text = formats.series_to_csv(series)
    else:
        text = formats.series_to_json(args.name, args.index, series)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_order(args.max_n, "max-n")
    if args.depth < 1:
        raise UsageError("depth must be >= 1")
    indices = args.index or default_grid(args.depth, args.entries)
    reports = run_suite(SuiteConfig(indices=indices, max_n=args.max_n, theorems=args.theorems))

    totals, passed = Counter(), Counter()
    for rep in reports:
        totals[rep.theorem] += 1
        passed[rep.theorem] += rep.passed
    for thm in sorted(totals, key=THEOREMS.index):
        print(f"theorem {thm}: {passed[thm]}/{totals[thm]} cells pass")
    for rep in reports:
        if not rep.passed:
            detail = rep.error or ", ".join(f"n={f.n}: {f.lhs} != {f.rhs}" for f in rep.failures)
            print(f"FAIL theorem {rep.theorem} index {format_index(rep.index)}: {detail}")
    ok = all(r.passed for r in reports)
    print("all cells pass" if ok else "verification FAILED")

    if args.out is not None:
        _emit(formats.reports_to_json(reports), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multistirling",
        description="Exact multi-Stirling, multi-Lah and multi-Bernoulli numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit a number table")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--index", required=True, type=_index_arg, help="e.g. 1,2,-1")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("series", help="emit multiple-logarithm series coefficients")
    p.add_argument("name", choices=SERIES_NAMES)
    p.add_argument("--index", required=True, type=_index_arg)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--theorems", type=_theorem_list, default=THEOREMS, help="e.g. 1,3,5")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--index", type=_index_arg, action="append", help="repeatable; overrides the grid")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help="grid: maximum depth")
    p.add_argument("--entries", type=_int_list, default=DEFAULT_ENTRIES, help="grid: allowed entries")
    p.add_argument("--out", help="write the JSON report array here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
    except OSError as exc:
        print(f"multistirling: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
