"""Command-line access to the poly-Bernoulli family.

Subcommands:

* ``number``     one value, plain or with the two formal parameters
* ``polynomial`` one polynomial, plain or with all three formal parameters
* ``table``      a grid of plain values over ranges of n and k
* ``verify``     run the identity suites and report pass/fail per identity
* ``eval``       evaluate at rational parameter points, generalized values
                 going through the independent series expansion

Exact rationals everywhere; output formats are text (default), json, and
csv for tables.  Exit status is 0 on success, 1 when a verification suite
fails, 2 on usage errors (including degenerate parameter points).

Negative rational arguments need the ``--ln-b=-1/3`` form, since a bare
``-1/3`` token reads as an option.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from math import factorial

from . import __version__
from .exact import MultiPoly, format_poly, format_rational, parse_rational, poly_eval
from .generalized import (
    DEFAULT_ORDER_MARGIN,
    DEFAULT_SEED,
    gen_pb_numbers,
    gen_pb_numbers_series,
    gen_pb_poly,
    gen_pb_poly_series,
)
from .numbers import poly_bernoulli, poly_bernoulli_poly
from .reports import all_passed
from .series import format_series
from .verification import SUITE_NAMES, run_suite

DISPLAY_NAMES = {"X": "x", "La": "ln(a)", "Lb": "ln(b)", "Lc": "ln(c)"}
DISPLAY_ORDER = ("La", "Lb", "Lc", "X")


def render(p: MultiPoly) -> str:
    return format_poly(p, names=DISPLAY_NAMES, var_order=DISPLAY_ORDER)


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _require_nonnegative(parser: argparse.ArgumentParser, n: int) -> None:
    if n < 0:
        parser.error("n must be non-negative")


def cmd_number(args) -> int:
    _require_nonnegative(args.parser, args.n)
    if args.generalized:
        value = render(gen_pb_numbers(args.n, args.k))
    else:
        value = format_rational(poly_bernoulli(args.n, args.k))
    if args.format == "json":
        _emit_json({"n": args.n, "k": args.k, "generalized": args.generalized, "value": value})
    else:
        print(value)
    return 0


def cmd_polynomial(args) -> int:
    _require_nonnegative(args.parser, args.n)
    if args.generalized:
        poly = gen_pb_poly(args.n, args.k)
    else:
        poly = poly_bernoulli_poly(args.n, args.k)
    text = render(poly)
    if args.format == "json":
        _emit_json(
            {"n": args.n, "k": args.k, "generalized": args.generalized, "polynomial": text}
        )
    else:
        print(text)
    return 0


def cmd_table(args) -> int:
    _require_nonnegative(args.parser, args.n_max)
    if args.k_min > args.k_max:
        args.parser.error("the k range is empty")
    k_values = range(args.k_min, args.k_max + 1)
    rows = [
        [format_rational(poly_bernoulli(n, k)) for k in k_values]
        for n in range(args.n_max + 1)
    ]
    header = ["n"] + [f"k={k}" for k in k_values]

    if args.format == "json":
        _emit_json(
            {
                "n_max": args.n_max,
                "k_min": args.k_min,
                "k_max": args.k_max,
                "rows": [
                    {"n": n, "values": dict(zip(map(str, k_values), row))}
                    for n, row in enumerate(rows)
                ],
            }
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(header)
        for n, row in enumerate(rows):
            writer.writerow([n] + row)
    else:
        cells = [header] + [[str(n)] + row for n, row in enumerate(rows)]
        widths = [max(len(line[i]) for line in cells) for i in range(len(header))]
        for line in cells:
            print("  ".join(cell.rjust(w) for cell, w in zip(line, widths)))
    return 0


def cmd_verify(args) -> int:
    try:
        reports = run_suite(
            args.suite,
            n_max=args.n_max,
            k_min=args.k_min,
            k_max=args.k_max,
            seed=args.seed,
            margin=args.order_margin,
        )
    except ValueError as exc:
        args.parser.error(str(exc))
    ok = all_passed(reports)
    if args.format == "json":
        _emit_json(
            {
                "suite": args.suite,
                "all_passed": ok,
                "reports": [r.as_json_obj() for r in reports],
            }
        )
    else:
        for report in reports:
            print(report.format_line())
        passed = sum(r.passed for r in reports)
        verdict = "ok" if ok else "FAILED"
        print(f"{verdict}: {passed}/{len(reports)} identity checks passed")
    return 0 if ok else 1


def _eval_generalized(args, n: int):
    parser = args.parser
    if args.ln_a is None or args.ln_b is None:
        parser.error("--generalized evaluation needs --ln-a and --ln-b")
    order = n + args.order_margin
    try:
        if args.poly is not None:
            if args.ln_c is None or args.x is None:
                parser.error("--generalized polynomial evaluation needs --ln-c and -x")
            series = gen_pb_poly_series(args.k, args.ln_a, args.ln_b, args.ln_c, args.x, order)
        else:
            series = gen_pb_numbers_series(args.k, args.ln_a, args.ln_b, order)
    except ValueError as exc:
        parser.error(str(exc))
    return series, series.coefficient(n) * factorial(n)


def cmd_eval(args) -> int:
    parser = args.parser
    n = args.number if args.number is not None else args.poly
    _require_nonnegative(parser, n)

    series_text = None
    if args.generalized:
        series, value = _eval_generalized(args, n)
        if args.show_series:
            series_text = format_series(series)
    else:
        if args.show_series:
            parser.error("--show-series requires --generalized")
        if any(v is not None for v in (args.ln_a, args.ln_b, args.ln_c)):
            parser.error("parameter bindings require --generalized")
        if args.poly is not None:
            if args.x is None:
                parser.error("polynomial evaluation needs -x")
            value = poly_eval(poly_bernoulli_poly(args.poly, args.k), {"X": args.x})
        else:
            value = poly_bernoulli(args.number, args.k)

    text = format_rational(value)
    if args.format == "json":
        obj = {"n": n, "k": args.k, "generalized": args.generalized, "value": text}
        if series_text is not None:
            obj["series"] = series_text
        _emit_json(obj)
    else:
        if series_text is not None:
            print(f"series: {series_text}")
        print(text)
    return 0


def _add_format(sub, choices=("text", "json")) -> None:
    sub.add_argument("--format", choices=choices, default="text", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polybernoulli",
        description="Exact poly-Bernoulli numbers, polynomials, and identity checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("number", help="print one poly-Bernoulli value")
    sub.add_argument("-n", type=int, required=True, help="lower index")
    sub.add_argument("-k", type=int, required=True, help="upper index (any integer)")
    sub.add_argument(
        "--generalized",
        action="store_true",
        help="keep the parameters a, b formal; prints a polynomial in ln(a), ln(b)",
    )
    _add_format(sub)
    sub.set_defaults(func=cmd_number, parser=sub)

    sub = subs.add_parser("polynomial", help="print one poly-Bernoulli polynomial")
    sub.add_argument("-n", type=int, required=True, help="lower index")
    sub.add_argument("-k", type=int, required=True, help="upper index (any integer)")
    sub.add_argument(
        "--generalized",
        action="store_true",
        help="keep a, b, c formal; prints a polynomial in x, ln(a), ln(b), ln(c)",
    )
    _add_format(sub)
    sub.set_defaults(func=cmd_polynomial, parser=sub)

    sub = subs.add_parser("table", help="print a grid of plain values")
    sub.add_argument("--n-max", "--nmax", type=int, default=8)
    sub.add_argument("--k-min", "--kmin", type=int, default=-3)
    sub.add_argument("--k-max", "--kmax", type=int, default=3)
    _add_format(sub, choices=("text", "json", "csv"))
    sub.set_defaults(func=cmd_table, parser=sub)

    sub = subs.add_parser("verify", help="machine-check the identity suites")
    sub.add_argument("--suite", choices=SUITE_NAMES, default="all")
    sub.add_argument(
        "--n-max", "--nmax", type=int, default=None, help="override the suite default"
    )
    sub.add_argument("--k-min", "--kmin", type=int, default=None)
    sub.add_argument("--k-max", "--kmax", type=int, default=None)
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub.add_argument("--order-margin", type=int, default=DEFAULT_ORDER_MARGIN)
    _add_format(sub)
    sub.set_defaults(func=cmd_verify, parser=sub)

    sub = subs.add_parser(
        "eval", help="evaluate at rational points (generalized goes through the series)"
    )
    target = sub.add_mutually_exclusive_group(required=True)
    target.add_argument("--number", type=int, metavar="N", help="evaluate the n=N value")
    target.add_argument("--poly", type=int, metavar="N", help="evaluate the n=N polynomial")
    sub.add_argument("-k", type=int, required=True)
    sub.add_argument("--generalized", action="store_true")
    sub.add_argument("--ln-a", type=parse_rational, default=None, metavar="Q")
    sub.add_argument("--ln-b", type=parse_rational, default=None, metavar="Q")
    sub.add_argument("--ln-c", type=parse_rational, default=None, metavar="Q")
    sub.add_argument("-x", "--x", dest="x", type=parse_rational, default=None, metavar="Q")
    sub.add_argument("--order-margin", type=int, default=DEFAULT_ORDER_MARGIN)
    sub.add_argument(
        "--show-series", action="store_true", help="also print the backing series"
    )
    _add_format(sub)
    sub.set_defaults(func=cmd_eval, parser=sub)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
