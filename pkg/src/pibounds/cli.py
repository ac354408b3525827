"""Command-line surface.

Subcommands: bounds, table, cf, approx, series, export-fig3.  All numeric
output is printed from exact fixed-point endpoints or exact rationals, so
identical invocations are byte-identical.

Exit codes: 0 success, 2 argument error, 3 precision/resource failure,
4 no valid bound under the denominator cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import contfrac, polygon, series
from .exactnum import PI_REFERENCE, Interval, Rational, decimal_str

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECISION = 3
EXIT_NO_BOUND = 4


def _enclosure_cells(iv: Interval, digits: int) -> tuple[str, str]:
    """Outward-rounded endpoint strings: lo floored, hi ceiled."""
    return iv.decimal_bounds(digits)


def _fraction(q: Rational) -> str:
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

def cmd_bounds(args: argparse.Namespace) -> None:
    bounds = polygon.bounds_at(args.doublings, args.digits, args.max_precision)
    c_lo, c_hi = _enclosure_cells(bounds.lower, args.digits)
    t_lo, t_hi = _enclosure_cells(bounds.upper, args.digits)
    if args.format == "csv":
        print("n,c_lo,c_hi,C_lo,C_hi")
        print(f"{bounds.n},{c_lo},{c_hi},{t_lo},{t_hi}")
    elif args.format == "json":
        print(json.dumps({
            "command": "bounds",
            "doublings": args.doublings,
            "digits": args.digits,
            "n": bounds.n,
            "c_lo": c_lo, "c_hi": c_hi,
            "C_lo": t_lo, "C_hi": t_hi,
        }))
    else:
        print(f"n = {bounds.n}")
        print(f"c_n in [{c_lo}, {c_hi}]")
        print(f"C_n in [{t_lo}, {t_hi}]")


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _table_rows(max_doublings: int, digits: int,
                max_precision: int) -> list[dict[str, object]]:
    rows = []
    for k in range(max_doublings + 1):
        bounds = polygon.bounds_at(k, digits, max_precision)
        c_lo, c_hi = _enclosure_cells(bounds.lower, digits)
        t_lo, t_hi = _enclosure_cells(bounds.upper, digits)
        rows.append({
            "n": bounds.n,
            "c_form": polygon.nested_radical_form(bounds.n, "c").render(),
            "c_lo": c_lo, "c_hi": c_hi,
            "C_form": polygon.nested_radical_form(bounds.n, "C").render(),
            "C_lo": t_lo, "C_hi": t_hi,
        })
    return rows


def cmd_table(args: argparse.Namespace) -> None:
    rows = _table_rows(args.max_doublings, args.digits, args.max_precision)
    if args.format == "csv":
        print("n,c_form,c_lo,c_hi,C_form,C_lo,C_hi")
        for r in rows:
            print(f"{r['n']},{r['c_form']},{r['c_lo']},{r['c_hi']},"
                  f"{r['C_form']},{r['C_lo']},{r['C_hi']}")
    elif args.format == "json":
        print(json.dumps({
            "command": "table",
            "max_doublings": args.max_doublings,
            "digits": args.digits,
            "rows": rows,
        }, ensure_ascii=False))
    else:
        header = ("n", "c_n closed form", "c_n enclosure",
                  "C_n closed form", "C_n enclosure")
        cells = [header] + [
            (str(r["n"]), str(r["c_form"]), f"[{r['c_lo']}, {r['c_hi']}]",
             str(r["C_form"]), f"[{r['C_lo']}, {r['C_hi']}]") for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(5)]
        for row in cells:
            print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


# ---------------------------------------------------------------------------
# cf
# ---------------------------------------------------------------------------

def _print_convergents(convs: list[contfrac.Convergent],
                       verdicts: list[str] | None = None) -> None:
    print("convergents:")
    width = max(len(_fraction(c.value)) for c in convs)
    for i, conv in enumerate(convs):
        line = f"  {conv.index}: {_fraction(conv.value).ljust(width)}"
        if verdicts is not None:
            line += f"  {verdicts[i]}"
        print(line.rstrip())


def cmd_cf(args: argparse.Namespace) -> None:
    if args.value is not None:
        q = contfrac.parse_decimal(args.value)
        cf = contfrac.expand(q)
        print(f"value = {args.value} = {_fraction(q)}")
        print(f"coefficients = {cf}")
        _print_convergents(contfrac.convergents(cf))
        return
    exp = contfrac.bound_expansion(args.doublings, args.digits,
                                   args.from_bound,
                                   max_precision=args.max_precision)
    label = "c_n" if exp.which == "lower" else "C_n"
    print(f"bound = {exp.which} ({label}), n = {exp.n}, digits = {exp.digits}")
    print(f"decimal = {exp.decimal_text} = {_fraction(exp.decimal)}")
    print(f"coefficients = {exp.cf}")
    _print_convergents([c.convergent for c in exp.candidates],
                       [c.verdict.value for c in exp.candidates])


# ---------------------------------------------------------------------------
# approx
# ---------------------------------------------------------------------------

def _candidate_summary(exp: contfrac.BoundExpansion) -> str:
    parts = []
    for cand in exp.candidates:
        note = "" if cand.within_cap else " (over cap)"
        parts.append(f"{_fraction(cand.convergent.value)} "
                     f"{cand.verdict.value}{note}")
    return "; ".join(parts)


def cmd_approx(args: argparse.Namespace) -> None:
    result = contfrac.certified_rational_bounds(
        args.doublings, args.digits, args.den_cap, args.max_precision)
    print(f"n = {result.n}, den_cap = {result.den_cap}")
    print(f"lower candidates (from {result.lower_expansion.decimal_text}): "
          f"{_candidate_summary(result.lower_expansion)}")
    print(f"upper candidates (from {result.upper_expansion.decimal_text}): "
          f"{_candidate_summary(result.upper_expansion)}")
    print(f"lower = {_fraction(result.lower)} (certified below the c_n enclosure)")
    print(f"upper = {_fraction(result.upper)} (certified above the C_n enclosure)")
    print(f"{_fraction(result.lower)} < pi < {_fraction(result.upper)}")


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------

def _estimate_cell(est: Rational | Interval, digits: int) -> str:
    if isinstance(est, Interval):
        lo, hi = est.decimal_bounds(digits)
        return f"[{lo}, {hi}]"
    return f"{decimal_str(est, digits)} ({est})"


def cmd_series(args: argparse.Namespace) -> None:
    rows = series.convergence_report([args.series], args.terms, args.digits)
    for row in rows:
        print(f"{row.series}  N={row.terms}  "
              f"{_estimate_cell(row.estimate, args.digits)}  "
              f"error={row.error_vs_reference}")


# ---------------------------------------------------------------------------
# export-fig3
# ---------------------------------------------------------------------------

_REFERENCES = (
    ("22/7", Rational(22, 7)),
    ("223/71", Rational(223, 71)),
    ("245/78", Rational(245, 78)),
    ("pi_reference", PI_REFERENCE),
)


def cmd_export_fig3(args: argparse.Namespace) -> None:
    print("n,c_n,c_n_hi,C_n,C_n_hi")
    for k in range(args.max_doublings + 1):
        bounds = polygon.bounds_at(k, args.digits, args.max_precision)
        c_lo, c_hi = _enclosure_cells(bounds.lower, args.digits)
        t_lo, t_hi = _enclosure_cells(bounds.upper, args.digits)
        print(f"{bounds.n},{c_lo},{c_hi},{t_lo},{t_hi}")
    for label, value in _REFERENCES:
        cell = decimal_str(value, args.digits)
        print(f"{label},{cell},{cell},{cell},{cell}")


# ---------------------------------------------------------------------------
# parser / dispatch
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pibounds",
        description="Certified rational and interval bounds for pi.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_precision_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-precision", type=int, default=polygon.DEFAULT_MAX_PRECISION,
                       help="cap on working precision escalation (decimal digits)")

    p = sub.add_parser("bounds", help="perimeter enclosures after k doublings")
    p.add_argument("--doublings", type=int, required=True)
    p.add_argument("--digits", type=int, default=8)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    add_precision_flag(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="closed forms and values for k = 0..K")
    p.add_argument("--max-doublings", type=int, required=True)
    p.add_argument("--digits", type=int, default=8)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    add_precision_flag(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("cf", help="continued fraction expansion and convergents")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--value", help="positive decimal literal to expand")
    source.add_argument("--from-bound", choices=("lower", "upper"),
                        help="expand a perimeter bound instead of a literal")
    p.add_argument("--doublings", type=int, default=5)
    p.add_argument("--digits", type=int, default=8)
    add_precision_flag(p)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("approx", help="certified rational bracket of pi")
    p.add_argument("--doublings", type=int, required=True)
    p.add_argument("--digits", type=int, default=8)
    p.add_argument("--den-cap", type=int, default=100)
    add_precision_flag(p)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("series", help="classical series estimates of pi")
    p.add_argument("--series", choices=series.SERIES_NAMES, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--digits", type=int, default=8)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("export-fig3",
                       help="CSV of enclosures per n plus reference constants")
    p.add_argument("--max-doublings", type=int, required=True)
    p.add_argument("--digits", type=int, default=8)
    add_precision_flag(p)
    p.set_defaults(func=cmd_export_fig3)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except (contfrac.MalformedDecimal, contfrac.NonPositiveValue,
            polygon.UnsupportedSideCount, series.UnsupportedSeriesName,
            series.InvalidTermCount, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (polygon.PrecisionExhausted, polygon.ResourceLimit) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except contfrac.NoValidBound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_BOUND
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
