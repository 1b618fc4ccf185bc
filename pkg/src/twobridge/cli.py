"""Command line: ``twobridge inv | census | table | verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 the
exhaustive state sweep would exceed ``--budget``. Results go to standard
output, diagnostics to standard error. JSON carries exact rationals as
``"num/den"`` strings.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import cf, census, formulas, invariants, oracle, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _colour(text: str, code: str, stream) -> str:
    if os.environ.get("NO_COLOR") is not None or not getattr(stream, "isatty", lambda: False)():
        return text
    return f"\033[{code}m{text}\033[0m"


# -- inv ------------------------------------------------------------------

def _parse_input(text: str) -> Fraction:
    try:
        return cf.normalize(cf.parse_fraction(text))
    except (cf.ContinuedFractionError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None


def invariant_record(f: Fraction, use_oracle: bool = False, budget: int = oracle.DEFAULT_BUDGET) -> tuple[dict, bool]:
    """JSON record for ``inv`` and whether every requested cross-check agreed.

    Two-component links always go through the oracle for their crosscap
    number. Raises :class:`oracle.BudgetExceeded` when the sweep is too big.
    """
    report = invariants.formula_report(f)
    need_oracle = use_oracle or report.crosscap is None
    agree = True
    res = None
    if need_oracle:
        res = oracle.oracle_invariants(oracle.diagram_for(f), budget)
        if report.crosscap is None:
            report = invariants.InvariantReport(
                report.fraction, report.crossing_number, report.link_class, report.w, report.z,
                report.unoriented_genus, res.crosscap, invariants.Method.ORACLE)
        agree = res.gamma_unoriented == report.unoriented_genus and res.crosscap == report.crosscap
    record = report.as_record()
    record["type"] = report.link_class.value
    record["add"] = cf.format_cf("add", cf.to_positive_additive(f))
    record["sub"] = cf.format_cf("sub", cf.to_positive_subtractive(f))
    record["even"] = (cf.format_cf("even", cf.to_even_subtractive(f))
                      if report.link_class is cf.LinkClass.KNOT else None)
    if use_oracle:
        record["oracle"] = res.as_record()
        record["methods_agree"] = agree
    return record, agree


def cmd_inv(args, out) -> int:
    f = _parse_input(args.input)
    record, agree = invariant_record(f, args.oracle, args.budget)
    print(_dump(record), file=out)
    if not agree:
        print("formula and oracle disagree", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# -- census ---------------------------------------------------------------

def cmd_census(args, out) -> int:
    family = census.Family(args.family)
    if args.c < (2 if family in (census.Family.K, census.Family.KP) else 0):
        raise UsageError(f"--c {args.c} is out of range for family {family.value}")
    tuples = census.enumerate_family(args.c, family)
    if args.emit == "tuples":
        for t in tuples:
            print(",".join(str(x) for x in t), file=out)
        return EXIT_OK
    record = {"c": args.c, "family": family.value, "count": len(tuples)}
    if family in (census.Family.K, census.Family.KP) and tuples:
        wz = [invariants.compute_wz(t) for t in tuples]
        record["W"] = sum(x.w for x in wz)
        record["Z"] = sum(x.z for x in wz)
    print(_dump(record), file=out)
    return EXIT_OK


# -- table ----------------------------------------------------------------

def row_record(row: formulas.AggregateRow) -> dict:
    rec = {}
    for col in formulas.TABLE_COLUMNS:
        value = getattr(row, col)
        rec[col] = _rational(value) if isinstance(value, Fraction) else value
    return rec


def render_table(lo: int, hi: int, fmt: str) -> str:
    records = [row_record(formulas.aggregate_row(c)) for c in range(lo, hi + 1)]
    if fmt == "json":
        return _dump(records) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=formulas.TABLE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buf.getvalue()


def cmd_table(args, out) -> int:
    if args.lo < 3 or args.hi < args.lo:
        raise UsageError("need 3 <= --from <= --to")
    text = render_table(args.lo, args.hi, args.format)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


# -- verify ---------------------------------------------------------------

def cmd_verify(args, out) -> int:
    if args.max_c < verify.MIN_MAX_C:
        raise UsageError(f"--max-c must be at least {verify.MIN_MAX_C}, got {args.max_c}")
    steps = verify.plan(args.max_c, args.oracle_max_c, args.budget)
    failed = 0
    for name, scope, thunk in steps:
        bad = thunk()
        if bad is None:
            print(f"{_colour('PASS', '32', out)}  {name} [{scope}]", file=out)
        else:
            failed += 1
            print(f"{_colour('FAIL', '31', out)}  {name} [{scope}]: {bad}", file=out)
    print(f"{len(steps) - failed}/{len(steps)} checks passed", file=out)
    return EXIT_FAIL if failed else EXIT_OK


# -- entry point ----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="twobridge", description="Unoriented genus and crosscap number of 2-bridge links.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    inv = sub.add_parser("inv", help="invariants of one 2-bridge link")
    inv.add_argument("input", help='"p/q" or a tagged continued fraction such as "sub:[4,4,2,2,3]"')
    inv.add_argument("--oracle", action="store_true", help="cross-check with the exhaustive state sum")
    inv.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET,
                     help="largest crossing number the state sweep may take (2^N states)")
    inv.set_defaults(func=cmd_inv)

    cen = sub.add_parser("census", help="enumerate a tuple family")
    cen.add_argument("--c", type=int, required=True)
    cen.add_argument("--family", choices=[f.value for f in census.Family], required=True)
    cen.add_argument("--emit", choices=["tuples", "counts"], default="tuples")
    cen.set_defaults(func=cmd_census)

    tab = sub.add_parser("table", help="per-crossing-number totals and averages")
    tab.add_argument("--from", dest="lo", type=int, required=True)
    tab.add_argument("--to", dest="hi", type=int, required=True)
    tab.add_argument("--format", choices=["csv", "json"], default="csv")
    tab.add_argument("--output", help="write to this file instead of standard output")
    tab.set_defaults(func=cmd_table)

    ver = sub.add_parser("verify", help="check every identity over a range of crossing numbers")
    ver.add_argument("--max-c", type=int, default=16)
    ver.add_argument("--oracle-max-c", type=int, default=10)
    ver.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"twobridge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except oracle.BudgetExceeded as exc:
        print(f"twobridge: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
