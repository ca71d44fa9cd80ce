"""Command-line interface.

    cfkinf invariants EXPR
    cfkinf upsilon EXPR [--samples N | --breakpoints]
    cfkinf complex EXPR [--export PATH | --standard-form]
    cfkinf verify-paper
"""
from __future__ import annotations

import argparse
import csv
import logging
import sys
from pathlib import Path

from . import checks
from .cfk import dumps
from .invariants import DEFAULT_CAP, report, upsilon_knot
from .knots import build
from .pl import format_rational
from .reduce import homology_summand, standard_form


def _cap(text: str) -> int | None:
    return None if text == "none" else int(text)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cfkinf", description="Exact knot Floer concordance invariants.")
    p.add_argument("-v", "--verbose", action="store_true", help="log simplification details")
    sub = p.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", help="tau, epsilon, a1, Upsilon and its max slope")
    inv.add_argument("expr")
    inv.add_argument("--cap", type=_cap, default=DEFAULT_CAP,
                     help="grading-0 generator cap per summand ('none' to lift)")

    ups = sub.add_parser("upsilon", help="exact Upsilon of a knot")
    ups.add_argument("expr")
    mode = ups.add_mutually_exclusive_group()
    mode.add_argument("--samples", type=int, metavar="N", help="CSV rows at t = 2k/N")
    mode.add_argument("--breakpoints", action="store_true", help="exact breakpoints (default)")
    ups.add_argument("--cap", type=_cap, default=DEFAULT_CAP)

    cx = sub.add_parser("complex", help="build the complex of a knot")
    cx.add_argument("expr")
    mode = cx.add_mutually_exclusive_group()
    mode.add_argument("--export", metavar="PATH", help="write the complex document ('-' for stdout)")
    mode.add_argument("--standard-form", action="store_true",
                      help="standard form of the homology-carrying summand")

    sub.add_parser("verify-paper", help="run the pinned reference checks")
    return p


def _invariants(args, out) -> int:
    out.write(report(args.expr, cap=args.cap).dumps() + "\n")
    return 0


def _upsilon(args, out) -> int:
    f = upsilon_knot(args.expr, cap=args.cap)
    if args.samples is not None:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["t", "value"])
        for t, v in f.sample(args.samples):
            writer.writerow([format_rational(t), format_rational(v)])
    else:
        for t, v in f.breakpoints:
            out.write(f"({format_rational(t)}, {format_rational(v)})\n")
    return 0


def _complex(args, out) -> int:
    C = build(args.expr)
    if args.standard_form:
        comp, x0 = homology_summand(C)
        form = standard_form(comp)
        out.write(f"{form}\n")
        return 0 if form else 1
    text = dumps(C)
    if args.export and args.export != "-":
        Path(args.export).write_text(text)
        out.write(f"wrote {len(C)} generators and {len(C.arrows)} arrows to {args.export}\n")
    else:
        out.write(text)
    return 0


def _verify(args, out) -> int:
    failed = 0
    group = None
    for check, ok, actual in checks.run_all():
        if check.group != group:
            group = check.group
            out.write(f"{group}\n")
        out.write(f"  {'PASS' if ok else 'FAIL'}  {check.name}\n")
        if not ok:
            failed += 1
            out.write(f"        expected {check.expected!r}\n        got      {actual!r}\n")
    total = len(checks.manifest())
    out.write(f"{total - failed}/{total} checks passed\n")
    return 1 if failed else 0


COMMANDS = {"invariants": _invariants, "upsilon": _upsilon, "complex": _complex, "verify-paper": _verify}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except (ValueError, ArithmeticError, OSError) as err:
        print(f"cfkinf: error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
