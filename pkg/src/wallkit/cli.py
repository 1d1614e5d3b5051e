"""``wallkit`` command line: walls, bounds, diagram, verify.

Exit codes: 0 ok, 1 verify mismatch, 2 usage or parse error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .bounds import GIESEKER_CUTOFF_ASSUMPTION, bound_report, lower_cutoff
from .chern import TwistParameter, rat_str
from .conditions import TargetClass
from .enumeration import (BudgetExceeded, CatalogFormatError, EnumerationOptions, WallCatalog,
                          distinct_walls, enumerate_walls)
from .golden import diff_catalogs, load_fixture
from .geometry import View, default_view, render_svg
from .plane import PlaneChern, induced_alpha0_sq

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    if "." in text or "e" in text.lower():
        raise argparse.ArgumentTypeError(f"expected an exact rational like 9/16, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def _plane(text: str) -> PlaneChern:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("plane character must be 'r,c,d'")
    return PlaneChern.of(*(_fraction(p.strip()) for p in parts))


def _add_target(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--R", type=int, default=0, help="rank parameter R >= 0 (default 0)")
    p.add_argument("--D", type=int, required=required, help="degree D >= 1")
    p.add_argument("--beta", default="0", help="exact twist: '0' or '1/k'")


def _add_enum(p: argparse.ArgumentParser) -> None:
    p.add_argument("--min-alpha0-sq", type=_fraction, default=None,
                   help="keep walls with alpha0^2 >= this value")
    p.add_argument("--cutoff", choices=["killing", "gieseker"], default=None,
                   help="killing: alpha0^2 >= 1 (beta=0 only); gieseker: alpha0^2 > (1-beta)^2")
    p.add_argument("--strict-n2", action="store_true", help="use '<' for the upper bound of N2")
    p.add_argument("--integrality", choices=["published", "untwisted"], default="published",
                   help="beta=1/k integrality test: published expressions or exact untwisted check")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output does not depend on it)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wallkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    w = sub.add_parser("walls", help="enumerate numerical walls")
    _add_target(w)
    _add_enum(w)
    w.add_argument("--format", choices=["json", "csv", "table"], default="json")
    w.add_argument("--out", default=None, help="write to this file instead of stdout")
    w.add_argument("--plane", type=_plane, action="append", default=[], metavar="r,c,d",
                   help="report the wall induced by a plane subobject character (repeatable)")

    b = sub.add_parser("bounds", help="closed-form wall bounds")
    b.add_argument("--D", type=int, required=True)
    b.add_argument("--beta", default="0")
    b.add_argument("--format", choices=["json", "table"], default="json")
    b.add_argument("--out", default=None)

    g = sub.add_parser("diagram", help="SVG picture of the walls")
    _add_target(g)
    _add_enum(g)
    g.add_argument("--out", required=True)
    g.add_argument("--alpha-max", type=float, default=None)
    g.add_argument("--s-max", type=float, default=None)

    v = sub.add_parser("verify", help="compare a fresh enumeration with a fixture")
    _add_target(v, required=False)
    _add_enum(v)
    v.add_argument("--fixture", required=True, help="fixture name or path")
    v.add_argument("--format", choices=["json", "table"], default="table")
    return parser


def _twist(text: str) -> TwistParameter:
    try:
        return TwistParameter.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc))


def _target(args) -> TargetClass:
    try:
        return TargetClass(args.R, args.D)
    except ValueError as exc:
        raise UsageError(str(exc))


def _options(args, tw: TwistParameter) -> EnumerationOptions:
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    if args.cutoff and args.min_alpha0_sq is not None:
        raise UsageError("--cutoff and --min-alpha0-sq are mutually exclusive")
    minimum, exclusive = args.min_alpha0_sq, False
    if args.cutoff == "killing":
        if tw.beta != 0:
            raise UsageError("--cutoff killing applies to beta = 0 only")
        minimum = Fraction(1)
    elif args.cutoff == "gieseker":
        try:
            minimum = lower_cutoff(tw.beta).alpha0_sq
        except ValueError as exc:
            raise UsageError(str(exc))
        exclusive = True
        print(f"note: --cutoff gieseker {GIESEKER_CUTOFF_ASSUMPTION}", file=sys.stderr)
    return EnumerationOptions(min_alpha0_sq=minimum, min_exclusive=exclusive,
                              strict_upper_n2=args.strict_n2, integrality=args.integrality,
                              workers=args.jobs)


def _ranks_text(ranks: Sequence[int]) -> str:
    if len(ranks) > 5 and list(ranks) == list(range(ranks[0], ranks[-1] + 1)):
        return f"[{ranks[0]}..{ranks[-1]}]"
    return "[" + ",".join(map(str, ranks)) + "]"


def format_catalog(cat: WallCatalog, fmt: str) -> str:
    if fmt == "json":
        return cat.to_json()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["ranks", "c", "d", "e", "alpha0_sq"])
        for c in cat.candidates:
            writer.writerow([" ".join(map(str, c.ranks)), rat_str(c.c), rat_str(c.d),
                             rat_str(c.e), rat_str(c.alpha0_sq)])
        return buf.getvalue()
    rows = [("ranks", "c", "d", "e", "alpha0^2", "alpha0")]
    for c in cat.candidates:
        rows.append((_ranks_text(c.ranks), rat_str(c.c), rat_str(c.d), rat_str(c.e),
                     rat_str(c.alpha0_sq), f"{float(c.alpha0_sq) ** 0.5:.4f}"))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = [f"# v = ({-cat.target.R}, 0, {cat.target.D}, 0), beta = {cat.twist}"]
    lines += ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    walls = ", ".join(rat_str(a) for a in distinct_walls(cat))
    lines.append(f"# {len(cat)} candidates; distinct alpha0^2: {walls or 'none'}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run_walls(args) -> int:
    tw = _twist(args.beta)
    cat = enumerate_walls(_target(args), tw, _options(args, tw))
    _emit(format_catalog(cat, args.format), args.out)
    walls = set(distinct_walls(cat))
    for p in args.plane:
        a = induced_alpha0_sq(p, tw.beta)
        name = f"({rat_str(p.r)},{rat_str(p.c)},{rat_str(p.d)})"
        if a is None:
            print(f"plane {name}: no wall (twisted ch1 <= 0)", file=sys.stderr)
        else:
            where = "in catalog (plane-induced)" if a in walls else "not in catalog"
            print(f"plane {name}: induced alpha0^2 = {rat_str(a)}, {where}", file=sys.stderr)
    return EXIT_OK


def run_bounds(args) -> int:
    if args.D is None or args.D < 1:
        raise UsageError("--D must be >= 1")
    report = bound_report(args.D, _twist(args.beta))
    data = report.to_dict()
    if args.format == "json":
        text = json.dumps(data, indent=2) + "\n"
    else:
        text = "".join(f"{k:28s} {'-' if v is None else v}\n" for k, v in data.items())
    _emit(text, args.out)
    return EXIT_OK


def run_diagram(args) -> int:
    tw = _twist(args.beta)
    target = _target(args)
    cat = enumerate_walls(target, tw, _options(args, tw))
    view = default_view(cat)
    view = View(args.alpha_max or view.alpha_max, args.s_max or view.s_max)
    try:
        render_svg(cat, bound_report(target.D, tw), view, args.out)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}")
    return EXIT_OK


def run_verify(args) -> int:
    try:
        expected = load_fixture(args.fixture)
    except CatalogFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.D is None:
        target, tw = expected.target, expected.twist
        opts = dataclasses.replace(expected.options, workers=args.jobs, budget=None)
    else:
        tw = _twist(args.beta)
        target = _target(args)
        opts = _options(args, tw)
    computed = enumerate_walls(target, tw, opts)
    diff = diff_catalogs(expected, computed)
    if args.format == "json":
        sys.stdout.write(json.dumps(diff.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(diff.report() + "\n")
    return EXIT_OK if diff.ok else EXIT_MISMATCH


COMMANDS = {"walls": run_walls, "bounds": run_bounds, "diagram": run_diagram, "verify": run_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc} (raise it with $WALLKIT_BUDGET)", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
