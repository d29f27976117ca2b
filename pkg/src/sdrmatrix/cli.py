"""Command-line interface.

Exit codes: 0 the operation succeeded and the property held, 1 it succeeded
and the property failed, 2 usage/parse/precondition error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import algebra, harness, minors, riordan, sdr
from .rational import format_rational
from .triangle import Window, build_triangle, materialize, save_window

log = logging.getLogger("sdrmatrix")

DEFAULT_MAX_CELLS = 10 ** 7


class CliError(Exception):
    pass


def _flag(flag, value, fn, *args):
    try:
        return fn(value, *args)
    except (ValueError, IndexError, OSError, ZeroDivisionError) as e:
        raise CliError(f"{flag} {value!r}: {e}") from None


def _window(flag, spec, rows) -> Window:
    return _flag(flag, spec, lambda s: materialize(build_triangle(s), rows))


def _max_cells() -> int:
    raw = os.environ.get("SDR_MAX_CELLS")
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"SDR_MAX_CELLS={raw!r} is not an integer") from None


def format_window(w: Window) -> str:
    cells = [[format_rational(x) for x in row] for row in w.rows]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _write_json(path, obj) -> None:
    Path(path).write_text(json.dumps(obj, indent=1) + "\n")


def _emit_window(w: Window, args) -> int:
    print(format_window(w))
    if args.json:
        save_window(w, args.json)
    return 0


def _print_report(rep: sdr.SdrReport) -> None:
    print(f"order {rep.order} on {rep.rows} rows: {rep.verdict} "
          f"({rep.cells_checked} identities, {rep.violations_total} violations)")
    for v in rep.violations[:10]:
        print(f"  p={v.p} r={v.r} n={v.n} k={v.k}: "
              f"lhs {format_rational(v.lhs)} != rhs {format_rational(v.rhs)}")
    if rep.violations_total > 10:
        print(f"  ... {rep.violations_total - 10} more")


# --------------------------------------------------------------------------
# subcommands


def cmd_check(args) -> int:
    w = _window("--tri", args.tri, args.rows)
    if args.rows < args.order:
        raise CliError(f"--rows {args.rows} is smaller than --order {args.order}")
    rep = _flag("--order", args.order, lambda m: sdr.check_order(
        w, m, max_cells=_max_cells(), shortcut=args.shortcut))
    _print_report(rep)
    if args.json:
        _write_json(args.json, rep.to_json())
    return 0 if rep.passed else 1


def cmd_max_order(args) -> int:
    w = _window("--tri", args.tri, args.rows)
    m, rep = _flag("--cap", args.cap, lambda c: sdr.max_order(w, c, max_cells=_max_cells()))
    print(f"max verified order: {m}" + (" (not even SDR_3)" if m == 2 else ""))
    _print_report(rep)
    if args.json:
        _write_json(args.json, {"max_order": m, "report": rep.to_json()})
    return 0


def cmd_invert(args) -> int:
    w = _window("--tri", args.tri, args.rows)
    return _emit_window(_flag("--tri", w, algebra.tri_inverse), args)


def cmd_power(args) -> int:
    w = _window("--tri", args.tri, args.rows)
    return _emit_window(_flag("--exp", args.exp, lambda j: algebra.matrix_power(w, j)), args)


def cmd_hadamard(args) -> int:
    if args.inv:
        if args.a or args.b:
            raise CliError("--inv cannot be combined with --a/--b")
        t = _flag("--inv", args.inv, lambda s: algebra.hadamard_inverse(build_triangle(s)))
        w = _flag("--inv", args.inv, lambda s: materialize(t, args.rows))
    else:
        if not (args.a and args.b):
            raise CliError("hadamard needs both --a and --b, or --inv")
        a = _flag("--a", args.a, build_triangle)
        b = _flag("--b", args.b, build_triangle)
        w = _flag("--a/--b", f"{args.a} o {args.b}",
                  lambda _: materialize(algebra.hadamard_product(a, b), args.rows))
    return _emit_window(w, args)


def cmd_minor(args) -> int:
    w = _window("--tri", args.tri, args.rows)
    return _emit_window(_flag("--j", args.j, lambda j: minors.minor_triangle(w, j)), args)


def _pair(dflag, d, hflag, h, rows):
    if d is None or h is None:
        raise CliError(f"riordan needs both {dflag} and {hflag}")
    ds = _flag(dflag, d, riordan.parse_series, rows)
    hs = _flag(hflag, h, riordan.parse_series, rows)
    return _flag(f"{dflag}/{hflag}", f"({d}, {h})", lambda _: riordan.RiordanPair(ds, hs))


def cmd_riordan(args) -> int:
    x = _pair("--d", args.d, "--h", args.h, args.rows)
    if args.action == "window":
        pair = x
    elif args.action == "mul":
        y = _pair("--d2", args.d2, "--h2", args.h2, args.rows)
        pair = _flag("--d2/--h2", "product", lambda _: riordan.riordan_mul(x, y))
    else:
        pair = _flag("--h", args.h, lambda _: riordan.riordan_inverse(x))
    print(f"d = {pair.d}")
    print(f"h = {pair.h}")
    w = riordan.riordan_window(pair, args.rows)
    return _emit_window(w, args)


def cmd_conjecture(args) -> int:
    records = _flag("--family", args.family, lambda fam: harness.run_harness(
        args.conjecture, fam, args.trials, args.rows, args.seed, j=args.j))
    for fam, counts in harness.summarize(records).items():
        print(f"{fam:22s} " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    candidates = [r for r in records if r.verdict == "counterexample-candidate"]
    for r in candidates:
        print(f"candidate: {r.case.family} seed {r.case.seed} ({r.transform})")
    if args.json:
        _write_json(args.json, [r.to_json() for r in records])
    return 1 if candidates else 0


def cmd_print(args) -> int:
    return _emit_window(_window("--tri", args.tri, args.rows), args)


# --------------------------------------------------------------------------


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sdrmatrix", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        return p

    def json_opt(p):
        p.add_argument("--json", metavar="PATH", help="write the result as JSON")

    p = add("check", cmd_check, "check SDR order m on a window")
    p.add_argument("--tri", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--rows", type=_positive, required=True)
    p.add_argument("--shortcut", action="store_true",
                   help="for zero-free windows, stop after level 2 when it passes")
    json_opt(p)

    p = add("max-order", cmd_max_order, "largest verified SDR order up to a cap")
    p.add_argument("--tri", required=True)
    p.add_argument("--rows", type=_positive, required=True)
    p.add_argument("--cap", type=int, required=True)
    json_opt(p)

    p = add("invert", cmd_invert, "exact matrix inverse")
    p.add_argument("--tri", required=True)
    p.add_argument("--rows", type=_positive, required=True)
    json_opt(p)

    p = add("power", cmd_power, "matrix power (any integer exponent)")
    p.add_argument("--tri", required=True)
    p.add_argument("--exp", type=int, required=True)
    p.add_argument("--rows", type=_positive, required=True)
    json_opt(p)

    p = add("hadamard", cmd_hadamard, "Hadamard product or Hadamard inverse")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--inv")
    p.add_argument("--rows", type=_positive, required=True)
    json_opt(p)

    p = add("minor", cmd_minor, "contiguous j x j minor transform")
    p.add_argument("--tri", required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--rows", type=_positive, required=True, help="input window rows")
    json_opt(p)

    p = add("riordan", cmd_riordan, "Riordan array window / product / inverse")
    p.add_argument("action", choices=["window", "mul", "inverse"])
    p.add_argument("--d", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--d2")
    p.add_argument("--h2")
    p.add_argument("--rows", type=_positive, required=True)
    json_opt(p)

    p = add("conjecture", cmd_conjecture, "seeded search for closure counterexamples")
    p.add_argument("conjecture", choices=["inverse", "minor"])
    p.add_argument("--family", required=True, help="family name or 'all'")
    p.add_argument("--trials", type=_positive, default=50)
    p.add_argument("--rows", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--j", type=_positive, default=2)
    json_opt(p)

    p = add("print", cmd_print, "print a window")
    p.add_argument("--tri", required=True)
    p.add_argument("--rows", type=_positive, required=True)
    json_opt(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CliError as e:
        print(f"sdrmatrix {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
