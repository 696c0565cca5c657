"""Command-line front end; exposes the package as `lattice-stairs`.

Subcommands:
  seq beatty|check|blocks    step sequences and the 0,1-sequence predicates
  stair points|render        staircase/corner windows, ASCII rendering
  gf cone|triangle|carlitz   short rational generating functions
  white check|scan           tetrahedron emptiness/cleanness classification
  verify <suite>|all         the brute-force oracle sweeps

Exit codes: 0 ok, 1 domain error, 2 usage error.  Human-readable text goes
to stdout by default; --json switches stdout to a machine-readable payload
(schemas documented in the README).  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import barvinok, carlitz, verify, white
from .errors import DomainError
from .genfun import gf_expand, gf_to_json_dict, gf_to_text, generic_direction
from .numeric import SlopePair
from .sequences import (PeriodicIntSeq, beatty, block_sequence,
                        is_evenly_distributed, is_recursively_balanced,
                        is_sturmian, is_swap_symmetric)
from .staircase import LineSpec, render, staircase_window


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        json.dump(payload, sys.stdout)
        sys.stdout.write("\n")
    else:
        print(text)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)


def _slope(args) -> SlopePair:
    return SlopePair(args.a, args.b)


# -- seq ----------------------------------------------------------------------

def _cmd_seq_beatty(args) -> int:
    sp = _slope(args)
    values = [beatty(sp, n) for n in range(getattr(args, "from"), args.to + 1)]
    payload = {"a": sp.a, "b": sp.b, "from": getattr(args, "from"), "to": args.to,
               "values": values}
    _emit(args, payload, " ".join(str(v) for v in values))
    return 0


def _parse_period(text: str) -> PeriodicIntSeq:
    entries = [int(tok) for tok in text.replace(",", " ").split()]
    return PeriodicIntSeq(tuple(entries))


def _cmd_seq_check(args) -> int:
    s = _parse_period(args.period)
    answers = {
        "sturmian": is_sturmian(s),
        "recursively_balanced": is_recursively_balanced(s),
        "evenly_distributed": is_evenly_distributed(s),
        "swap_symmetric": is_swap_symmetric(s),
    }
    payload = {
        "period": list(s.period),
        "minimal_period": s.minimal_period_length,
        "ones": s.ones(),
        **answers,
        "agree": len(set(answers.values())) == 1,
    }
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(args, payload, text)
    return 0


def _cmd_seq_blocks(args) -> int:
    s = _parse_period(args.period)
    blocks = block_sequence(s)
    payload = {"period": list(s.period), "blocks": list(blocks.period)}
    _emit(args, payload, " ".join(str(v) for v in blocks.period))
    return 0


# -- stair --------------------------------------------------------------------

def _line(args) -> LineSpec:
    return LineSpec(_slope(args), Fraction(args.r), args.sigma)


def _cmd_stair_points(args) -> int:
    ls = _line(args)
    s = staircase_window(ls, args.x0, args.x1, "staircase")
    c = staircase_window(ls, args.x0, args.x1, "corners")
    payload = {
        "a": args.a, "b": args.b, "sigma": args.sigma, "r": str(Fraction(args.r)),
        "x0": args.x0, "x1": args.x1,
        "staircase": sorted([list(p) for p in s.points]),
        "corners": sorted([list(p) for p in c.points]),
    }
    text = "staircase: " + " ".join(f"({x},{y})" for x, y in sorted(s.points)) + \
        "\ncorners:   " + " ".join(f"({x},{y})" for x, y in sorted(c.points))
    _emit(args, payload, text)
    return 0


def _cmd_stair_render(args) -> int:
    ls = _line(args)
    s = staircase_window(ls, args.x0, args.x1, "staircase")
    c = staircase_window(ls, args.x0, args.x1, "corners")
    header = f"S_{{{args.a},{args.b}}} window [{args.x0},{args.x1}]"
    picture = render(s, c, header)
    payload = {"header": header, "grid": picture.split("\n")[1:]}
    _emit(args, payload, picture)
    return 0


# -- gf -----------------------------------------------------------------------

def _cmd_gf(args) -> int:
    sp = _slope(args)
    if args.kind == "cone":
        f = barvinok.gf_cone(barvinok.ConeSpec(sp))
        default_window = (0, 2 * sp.a, 0, 2 * sp.b)
    elif args.kind == "triangle":
        f = (barvinok.gf_half_open_triangle(sp) if args.half_open
             else barvinok.gf_closed_triangle(sp))
        default_window = (0, sp.a, 0, sp.b)
    else:
        f = carlitz.carlitz_short(sp, product_free=args.product_free).gf
        default_window = (0, max(sp.a - 2, 0), 0, max(sp.b - 1, 0))
    payload = {"a": sp.a, "b": sp.b, "kind": args.kind,
               "term_count": f.term_count, "size": f.size,
               **gf_to_json_dict(f)}
    text = gf_to_text(f)
    if args.expand:
        window = tuple(args.window) if args.window else default_window
        direction = tuple(args.direction) if args.direction else \
            generic_direction(f, seed=(2 * sp.b + 1, 1))
        lw = gf_expand(f, window, direction)
        coeffs = sorted([x, y, c] for (x, y), c in lw.coeffs.items())
        payload["expansion"] = {"window": list(window),
                                "direction": list(direction),
                                "coeffs": coeffs}
        if args.kind == "carlitz":
            text = _poly_text(lw.coeffs)
        else:
            text += "\nexpansion coefficients (x y c):\n" + \
                "\n".join(f"{x} {y} {c}" for x, y, c in coeffs)
    _emit(args, payload, text)
    return 0


def _poly_text(coeffs: dict) -> str:
    if not coeffs:
        return "0"
    parts = []
    for (i, j), c in sorted(coeffs.items()):
        mono = "*".join((["x"] if i == 1 else [f"x^{i}"] if i else [])
                        + (["y"] if j == 1 else [f"y^{j}"] if j else []))
        if c == 1 and mono:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}" if mono else str(c))
    return " + ".join(parts)


# -- white --------------------------------------------------------------------

def _cmd_white_check(args) -> int:
    t = white.TetraSpec(args.a, args.b, args.n)
    v = white.classify(t)
    payload = {"a": args.a, "b": args.b, "n": args.n, "c": t.c,
               **v.to_json_dict()}
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(args, payload, text)
    return 0


def _cmd_white_scan(args) -> int:
    rows = []
    consistent = True
    for n in range(1, args.n + 1):
        for a in range(n):
            for b in range(n):
                t = white.TetraSpec(a, b, n)
                v = white.classify(t)
                want_empty = (n == 1) or (v.clean and v.abc_has_one)
                if v.empty != want_empty:
                    consistent = False
                if v.empty:
                    rows.append({"a": a, "b": b, "n": n,
                                 "white_form": list(v.white_form) if v.white_form else None})
    payload = {"n_max": args.n, "empty_count": len(rows), "empty": rows,
               "all_consistent": consistent}
    text = (f"empty tetrahedra up to n={args.n}: {len(rows)}; "
            f"classification consistent: {consistent}")
    _emit(args, payload, text)
    return 0


# -- verify -------------------------------------------------------------------

def _cmd_verify(args) -> int:
    rep = verify.run_suite(args.suite, max_n=args.max, seed=args.seed)
    payload = rep.to_json_dict()
    lines = []
    for c in rep.checks:
        mark = "PASS" if c.ok else "FAIL"
        lines.append(f"[{mark}] {c.name}" + (f" ({c.detail})" if c.detail else ""))
    lines.append(f"suite {rep.suite}: {'ok' if rep.ok else 'FAILED'}")
    _emit(args, payload, "\n".join(lines))
    return 0 if rep.ok else 1


# -- parser -------------------------------------------------------------------

def _add_slope(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="lattice-stairs", description=__doc__,
                                  formatter_class=argparse.RawDescriptionHelpFormatter)
    top.add_argument("--json", action="store_true", help="machine-readable stdout")
    top.add_argument("--out", help="also dump the JSON payload to a file")
    sub = top.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("seq", help="periodic sequences").add_subparsers(
        dest="subcommand", required=True)
    p = seq.add_parser("beatty", help="step sequence of slope b/a")
    _add_slope(p)
    p.add_argument("--from", type=int, default=1)
    p.add_argument("--to", type=int, default=None)
    p.set_defaults(fn=_cmd_seq_beatty)
    p = seq.add_parser("check", help="run the four characterizations on a period")
    p.add_argument("period", help="comma- or space-separated 0/1 entries")
    p.set_defaults(fn=_cmd_seq_check)
    p = seq.add_parser("blocks", help="block lengths of a 0,1-period")
    p.add_argument("period")
    p.set_defaults(fn=_cmd_seq_blocks)

    stair = sub.add_parser("stair", help="staircase point sets").add_subparsers(
        dest="subcommand", required=True)
    for name, fn in (("points", _cmd_stair_points), ("render", _cmd_stair_render)):
        p = stair.add_parser(name)
        _add_slope(p)
        p.add_argument("--r", default="0", help="rational offset, e.g. 1/5")
        p.add_argument("--sigma", type=int, default=1, choices=(1, -1))
        p.add_argument("--x0", type=int, required=True)
        p.add_argument("--x1", type=int, required=True)
        p.set_defaults(fn=fn)

    gf = sub.add_parser("gf", help="short rational generating functions")
    gf.add_argument("kind", choices=("cone", "triangle", "carlitz"))
    _add_slope(gf)
    gf.add_argument("--half-open", action="store_true",
                    help="half-open triangle (diagonal removed)")
    gf.add_argument("--product-free", action="store_true",
                    help="denominator-free positive form (carlitz only)")
    gf.add_argument("--expand", action="store_true")
    gf.add_argument("--window", type=int, nargs=4, metavar=("X0", "X1", "Y0", "Y1"))
    gf.add_argument("--direction", type=int, nargs=2, metavar=("DX", "DY"))
    gf.set_defaults(fn=_cmd_gf)

    wh = sub.add_parser("white", help="lattice tetrahedra").add_subparsers(
        dest="subcommand", required=True)
    p = wh.add_parser("check")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_white_check)
    p = wh.add_parser("scan")
    p.add_argument("--n", type=int, required=True, help="scan all apex heights <= n")
    p.set_defaults(fn=_cmd_white_scan)

    ver = sub.add_parser("verify", help="brute-force oracle sweeps")
    ver.add_argument("suite", choices=("sequences", "staircase", "barvinok",
                                       "carlitz", "white", "positivity", "all"))
    ver.add_argument("--max", type=int, default=None,
                     help="cap the sweep bounds (smaller, faster run)")
    ver.add_argument("--seed", type=int, default=0)
    ver.set_defaults(fn=_cmd_verify)
    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if getattr(args, "command", None) == "seq" and getattr(args, "fn", None) is _cmd_seq_beatty:
        if args.to is None:
            args.to = getattr(args, "from") + args.a - 1
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
