"""Command-line front end.

Sets are passed in text notation, quoted::

    nsgs analyze "0 2 3 6 8 9 11 ->"
    nsgs sum --kind E "0 4 7 ->" "0 1 3 4 5 7 ->"
    nsgs decompose "0 6 7 11 12 13 14 15 17 ->"
    nsgs verify --theorem thm416 --genus 10 --json

Exit status: 0 on success, 1 on a domain outcome (not a semigroup, excluded
case, failed verification), 2 on malformed input or bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from nsgs.enumeration import (
    EnumBound,
    enumerate_pseudo_symmetric,
    enumerate_semigroups,
    enumerate_symmetric,
)
from nsgs.errors import (
    BoundExceeded,
    IndexOutOfRange,
    InvalidHighlight,
    MalformedInput,
    NSGSError,
    UnknownTheorem,
)
from nsgs.numset import NumericalSet, format_set, is_semigroup, minimal_generators, parse_set
from nsgs.render import RenderFormat, RenderOptions, parse_box, render
from nsgs.sums import SumKind, predicted_gaps, set_sum
from nsgs.symmetry import (
    classify_ring,
    decompose,
    dual,
    dual_sum_is_semigroup,
    is_pseudo_symmetric,
    is_symmetric,
)
from nsgs.verify import THEOREMS, numerical_sets_in, verify_theorem
from nsgs.young import diagram_of, hook_boxes

USAGE_ERRORS = (MalformedInput, BoundExceeded, UnknownTheorem, InvalidHighlight, IndexOutOfRange)


def _ints(values) -> str:
    return " ".join(map(str, values))


def analyze(S: NumericalSet) -> dict:
    semigroup = is_semigroup(S)
    return {
        "set": format_set(S),
        "small_elements": list(S.small_elements),
        "conductor": S.conductor,
        "frobenius": S.frobenius,
        "genus": S.genus,
        "gaps": list(S.gaps),
        "semigroup": semigroup,
        "symmetric": is_symmetric(S) if semigroup else None,
        "pseudo_symmetric": is_pseudo_symmetric(S) if semigroup else None,
        "minimal_generators": sorted(minimal_generators(S)) if semigroup else None,
        "ring_label": str(classify_ring(S)) if semigroup else None,
    }


ANALYZE_SCHEMA = {
    "type": "object",
    "required": [
        "set", "small_elements", "conductor", "frobenius", "genus", "gaps",
        "semigroup", "symmetric", "pseudo_symmetric", "minimal_generators", "ring_label",
    ],
    "properties": {
        "set": {"type": "string"},
        "small_elements": {"type": "array", "items": {"type": "integer"}},
        "conductor": {"type": "integer"},
        "frobenius": {"type": "integer"},
        "genus": {"type": "integer"},
        "gaps": {"type": "array", "items": {"type": "integer"}},
        "semigroup": {"type": "boolean"},
        "symmetric": {"type": ["boolean", "null"]},
        "pseudo_symmetric": {"type": ["boolean", "null"]},
        "minimal_generators": {"type": ["array", "null"], "items": {"type": "integer"}},
        "ring_label": {"enum": ["Gorenstein", "Kunz", "Neither", None]},
    },
}


def _yes_no(value: bool | None) -> str:
    return "n/a" if value is None else ("yes" if value else "no")


def cmd_analyze(args, out) -> int:
    info = analyze(parse_set(args.set))
    if args.json:
        print(json.dumps(info), file=out)
        return 0
    gens = info["minimal_generators"]
    print(f"set:                {info['set']}", file=out)
    print(f"gaps:               {_ints(info['gaps'])}", file=out)
    print(f"frobenius:          {info['frobenius']}", file=out)
    print(f"conductor:          {info['conductor']}", file=out)
    print(f"genus:              {info['genus']}", file=out)
    print(f"semigroup:          {_yes_no(info['semigroup'])}", file=out)
    print(f"symmetric:          {_yes_no(info['symmetric'])}", file=out)
    print(f"pseudo-symmetric:   {_yes_no(info['pseudo_symmetric'])}", file=out)
    print(f"minimal generators: {'n/a' if gens is None else _ints(gens)}", file=out)
    print(f"ring label:         {info['ring_label'] or 'n/a'}", file=out)
    return 0


def cmd_sum(args, out) -> int:
    kind = SumKind.parse(args.kind)
    S, T = parse_set(args.left), parse_set(args.right)
    R = set_sum(S, T, kind)
    print(format_set(R), file=out)
    if args.expect_gaps:
        predicted = predicted_gaps(S, T, kind)
        print(f"gaps:      {_ints(R.gaps)}", file=out)
        print(f"predicted: {_ints(predicted)}", file=out)
        print(f"agree:     {_yes_no(tuple(predicted) == R.gaps)}", file=out)
    return 0


def cmd_dual(args, out) -> int:
    print(format_set(dual(parse_set(args.set))), file=out)
    return 0


def cmd_decompose(args, out) -> int:
    dec = decompose(parse_set(args.set))
    print(f"T    = {format_set(dec.summand)}", file=out)
    print(f"T*   = {format_set(dec.dual_summand)}", file=out)
    print(f"kind = {dec.kind}", file=out)
    return 0


def cmd_check_closure(args, out) -> int:
    S = parse_set(args.set)
    Sd = dual(S)
    for kind in (SumKind.DISCRETE, SumKind.END_TO_END, SumKind.CONJOINT, SumKind.OVERLAP):
        crit = dual_sum_is_semigroup(S, kind)
        brute = is_semigroup(set_sum(S, Sd, kind))
        agree = "agree" if crit == brute else "DISAGREE"
        print(
            f"{str(kind):<12} criterion={str(crit).lower():<6} "
            f"brute-force={str(brute).lower():<6} {agree}",
            file=out,
        )
    return 0


def cmd_render(args, out) -> int:
    S = parse_set(args.set)
    Y = diagram_of(S)
    highlight: tuple = ()
    if args.highlight_hook:
        highlight = tuple(hook_boxes(Y, *parse_box(args.highlight_hook)))
    opts = RenderOptions(
        format=RenderFormat.SVG if args.svg else RenderFormat.ASCII,
        show_hooks=args.hooks,
        highlight=highlight,
        cell_size=args.cell_size,
    )
    doc = render(Y, opts)
    if args.out:
        Path(args.out).write_text(doc, encoding="utf-8")
    else:
        out.write(doc)
    return 0


def _bound(args) -> EnumBound | None:
    if args.genus is not None:
        return EnumBound.genus(args.genus)
    if args.frobenius is not None:
        return EnumBound.frobenius(args.frobenius)
    return None


def cmd_enumerate(args, out) -> int:
    bound = _bound(args)
    if args.filter == "semigroup":
        stream = enumerate_semigroups(bound)
    elif args.filter == "symmetric":
        stream = enumerate_symmetric(bound)
    elif args.filter == "pseudo-symmetric":
        stream = enumerate_pseudo_symmetric(bound)
    else:
        stream = numerical_sets_in(bound)
    for S in stream:
        print(format_set(S), file=out)
    return 0


def cmd_verify(args, out) -> int:
    report = verify_theorem(args.theorem, _bound(args))
    if args.json:
        print(report.to_json(), file=out)
    else:
        print(report.summary(), file=out)
        for f in report.failures[:20]:
            kind = f" [{f.kind}]" if f.kind else ""
            print(f"  {f.input}{kind}: expected {f.expected}; got {f.got}", file=out)
        if len(report.failures) > 20:
            print(f"  ... {len(report.failures) - 20} more", file=out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nsgs",
        description="Numerical sets and semigroups through their Young diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    set_help = 'a set such as "0 2 3 6 8 9 11 ->" or "gaps: 1 4 5 7 10"'

    p = sub.add_parser("analyze", help="gaps, Frobenius number, genus and classification")
    p.add_argument("set", help=set_help)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sum", help="discrete / end-to-end / conjoint / overlap sum")
    p.add_argument("--kind", required=True, help="D, E, C or O")
    p.add_argument("left", help=set_help)
    p.add_argument("right", help=set_help)
    p.add_argument("--expect-gaps", action="store_true", help="also print the predicted gaps")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("dual", help="the dual set")
    p.add_argument("set", help=set_help)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("decompose", help="split a (pseudo-)symmetric semigroup as T + T*")
    p.add_argument("set", help=set_help)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check-closure", help="is S + S* a semigroup, per sum kind")
    p.add_argument("set", help=set_help)
    p.set_defaults(func=cmd_check_closure)

    p = sub.add_parser("render", help="draw the Young diagram")
    p.add_argument("set", help=set_help)
    p.add_argument("--hooks", action="store_true", help="label boxes with hook lengths")
    p.add_argument("--svg", action="store_true", help="SVG instead of ASCII")
    p.add_argument("--highlight-hook", metavar="ROW,COL", help="highlight the hook of a box")
    p.add_argument("--cell-size", type=int, default=32, help="SVG cell size in pixels")
    p.add_argument("--out", metavar="FILE", help="write to FILE instead of stdout")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("enumerate", help="list sets within a bound")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--genus", type=int)
    g.add_argument("--frobenius", type=int)
    p.add_argument("--filter", choices=["semigroup", "symmetric", "pseudo-symmetric"])
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check a theorem exhaustively")
    p.add_argument("--theorem", required=True, choices=list(THEOREMS))
    g = p.add_mutually_exclusive_group()
    g.add_argument("--genus", type=int)
    g.add_argument("--frobenius", type=int)
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except USAGE_ERRORS as exc:
        print(f"nsgs: error: {exc}", file=err)
        return 2
    except NSGSError as exc:
        print(f"nsgs: {type(exc).__name__}: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
