"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 internal guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .arrangement import Window, arrangement_2d, oracle_walls_1d
from .errors import DomainError, InvalidRankError, PeriodGuardError
from .gv import format_bounds, gv_row, gv_table_csv
from .helix import helix_entry
from .pi1 import GroupWord, length_to_N, monodromy, normal_form
from .render import RenderSpec, render_svg
from .rootsys import (
    ambient_for_length,
    build_diagram,
    extend_affine,
    highest_root_labels,
    parse_diagram,
)
from .topology import punctured_sphere
from .walk import chamber_graph

EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_GUARD = 4

CONVENTIONS = """\
Vertex numbering
  A_n  1..n along the chain.
  D_n  1..n-2 along the chain; fork vertices n-1 and n attached to n-2.
  E_n  1..n-1 along the long chain; branch vertex n attached to chain vertex 3.
  The affine vertex is rank+1, labelled 1, attached to:
    A_1: vertex 1 (double bond, stored as one edge)   A_n: vertices 1 and n
    D_n: vertex 2   E_6: vertex 6   E_7: vertex 1   E_8: vertex 7

Ambient diagram chosen for --ell
  1: A1   2: D4   3: E6   4: E7   5: E8   6: E8

Word grammar (pi1)
  whitespace-separated tokens a, a^-1, b0, b3^-1, c
"""


class UsageError(Exception):
    pass


def _color_enabled(stream) -> bool:
    mode = os.environ.get("FLOPKIT_COLOR", "auto").lower()
    if mode == "never":
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _bold(text: str, on: bool) -> str:
    return f"\033[1m{text}\033[0m" if on else text


def _diagram(name: str):
    try:
        return parse_diagram(name)
    except InvalidRankError as exc:
        raise UsageError(str(exc)) from None


def _vertices(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse vertex list {text!r}") from None


def _range(text: str) -> range:
    try:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise UsageError(f"range must look like 0..9, got {text!r}") from None


def cmd_labels(args, out) -> None:
    try:
        diagram = build_diagram(args.type.upper(), args.rank)
    except InvalidRankError as exc:
        raise UsageError(str(exc)) from None
    labels = highest_root_labels(diagram)
    color = _color_enabled(out)
    out.write(f"{diagram.name}\n")
    out.write("vertex\tlabel\tneighbours\n")
    for v in diagram.vertices:
        nbrs = ",".join(map(str, sorted(diagram.neighbours(v)))) or "-"
        out.write(f"{v}\t{_bold(str(labels[v]), color)}\t{nbrs}\n")


def cmd_conventions(args, out) -> None:
    out.write(CONVENTIONS)


def cmd_equator(args, out) -> None:
    if args.ell is not None:
        if args.diagram or args.vertex is not None:
            raise UsageError("give either --ell or --diagram/--vertex, not both")
        diagram, vertex = ambient_for_length(args.ell)
    else:
        if not args.diagram or args.vertex is None:
            raise UsageError("equator needs --ell, or --diagram with --vertex")
        diagram, vertex = _diagram(args.diagram), args.vertex
    ell = extend_affine(diagram).labels.get(vertex) if vertex in diagram.vertices else None
    sphere = punctured_sphere(diagram, vertex)
    out.write(json.dumps({"ell": ell, **sphere.to_dict()}) + "\n")


def cmd_arrangement(args, out) -> None:
    diagram = _diagram(args.diagram)
    vertices = _vertices(args.vertices)
    if len(vertices) not in (1, 2):
        raise UsageError("--vertices takes one or two vertex ids")
    window = Window.parse(args.window or ("0,1" if len(vertices) == 1 else "0,0,1,1"))
    if window.dimension != len(vertices):
        raise UsageError(f"a {len(vertices)}D arrangement needs a {len(vertices)}D window")
    if len(vertices) == 1:
        arr = oracle_walls_1d(diagram, vertices[0], window)
    else:
        arr = arrangement_2d(diagram, vertices, window)
    if args.format == "svg":
        text = render_svg(arr, RenderSpec(window, scale=args.scale))
    else:
        text = arr.to_json() + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def cmd_chambers(args, out) -> None:
    graph = chamber_graph(_diagram(args.diagram), _vertices(args.vertices), args.depth)
    out.write(graph.to_json() + "\n")


def cmd_helix(args, out) -> None:
    indices = _range(args.range) if args.range else range(length_to_N(args.ell))
    entries = [(i, helix_entry(args.ell, i)) for i in indices]
    if args.json:
        out.write(json.dumps([{"index": i, **s.to_dict()} for i, s in entries]) + "\n")
        return
    for i, symbol in entries:
        out.write(f"S_{i}\t{symbol}\n")


def cmd_pi1(args, out) -> None:
    N = length_to_N(args.ell)
    word = GroupWord.parse(args.word)
    out.write(f"{normal_form(word, N)}\n")
    if args.monodromy:
        out.write(f"{monodromy(word, args.ell)}\n")


def cmd_gv(args, out) -> None:
    if args.ell is None or args.csv:
        if args.ell is not None:
            raise UsageError("--csv emits the whole table; drop --ell")
        out.write(gv_table_csv())
        return
    row = gv_row(args.ell)
    out.write(f"{format_bounds(row.gv_lower_bounds)}, {row.dim_bound}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flopkit", description="Affine Dynkin combinatorics of 3-fold flops.")
    parser.add_argument("--version", action="version", version=f"flopkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("labels", help="highest-root labels of an ADE diagram")
    p.add_argument("type", help="A, D or E")
    p.add_argument("rank", type=int)
    p.set_defaults(func=cmd_labels)

    p = sub.add_parser("conventions", help="vertex numbering and other fixed conventions")
    p.set_defaults(func=cmd_conventions)

    p = sub.add_parser("equator", help="punctured sphere for a vertex or a length")
    p.add_argument("--ell", type=int)
    p.add_argument("--diagram")
    p.add_argument("--vertex", type=int)
    p.set_defaults(func=cmd_equator)

    p = sub.add_parser("arrangement", help="1D or 2D wall arrangement as JSON or SVG")
    p.add_argument("--diagram", required=True)
    p.add_argument("--vertices", required=True, help="one or two comma-separated vertex ids")
    p.add_argument("--window", help="lo,hi or x0,y0,x1,y1 (fractions allowed)")
    p.add_argument("--format", choices=("json", "svg"), default="json")
    p.add_argument("--scale", type=int, default=200, help="pixels per unit (svg)")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_arrangement)

    p = sub.add_parser("chambers", help="chamber graph of the wall-crossing walk as JSON")
    p.add_argument("--diagram", required=True)
    p.add_argument("--vertices", required=True)
    p.add_argument("--depth", type=int, default=10)
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("helix", help="entries of the simples helix")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--range", help="inclusive index range such as 0..9; write --range=-2..5 for negative starts")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_helix)

    p = sub.add_parser("pi1", help="normal form of a word in the fundamental group")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--monodromy", action="store_true", help="also print the functor the word maps to")
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("gv", help="GV and contraction-algebra lower bounds")
    p.add_argument("--ell", type=int)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_gv)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"flopkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PeriodGuardError as exc:
        print(f"flopkit: internal error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except DomainError as exc:
        print(f"flopkit: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return 0


if __name__ == "__main__":
    sys.exit(main())
