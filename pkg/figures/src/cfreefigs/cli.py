"""cfree-figures: build the standard sweeps or render an explicit figure spec."""

from __future__ import annotations

import argparse
import sys

from .render import FigureSpec, render_figures
from .sweep import build_figures


def cmd_sweep(args) -> int:
    meta1, meta2 = build_figures(args.outdir, fmt=args.format, cli=args.cli)
    print(meta1["figure"])
    print(meta2["figure"])
    return 0


def cmd_render(args) -> int:
    with open(args.spec, "r", encoding="utf-8") as fh:
        spec = FigureSpec.from_json(fh.read())
    meta = render_figures(spec)
    print(meta["figure"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfree-figures")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="emit CLI densities for both sweeps and render them")
    p.add_argument("--outdir", required=True)
    p.add_argument("--format", choices=["png", "svg"], default="png")
    p.add_argument("--cli", default="cfree", help="path to the cfree executable")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("render", help="render a figure from a JSON spec")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
