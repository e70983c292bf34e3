"""CLI: render --csv <path> --figure fig2|fig3|fig4 [--t-hot <peV>] --out <image>."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import FIGURES, FigureSpec, SchemaError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="render",
        description="Render figures from a spincarnot sweep CSV",
    )
    parser.add_argument("--csv", required=True, help="input sweep CSV path")
    parser.add_argument("--figure", required=True, choices=FIGURES)
    parser.add_argument(
        "--t-hot",
        type=str,
        default="",
        help="comma list of hot temperatures (peV) to plot; default all",
    )
    parser.add_argument(
        "--out", required=True,
        help="output image path; format from extension (.png or .svg)",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        temps = [float(x) for x in args.t_hot.split(",") if x.strip()]
    except ValueError:
        parser.error(f"invalid --t-hot list: {args.t_hot!r}")
    spec = FigureSpec(
        input_csv=Path(args.csv),
        figure=args.figure,
        output_image=Path(args.out),
        temps_to_plot=temps,
    )
    try:
        render(spec)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
