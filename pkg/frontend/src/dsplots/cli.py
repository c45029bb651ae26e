"""Batch figure rendering CLI.

    plots render <config>
    plots all <dir_a> <dir_b> --out=<dir> [--name=<label>]

``render`` reads a flat key=value config describing one overlay:

    a = runs/lambda_1/snap_004.csv      # required
    b = runs/lambda_0/snap_004.csv      # required
    out = figures/fig1_final.png        # required
    label_a = lambda = 1                # default: parent directory name
    label_b = lambda = 0
    color_a = green                     # default: green / red
    color_b = red
    title = rarefaction at t = 0.5      # default: empty

``all`` pairs two run directories produced by the solver CLI snapshot by
snapshot.  Exit codes: 0 success, 1 data/render failure, 2 config error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .data import FormatError
from .figures import (
    COLOR_CLASSICAL,
    COLOR_RELATIVISTIC,
    Curve,
    FigureSpec,
    render_all,
    render_overlay,
)

EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_CONFIG_ERROR = 2

_RENDER_KEYS = ("a", "b", "out", "label_a", "label_b", "color_a", "color_b", "title")
_REQUIRED = ("a", "b", "out")


class ConfigError(ValueError):
    pass


def parse_render_config(text: str, source: str = "<config>") -> dict[str, str]:
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"{source}:{lineno}: expected key=value, got {line!r}")
        key, value = stripped.split("=", 1)
        key = key.strip()
        if key not in _RENDER_KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        raw[key] = value.strip()
    missing = [k for k in _REQUIRED if k not in raw]
    if missing:
        raise ConfigError(f"{source}: missing required keys: {', '.join(missing)}")
    return raw


def spec_from_config(raw: dict[str, str]) -> FigureSpec:
    path_a, path_b = Path(raw["a"]), Path(raw["b"])
    return FigureSpec(
        curve_a=Curve(
            path=path_a,
            label=raw.get("label_a", path_a.parent.name or path_a.stem),
            color=raw.get("color_a", COLOR_RELATIVISTIC),
        ),
        curve_b=Curve(
            path=path_b,
            label=raw.get("label_b", path_b.parent.name or path_b.stem),
            color=raw.get("color_b", COLOR_CLASSICAL),
        ),
        title=raw.get("title", ""),
        out_path=Path(raw["out"]),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plots", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_render = sub.add_parser("render", help="render one overlay from a config file")
    p_render.add_argument("config", help="key=value overlay description")

    p_all = sub.add_parser("all", help="overlay two run directories snapshot by snapshot")
    p_all.add_argument("dir_a", help="first run directory (meta.json + snap_*.csv)")
    p_all.add_argument("dir_b", help="second run directory")
    p_all.add_argument("--out", required=True, help="output directory for the images")
    p_all.add_argument("--name", default=None, help="label used in fig_<name>_<k>.png")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "render":
            cfg_path = Path(args.config)
            if not cfg_path.is_file():
                raise ConfigError(f"config file {args.config!r} not found")
            raw = parse_render_config(
                cfg_path.read_text(encoding="utf-8"), source=str(cfg_path)
            )
            out = render_overlay(spec_from_config(raw))
            print(f"wrote {out}")
            return EXIT_OK
        name = args.name or Path(args.dir_a).name
        written = render_all(args.dir_a, args.dir_b, Path(args.out), name)
        print(f"wrote {len(written)} image(s) to {args.out}")
        return EXIT_OK
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR


def entry() -> None:
    raise SystemExit(main())
