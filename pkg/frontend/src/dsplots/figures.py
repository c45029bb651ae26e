"""Two-curve overlay figures from snapshot CSV pairs.

Colors follow the legend convention of the source experiments: red for the
flat lambda=0 (classical) curve, green for a relativistic (lambda != 0)
curve, blue for an exact static curve.  Output is batch raster only, fixed
at 1200x800 pixels.  Rendering never alters the numbers: the arrays handed
to matplotlib are exactly the arrays parsed from the CSVs, which is what
the data-layer tests assert.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")  # batch-only; must be set before pyplot is imported

import json

import numpy as np
from matplotlib import pyplot as plt

from . import __version__
from .data import FormatError, load_snapshot, require_run_dir

COLOR_CLASSICAL = "red"
COLOR_RELATIVISTIC = "green"
COLOR_STATIC = "blue"

#: 12 x 8 inches at 100 dpi = 1200 x 800 pixels.
FIGSIZE = (12.0, 8.0)
DPI = 100


@dataclass(frozen=True)
class Curve:
    """One plotted curve: where it comes from and how it is drawn."""

    path: Path
    label: str
    color: str


@dataclass(frozen=True)
class FigureSpec:
    """A complete overlay: two curves, a title, and the output path."""

    curve_a: Curve
    curve_b: Curve
    title: str
    out_path: Path


def curve_color(lam: float, static: bool = False) -> str:
    """Legend color for a curve: static beats everything, then lambda."""
    if static:
        return COLOR_STATIC
    return COLOR_CLASSICAL if lam == 0.0 else COLOR_RELATIVISTIC


def build_figure(spec: FigureSpec):
    """Load both curves and build the matplotlib figure (not yet saved).

    The two CSVs must share an identical r column (same grid, tolerance
    zero).  The caller owns the returned figure and must close it.
    """
    r_a, v_a = load_snapshot(spec.curve_a.path)
    r_b, v_b = load_snapshot(spec.curve_b.path)
    if r_a.shape != r_b.shape or not np.array_equal(r_a, r_b):
        raise FormatError(
            f"grids differ between {spec.curve_a.path} and {spec.curve_b.path}"
        )
    fig, ax = plt.subplots(figsize=FIGSIZE)
    ax.plot(r_a, v_a, color=spec.curve_a.color, label=spec.curve_a.label)
    ax.plot(r_b, v_b, color=spec.curve_b.color, label=spec.curve_b.label)
    ax.set_xlabel("r")
    ax.set_ylabel("v")
    ax.set_title(spec.title)
    ax.legend()
    return fig


def render_overlay(spec: FigureSpec) -> Path:
    """Render one overlay to its output path and return that path."""
    out = Path(spec.out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig = build_figure(spec)
    try:
        fig.savefig(out, dpi=DPI)
    finally:
        plt.close(fig)
    return out


def _paired_labels(meta_a: dict, meta_b: dict) -> tuple[Curve, Curve]:
    """Label/color rule for a directory pair, without paths filled in.

    Two different lambdas mean a relativistic-vs-classical overlay; the
    same lambda on both sides means a scheme-vs-static overlay (that is
    how the static experiment lays out its scheme/ and exact/ directories).
    """
    lam_a, lam_b = float(meta_a["lambda"]), float(meta_b["lambda"])
    if lam_a == lam_b:
        a = Curve(Path(), f"scheme, lambda = {lam_a:g}", curve_color(lam_a))
        b = Curve(Path(), "static solution", curve_color(lam_b, static=True))
    else:
        a = Curve(Path(), f"lambda = {lam_a:g}", curve_color(lam_a))
        b = Curve(Path(), f"lambda = {lam_b:g}", curve_color(lam_b))
    return a, b


def _title_for(name: str, meta: dict, index: int) -> str:
    times = meta.get("snapshot_times")
    if isinstance(times, list) and index < len(times):
        return f"{name}: t = {times[index]:g}"
    return f"{name}: snapshot {index}"


def render_all(dir_a: Path, dir_b: Path, out_dir: Path, name: str) -> list[Path]:
    """Overlay two run directories snapshot by snapshot.

    Writes ``fig_<name>_<index>.png`` per snapshot pair plus a
    ``render_versions.json`` recording the library versions, so identical
    inputs and versions reproduce the images byte for byte.
    """
    meta_a, snaps_a = require_run_dir(Path(dir_a))
    meta_b, snaps_b = require_run_dir(Path(dir_b))
    if len(snaps_a) != len(snaps_b):
        raise FormatError(
            f"snapshot count mismatch: {len(snaps_a)} in {dir_a}, {len(snaps_b)} in {dir_b}"
        )
    proto_a, proto_b = _paired_labels(meta_a, meta_b)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for k, (pa, pb) in enumerate(zip(snaps_a, snaps_b)):
        spec = FigureSpec(
            curve_a=Curve(pa, proto_a.label, proto_a.color),
            curve_b=Curve(pb, proto_b.label, proto_b.color),
            title=_title_for(name, meta_a, k),
            out_path=out_dir / f"fig_{name}_{k:03d}.png",
        )
        written.append(render_overlay(spec))
    versions = {
        "dsplots": __version__,
        "matplotlib": matplotlib.__version__,
        "numpy": np.__version__,
    }
    (out_dir / "render_versions.json").write_text(
        json.dumps(versions, indent=2) + "\n", encoding="utf-8"
    )
    return written
