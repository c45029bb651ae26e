"""Overlay-figure rendering for solver run outputs.

Consumes only the solver's public file contracts (snapshot CSV and
meta.json) and renders two-curve comparison figures as fixed-size PNGs.
"""

__version__ = "0.1.0"

from .data import FormatError, list_snapshots, load_meta, load_snapshot, require_run_dir
from .figures import (
    COLOR_CLASSICAL,
    COLOR_RELATIVISTIC,
    COLOR_STATIC,
    DPI,
    FIGSIZE,
    Curve,
    FigureSpec,
    build_figure,
    curve_color,
    render_all,
    render_overlay,
)

__all__ = [
    "FormatError",
    "list_snapshots",
    "load_meta",
    "load_snapshot",
    "require_run_dir",
    "COLOR_CLASSICAL",
    "COLOR_RELATIVISTIC",
    "COLOR_STATIC",
    "DPI",
    "FIGSIZE",
    "Curve",
    "FigureSpec",
    "build_figure",
    "curve_color",
    "render_all",
    "render_overlay",
    "__version__",
]
