"""Deterministic on-disk formats: snapshot CSV, metrics CSV, meta JSON.

Every number is printed with 17 significant digits so values round-trip
exactly; files are UTF-8 with LF line endings.  Identical runs therefore
produce byte-identical outputs.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

SNAPSHOT_HEADER = "r,v"
METRICS_HEADER = "t,lambda,l1_distance_to_lambda0,max_v,min_v"
DRIFT_HEADER = "t,linf_drift,l1_drift"


def fmt(x: float) -> str:
    """Format one number with 17 significant digits."""
    return format(float(x), ".17g")


def _write_lines(path: Path, lines: list[str]) -> None:
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def write_snapshot(path: Path, r: np.ndarray, v: np.ndarray) -> None:
    """Write one snapshot as ``r,v`` rows in ascending r."""
    lines = [SNAPSHOT_HEADER]
    lines.extend(f"{fmt(ri)},{fmt(vi)}" for ri, vi in zip(r, v))
    _write_lines(path, lines)


def write_metrics(path: Path, rows: list[tuple[float, float, float, float, float]]) -> None:
    """Write sweep metrics rows (t, lambda, l1 distance, max v, min v)."""
    lines = [METRICS_HEADER]
    lines.extend(",".join(fmt(x) for x in row) for row in rows)
    _write_lines(path, lines)


def write_drift(path: Path, rows: list[tuple[float, float, float]]) -> None:
    """Write static-preservation drift rows (t, L-inf, L1)."""
    lines = [DRIFT_HEADER]
    lines.extend(",".join(fmt(x) for x in row) for row in rows)
    _write_lines(path, lines)


def write_meta(path: Path, meta: dict) -> None:
    """Write run metadata as pretty-printed JSON (keys in given order)."""
    path.write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8", newline="\n")


def snapshot_name(index: int) -> str:
    return f"snap_{index:03d}.csv"
