"""Readers for the solver's on-disk output contracts.

The snapshot CSV contract: UTF-8, LF endings, header line ``r,v``, one
``r,v`` row per cell in ascending r, 17 significant digits.  ``meta.json``
holds every effective run parameter.  These readers are strict: anything
off-contract raises ``FormatError`` naming the file, because a silently
mis-parsed curve is worse than no curve.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

SNAPSHOT_HEADER = "r,v"
SNAPSHOT_PATTERN = re.compile(r"^snap_(\d{3})\.csv$")


class FormatError(ValueError):
    """An input file violates the solver's output contract."""


def load_snapshot(path: Path) -> tuple[np.ndarray, np.ndarray]:
    """Read one snapshot CSV into (r, v) arrays, exactly as stored."""
    path = Path(path)
    if not path.is_file():
        raise FormatError(f"{path}: missing snapshot file")
    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or lines[0] != SNAPSHOT_HEADER:
        got = lines[0] if lines else "<empty>"
        raise FormatError(f"{path}: expected header {SNAPSHOT_HEADER!r}, got {got!r}")
    r, v = [], []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 2:
            raise FormatError(f"{path}:{lineno}: expected two columns, got {line!r}")
        try:
            r.append(float(parts[0]))
            v.append(float(parts[1]))
        except ValueError as exc:
            raise FormatError(f"{path}:{lineno}: non-numeric value in {line!r}") from exc
    if not r:
        raise FormatError(f"{path}: snapshot has no data rows")
    r_arr, v_arr = np.array(r), np.array(v)
    if np.any(np.diff(r_arr) <= 0.0):
        raise FormatError(f"{path}: r column is not strictly ascending")
    return r_arr, v_arr


def load_meta(path: Path) -> dict:
    """Read a run's meta.json."""
    path = Path(path)
    if not path.is_file():
        raise FormatError(f"{path}: missing meta.json")
    try:
        meta = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(meta, dict) or "lambda" not in meta:
        raise FormatError(f"{path}: not a run meta object (no 'lambda' key)")
    return meta


def list_snapshots(run_dir: Path) -> list[Path]:
    """Snapshot files of a run directory, in index order."""
    run_dir = Path(run_dir)
    found = [p for p in run_dir.iterdir() if SNAPSHOT_PATTERN.match(p.name)]
    return sorted(found, key=lambda p: p.name)


def require_run_dir(run_dir: Path) -> tuple[dict, list[Path]]:
    """Validate that a directory holds a complete run (meta + snapshots).

    Raises ``FormatError`` listing everything that is missing, so a wrong
    path fails with one actionable message.
    """
    run_dir = Path(run_dir)
    if not run_dir.is_dir():
        raise FormatError(f"{run_dir}: not a directory")
    missing = []
    meta_path = run_dir / "meta.json"
    if not meta_path.is_file():
        missing.append("meta.json")
    snaps = list_snapshots(run_dir)
    if not snaps:
        missing.append("snap_*.csv")
    if missing:
        raise FormatError(f"{run_dir}: missing {', '.join(missing)}")
    return load_meta(meta_path), snaps
