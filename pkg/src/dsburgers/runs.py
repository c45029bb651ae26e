"""Experiment orchestration shared by the CLI and the acceptance tests."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .config import RunConfig
from .errors import ConfigError
from .fvsolver import Grid, RunResult, StaticInit, initial_data, run
from .model import BurgersModel, StaticSolution
from .output import snapshot_name, write_drift, write_meta, write_metrics, write_snapshot


@dataclass(frozen=True)
class ExecutedRun:
    config: RunConfig
    grid: Grid
    model: BurgersModel
    result: RunResult


def execute_run(cfg: RunConfig) -> ExecutedRun:
    """Build grid, model, and solver from a config and run it."""
    grid = cfg.build_grid()
    model = cfg.build_model()
    solver_cfg = cfg.build_solver_config()
    init = initial_data(grid, cfg.init, model)
    result = run(grid, model, solver_cfg, init)
    return ExecutedRun(config=cfg, grid=grid, model=model, result=result)


def write_run_dir(out_dir: Path, executed: ExecutedRun) -> None:
    """Write snap_<k>.csv per snapshot plus meta.json."""
    out_dir.mkdir(parents=True, exist_ok=True)
    for k, snap in enumerate(executed.result.snapshots):
        write_snapshot(out_dir / snapshot_name(k), executed.grid.centers, snap.v)
    write_meta(out_dir / "meta.json", executed.config.meta_dict(__version__))


def l1_distance(v_a: np.ndarray, v_b: np.ndarray, dr: float) -> float:
    """Grid L1 distance sum_j |a_j - b_j| dr between same-grid profiles."""
    return float(np.sum(np.abs(v_a - v_b)) * dr)


def lambda_dir_name(lam: float) -> str:
    return f"lambda_{lam:g}"


@dataclass(frozen=True)
class SweepOutcome:
    """Per-lambda runs plus metrics rows (t, lambda, L1 to lambda=0, ...)."""

    runs: dict[float, ExecutedRun]
    baseline: ExecutedRun
    metrics_rows: tuple[tuple[float, float, float, float, float], ...]


def sweep(cfg: RunConfig, lambdas: list[float], max_workers: int | None = None) -> SweepOutcome:
    """Run identical initial data for each lambda and compare to lambda=0.

    A flat baseline run is always computed (reused if 0 is in the list) so
    the L1 distance column is well defined.  Runs are independent, so they
    may execute concurrently; outputs do not depend on the schedule.
    """
    if not lambdas:
        raise ConfigError("sweep needs at least one lambda")
    wanted = list(dict.fromkeys(lambdas))  # dedupe, keep order
    all_lams = wanted if 0.0 in wanted else wanted + [0.0]
    with ThreadPoolExecutor(max_workers=max_workers or min(4, len(all_lams))) as pool:
        executed = list(pool.map(lambda lam: execute_run(cfg.with_lambda(lam)), all_lams))
    runs = dict(zip(all_lams, executed))
    baseline = runs[0.0]

    rows = []
    dr = baseline.grid.dr
    for lam in wanted:
        er = runs[lam]
        for snap, base in zip(er.result.snapshots, baseline.result.snapshots):
            stats_v = snap.v
            rows.append(
                (
                    snap.t,
                    lam,
                    l1_distance(stats_v, base.v, dr),
                    float(np.max(stats_v)),
                    float(np.min(stats_v)),
                )
            )
    return SweepOutcome(
        runs={lam: runs[lam] for lam in wanted},
        baseline=baseline,
        metrics_rows=tuple(rows),
    )


def write_sweep_dir(out_dir: Path, outcome: SweepOutcome) -> None:
    """Write one run directory per requested lambda plus metrics.csv."""
    out_dir.mkdir(parents=True, exist_ok=True)
    for lam, er in outcome.runs.items():
        write_run_dir(out_dir / lambda_dir_name(lam), er)
    write_metrics(out_dir / "metrics.csv", list(outcome.metrics_rows))


@dataclass(frozen=True)
class StaticOutcome:
    """Scheme run against the exact steady curve, with per-snapshot drift."""

    executed: ExecutedRun
    exact_v: np.ndarray
    drift_rows: tuple[tuple[float, float, float], ...]


def static_experiment(cfg: RunConfig) -> StaticOutcome:
    """Run static initial data and measure drift from the exact curve."""
    if not isinstance(cfg.init, StaticInit):
        raise ConfigError("static experiment needs init = static(K, sign)")
    executed = execute_run(cfg)
    sol = StaticSolution(k=cfg.init.k, sign=cfg.init.sign)
    exact = np.asarray(executed.model.static_solution(sol, executed.grid.centers))
    dr = executed.grid.dr
    rows = tuple(
        (
            snap.t,
            float(np.max(np.abs(snap.v - exact))),
            l1_distance(snap.v, exact, dr),
        )
        for snap in executed.result.snapshots
    )
    return StaticOutcome(executed=executed, exact_v=exact, drift_rows=rows)


def write_static_dir(out_dir: Path, outcome: StaticOutcome) -> None:
    """Write scheme/ and exact/ run directories plus drift.csv.

    The exact steady curve is replicated per snapshot time so the two
    directories pair up file by file for plotting.
    """
    out_dir.mkdir(parents=True, exist_ok=True)
    write_run_dir(out_dir / "scheme", outcome.executed)
    exact_dir = out_dir / "exact"
    exact_dir.mkdir(parents=True, exist_ok=True)
    grid = outcome.executed.grid
    for k in range(len(outcome.executed.result.snapshots)):
        write_snapshot(exact_dir / snapshot_name(k), grid.centers, outcome.exact_v)
    write_meta(exact_dir / "meta.json", outcome.executed.config.meta_dict(__version__))
    write_drift(out_dir / "drift.csv", list(outcome.drift_rows))
