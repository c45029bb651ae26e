"""Explicit Lax-Friedrichs finite-volume solver for the scalar model.

A uniform cell-centered grid covers [r_min, r_max] with centers
r_j = r_min + (j + 1/2) dr.  One step of the scheme, with b_j = 1 - L r_j^2
and f(v) = v^2 / 2, reads

    v_j^{n+1} = (v_{j-1}^n + v_{j+1}^n) / 2
                - dt/(2 dr) * [flux difference] + dt * S_j^n,

where the flux difference and source depend on the mode:

    conservative     b_{j+1} f_{j+1} - b_{j-1} f_{j-1},   S = L r (c^2 - 2 v^2)
    paper_literal    b_{j+1} f_{j+1} - b_{j-1} f_{j-1},   S = L r (c^2 - v^2)
    nonconservative  b_j (f_{j+1} - f_{j-1}),             S = L r (c^2 - v^2)

``conservative`` discretizes the conservative balance law; the other two
pair its pieces differently and are kept for comparison.  All three collapse
to the same classical Burgers scheme when L = 0, bit for bit.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import DomainError, InstabilityError
from .model import SOURCE_FORMS, BurgersModel, StaticSolution

#: Scheme modes accepted by ``lf_step`` (same names as the source forms).
MODES = SOURCE_FORMS

#: Floor for the maximum characteristic speed in the CFL ratio.
SPEED_FLOOR = 1e-8

#: How far beyond c a cell value may stray before the run aborts.
RUNAWAY_MARGIN = 0.1

_EVENT_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class Grid:
    """Uniform cell-centered grid; build with ``make_grid``."""

    n_cells: int
    r_min: float
    r_max: float
    dr: float
    centers: np.ndarray
    left_ghost_center: float
    right_ghost_center: float


def make_grid(n_cells: int, r_min: float, r_max: float) -> Grid:
    """Build a uniform grid of n_cells >= 3 cells over [r_min, r_max]."""
    if n_cells < 3:
        raise DomainError(f"need at least 3 cells, got {n_cells}")
    if not (r_max > r_min):
        raise DomainError(f"require r_max > r_min, got [{r_min}, {r_max}]")
    dr = (r_max - r_min) / n_cells
    centers = r_min + (np.arange(n_cells) + 0.5) * dr
    return Grid(
        n_cells=n_cells,
        r_min=r_min,
        r_max=r_max,
        dr=dr,
        centers=centers,
        left_ghost_center=r_min - 0.5 * dr,
        right_ghost_center=r_max + 0.5 * dr,
    )


@dataclass(frozen=True)
class State:
    """Cell averages v at time t."""

    t: float
    v: np.ndarray


@dataclass(frozen=True)
class Transmissive:
    """Zero-gradient boundary: ghosts copy the adjacent cell."""


@dataclass(frozen=True)
class StaticDirichlet:
    """Ghosts pinned to the steady-state family member (K, sign)."""

    k: float
    sign: int = 1


@dataclass(frozen=True)
class FixedBoundary:
    """Ghosts pinned to constant values."""

    v_left: float
    v_right: float


Boundary = Union[Transmissive, StaticDirichlet, FixedBoundary]


@dataclass(frozen=True)
class RiemannInit:
    """Two constant states split at r_split."""

    v_left: float
    v_right: float
    r_split: float


@dataclass(frozen=True)
class StaticInit:
    """Sample the steady-state family member (K, sign) at cell centers."""

    k: float
    sign: int = 1


@dataclass(frozen=True)
class ConstantInit:
    """One constant state everywhere."""

    v0: float


InitSpec = Union[RiemannInit, StaticInit, ConstantInit]


@dataclass(frozen=True)
class SolverConfig:
    """Time integration parameters for one run."""

    t_end: float
    mode: str = "conservative"
    cfl: float = 0.5
    boundary: Boundary = field(default_factory=Transmissive)
    snapshot_times: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise DomainError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if not (0.0 < self.cfl <= 1.0):
            raise DomainError(f"require 0 < cfl <= 1, got {self.cfl}")
        if not (self.t_end >= 0.0):
            raise DomainError(f"require t_end >= 0, got {self.t_end}")
        times = self.snapshot_times
        if times is None:
            times = (self.t_end,)
        else:
            times = tuple(float(s) for s in times)
            if any(t2 <= t1 for t1, t2 in zip(times, times[1:])):
                raise DomainError("snapshot times must be strictly increasing")
            if times and (times[0] < 0.0 or times[-1] > self.t_end * (1.0 + _EVENT_RTOL)):
                raise DomainError("snapshot times must lie in [0, t_end]")
        object.__setattr__(self, "snapshot_times", times)


def _require_inside_horizon(grid: Grid, model: BurgersModel) -> None:
    if np.any(model.flux_coefficient(grid.centers) <= 0.0):
        raise DomainError("a cell center lies on or beyond the horizon 1 - lam*r^2 = 0")


def initial_data(grid: Grid, spec: InitSpec, model: BurgersModel) -> State:
    """Sample an initial condition onto the grid at t = 0.

    Riemann data places v_left strictly left of r_split (cells with
    r_j < r_split) and v_right elsewhere.  All cell values must satisfy
    |v| <= c; static data additionally needs a nonnegative radicand at
    every center.
    """
    _require_inside_horizon(grid, model)
    c = model.params.c
    if isinstance(spec, RiemannInit):
        for name, val in (("v_left", spec.v_left), ("v_right", spec.v_right)):
            if abs(val) > c:
                raise DomainError(f"{name}={val} exceeds the light speed c={c}")
        v = np.where(grid.centers < spec.r_split, spec.v_left, spec.v_right).astype(float)
    elif isinstance(spec, StaticInit):
        sol = StaticSolution(k=spec.k, sign=spec.sign)
        v = np.asarray(model.static_solution(sol, grid.centers), dtype=float)
        if np.any(np.abs(v) > c):
            raise DomainError("static initial data exceeds the light speed on the grid")
    elif isinstance(spec, ConstantInit):
        if abs(spec.v0) > c:
            raise DomainError(f"v0={spec.v0} exceeds the light speed c={c}")
        v = np.full(grid.n_cells, float(spec.v0))
    else:
        raise DomainError(f"unknown init spec {spec!r}")
    return State(t=0.0, v=v)


def _static_ghost(model: BurgersModel, sol: StaticSolution, r_ghost: float, r_edge: float) -> float:
    """Steady-family value for a ghost cell.

    Evaluated at the ghost center when admissible.  If the family stops
    between the domain edge and the ghost center (its radicand may vanish
    exactly at the edge), the ghost is pinned to the edge value instead;
    a family that is inadmissible at the edge itself is a domain error.
    """
    c = model.params.c
    if c * c - sol.k * model.flux_coefficient(r_ghost) >= 0.0:
        return float(model.static_solution(sol, r_ghost))
    return float(model.static_solution(sol, r_edge))


def apply_boundary(
    state: State, grid: Grid, config: SolverConfig, model: BurgersModel
) -> tuple[float, float]:
    """Ghost-cell values at the left and right ghost centers."""
    b = config.boundary
    if isinstance(b, Transmissive):
        return float(state.v[0]), float(state.v[-1])
    if isinstance(b, StaticDirichlet):
        sol = StaticSolution(k=b.k, sign=b.sign)
        left = _static_ghost(model, sol, grid.left_ghost_center, grid.r_min)
        right = _static_ghost(model, sol, grid.right_ghost_center, grid.r_max)
        return left, right
    if isinstance(b, FixedBoundary):
        return float(b.v_left), float(b.v_right)
    raise DomainError(f"unknown boundary {b!r}")


def cfl_dt(
    state: State,
    grid: Grid,
    model: BurgersModel,
    cfl: float,
    until: float | None = None,
) -> float:
    """Stable time step dt = cfl * dr / max_j |(1 - L r_j^2) v_j|.

    The maximum speed is floored at a small positive value so a quiescent
    state still advances.  If ``until`` is given, dt is clipped so the step
    lands exactly on that time (the run loop passes the next snapshot or
    stop time here).
    """
    speed = np.max(np.abs(model.characteristic_speed(state.v, grid.centers)))
    dt = cfl * grid.dr / max(float(speed), SPEED_FLOOR)
    if until is not None:
        remaining = until - state.t
        if remaining <= 0.0:
            raise DomainError(f"until={until} is not ahead of t={state.t}")
        dt = min(dt, remaining)
    return dt


def lf_step(
    state: State, grid: Grid, model: BurgersModel, config: SolverConfig, dt: float
) -> State:
    """Advance one Lax-Friedrichs step of size dt.

    Raises ``InstabilityError`` if the update produces a non-finite value
    or a cell speed beyond c + 0.1.
    """
    if not (dt > 0.0) or not math.isfinite(dt):
        raise DomainError(f"require a positive finite dt, got {dt}")
    left, right = apply_boundary(state, grid, config, model)
    n = grid.n_cells
    ve = np.empty(n + 2)
    ve[0] = left
    ve[1:-1] = state.v
    ve[-1] = right
    f = 0.5 * ve * ve

    if config.mode in ("conservative", "paper_literal"):
        re = np.empty(n + 2)
        re[0] = grid.left_ghost_center
        re[1:-1] = grid.centers
        re[-1] = grid.right_ghost_center
        b = model.flux_coefficient(re)
        flux_diff = b[2:] * f[2:] - b[:-2] * f[:-2]
    else:
        b_c = model.flux_coefficient(grid.centers)
        flux_diff = b_c * (f[2:] - f[:-2])

    src = model.source(state.v, grid.centers, config.mode)
    v_new = 0.5 * (ve[:-2] + ve[2:]) - (dt / (2.0 * grid.dr)) * flux_diff + dt * src

    if not np.all(np.isfinite(v_new)):
        raise InstabilityError("non-finite cell value after step")
    runaway = np.max(np.abs(v_new))
    if runaway > model.params.c + RUNAWAY_MARGIN:
        raise InstabilityError(f"cell speed {runaway} ran away beyond c + {RUNAWAY_MARGIN}")
    return State(t=state.t + dt, v=v_new)


@dataclass(frozen=True)
class SnapshotStats:
    """Per-snapshot diagnostics."""

    t: float
    max_abs_v: float
    min_v: float
    max_v: float
    total_variation: float


@dataclass(frozen=True)
class RunMetrics:
    """Diagnostics accumulated over a run."""

    snapshot_stats: tuple[SnapshotStats, ...]
    peak_abs_v: float
    n_steps: int
    wall_time_s: float


@dataclass(frozen=True)
class RunResult:
    """Snapshots (one per requested time, in order) plus run metrics."""

    snapshots: tuple[State, ...]
    metrics: RunMetrics


def _stats(state: State) -> SnapshotStats:
    v = state.v
    return SnapshotStats(
        t=state.t,
        max_abs_v=float(np.max(np.abs(v))),
        min_v=float(np.min(v)),
        max_v=float(np.max(v)),
        total_variation=float(np.sum(np.abs(np.diff(v)))),
    )


def run(grid: Grid, model: BurgersModel, config: SolverConfig, init: State) -> RunResult:
    """March ``init`` to t_end, emitting the state at each snapshot time.

    Steps are CFL-limited and clipped to land exactly on snapshot and stop
    times.  The returned snapshots correspond one-to-one with
    ``config.snapshot_times``.  Instability aborts carry the failing step
    index.
    """
    if init.v.shape != (grid.n_cells,):
        raise DomainError("initial state does not match the grid")
    _require_inside_horizon(grid, model)

    start = time.perf_counter()
    times = list(config.snapshot_times)
    eps = _EVENT_RTOL * max(1.0, config.t_end)
    state = State(t=init.t, v=init.v.copy())
    snaps: list[State] = []
    stats: list[SnapshotStats] = []
    peak = float(np.max(np.abs(state.v)))
    pointer = 0
    n_steps = 0

    def emit(s: State) -> None:
        snap = State(t=s.t, v=s.v.copy())
        snaps.append(snap)
        stats.append(_stats(snap))

    while pointer < len(times) and times[pointer] <= state.t + eps:
        emit(state)
        pointer += 1

    while state.t < config.t_end - eps:
        next_event = times[pointer] if pointer < len(times) else config.t_end
        dt = cfl_dt(state, grid, model, config.cfl, until=next_event)
        try:
            state = lf_step(state, grid, model, config, dt)
        except InstabilityError as err:
            err.step_index = n_steps
            raise
        n_steps += 1
        peak = max(peak, float(np.max(np.abs(state.v))))
        if state.t >= next_event - eps:
            state = State(t=next_event, v=state.v)
            while pointer < len(times) and times[pointer] <= state.t + eps:
                emit(state)
                pointer += 1

    metrics = RunMetrics(
        snapshot_stats=tuple(stats),
        peak_abs_v=peak,
        n_steps=n_steps,
        wall_time_s=time.perf_counter() - start,
    )
    return RunResult(snapshots=tuple(snaps), metrics=metrics)
