"""Flat key=value run configuration: parsing, validation, serialization.

A config file holds one ``key=value`` pair per line (``#`` starts a comment,
blank lines are ignored).  Command-line overrides use the same keys spelled
``--key=value`` and beat the file.  Unknown keys are errors, and everything
is validated before any computation starts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import ConfigError, DomainError
from .fvsolver import (
    Boundary,
    ConstantInit,
    FixedBoundary,
    Grid,
    InitSpec,
    RiemannInit,
    SolverConfig,
    StaticDirichlet,
    StaticInit,
    Transmissive,
    apply_boundary,
    initial_data,
    make_grid,
)
from .geometry import SpacetimeParams
from .model import BurgersModel

KNOWN_KEYS = (
    "lambda",
    "c",
    "n_cells",
    "r_min",
    "r_max",
    "cfl",
    "mode",
    "boundary",
    "init",
    "t_end",
    "snapshot_times",
    "out_dir",
)

_REQUIRED_KEYS = ("lambda", "n_cells", "r_min", "r_max", "t_end", "init")

_CALL_RE = re.compile(r"^([a-z_]+)\(([^)]*)\)$")


@dataclass(frozen=True)
class RunConfig:
    """One fully validated run setup."""

    lam: float
    c: float
    n_cells: int
    r_min: float
    r_max: float
    cfl: float
    mode: str
    boundary: Boundary
    init: InitSpec
    t_end: float
    snapshot_times: tuple[float, ...]
    out_dir: str | None = None

    def with_lambda(self, lam: float) -> "RunConfig":
        return replace(self, lam=lam)

    def build_grid(self) -> Grid:
        return make_grid(self.n_cells, self.r_min, self.r_max)

    def build_model(self) -> BurgersModel:
        params = SpacetimeParams(lam=self.lam, c=self.c)
        return BurgersModel(params=params, r_min=self.r_min, r_max=self.r_max)

    def build_solver_config(self) -> SolverConfig:
        return SolverConfig(
            t_end=self.t_end,
            mode=self.mode,
            cfl=self.cfl,
            boundary=self.boundary,
            snapshot_times=self.snapshot_times,
        )

    def meta_dict(self, tool_version: str) -> dict:
        """Every effective parameter, defaults included, for meta.json."""
        return {
            "lambda": self.lam,
            "c": self.c,
            "n_cells": self.n_cells,
            "r_min": self.r_min,
            "r_max": self.r_max,
            "cfl": self.cfl,
            "mode": self.mode,
            "boundary": format_boundary(self.boundary),
            "init": format_init(self.init),
            "t_end": self.t_end,
            "snapshot_times": list(self.snapshot_times),
            "tool_version": tool_version,
        }


def _parse_sign(token: str) -> int:
    if token == "+":
        return 1
    if token == "-":
        return -1
    raise ConfigError(f"expected sign '+' or '-', got {token!r}")


def _parse_float(token: str, what: str) -> float:
    try:
        return float(token)
    except ValueError as exc:
        raise ConfigError(f"bad {what}: {token!r}") from exc


def parse_init(text: str) -> InitSpec:
    """Parse ``riemann(vL,vR,r_split)``, ``static(K,+)``, or ``constant(v0)``."""
    m = _CALL_RE.match(text.strip())
    if not m:
        raise ConfigError(f"bad init spec {text!r}")
    name, raw_args = m.group(1), [a.strip() for a in m.group(2).split(",")]
    if name == "riemann":
        if len(raw_args) != 3:
            raise ConfigError("riemann init takes (v_left, v_right, r_split)")
        vl, vr, rs = (_parse_float(a, "riemann argument") for a in raw_args)
        return RiemannInit(v_left=vl, v_right=vr, r_split=rs)
    if name == "static":
        if len(raw_args) != 2:
            raise ConfigError("static init takes (K, sign)")
        return StaticInit(k=_parse_float(raw_args[0], "K"), sign=_parse_sign(raw_args[1]))
    if name == "constant":
        if len(raw_args) != 1:
            raise ConfigError("constant init takes (v0)")
        return ConstantInit(v0=_parse_float(raw_args[0], "v0"))
    raise ConfigError(f"unknown init kind {name!r}")


def parse_boundary(text: str) -> Boundary:
    """Parse ``transmissive``, ``static_dirichlet(K,+)``, or ``fixed(vL,vR)``."""
    stripped = text.strip()
    if stripped == "transmissive":
        return Transmissive()
    m = _CALL_RE.match(stripped)
    if not m:
        raise ConfigError(f"bad boundary spec {text!r}")
    name, raw_args = m.group(1), [a.strip() for a in m.group(2).split(",")]
    if name == "static_dirichlet":
        if len(raw_args) != 2:
            raise ConfigError("static_dirichlet boundary takes (K, sign)")
        return StaticDirichlet(k=_parse_float(raw_args[0], "K"), sign=_parse_sign(raw_args[1]))
    if name == "fixed":
        if len(raw_args) != 2:
            raise ConfigError("fixed boundary takes (v_left, v_right)")
        return FixedBoundary(
            v_left=_parse_float(raw_args[0], "v_left"),
            v_right=_parse_float(raw_args[1], "v_right"),
        )
    raise ConfigError(f"unknown boundary kind {name!r}")


def format_init(spec: InitSpec) -> str:
    if isinstance(spec, RiemannInit):
        return f"riemann({spec.v_left:g},{spec.v_right:g},{spec.r_split:g})"
    if isinstance(spec, StaticInit):
        return f"static({spec.k:g},{'+' if spec.sign > 0 else '-'})"
    if isinstance(spec, ConstantInit):
        return f"constant({spec.v0:g})"
    raise ConfigError(f"unknown init spec {spec!r}")


def format_boundary(b: Boundary) -> str:
    if isinstance(b, Transmissive):
        return "transmissive"
    if isinstance(b, StaticDirichlet):
        return f"static_dirichlet({b.k:g},{'+' if b.sign > 0 else '-'})"
    if isinstance(b, FixedBoundary):
        return f"fixed({b.v_left:g},{b.v_right:g})"
    raise ConfigError(f"unknown boundary {b!r}")


def parse_config_text(text: str, source: str = "<config>") -> dict[str, str]:
    """Parse key=value lines into a raw string mapping."""
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"{source}:{lineno}: expected key=value, got {line!r}")
        key, value = stripped.split("=", 1)
        key, value = key.strip(), value.strip()
        if key not in KNOWN_KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        raw[key] = value
    return raw


def apply_overrides(raw: dict[str, str], overrides: list[str]) -> dict[str, str]:
    """Apply ``--key=value`` overrides on top of the file values."""
    merged = dict(raw)
    for item in overrides:
        if not item.startswith("--") or "=" not in item:
            raise ConfigError(f"expected override of the form --key=value, got {item!r}")
        key, value = item[2:].split("=", 1)
        key = key.strip()
        if key not in KNOWN_KEYS:
            raise ConfigError(f"unknown override key {key!r}")
        merged[key] = value.strip()
    return merged


def build_run_config(raw: dict[str, str]) -> RunConfig:
    """Validate raw strings into a RunConfig (defaults applied here).

    Defaults: c=1, cfl=0.5, mode=conservative, snapshot_times=[t_end], and
    boundary transmissive, except static initial data defaults to the
    matching static_dirichlet boundary.
    """
    missing = [k for k in _REQUIRED_KEYS if k not in raw]
    if missing:
        raise ConfigError(f"missing required config keys: {', '.join(missing)}")

    lam = _parse_float(raw["lambda"], "lambda")
    c = _parse_float(raw.get("c", "1"), "c")
    try:
        n_cells = int(raw["n_cells"])
    except ValueError as exc:
        raise ConfigError(f"bad n_cells: {raw['n_cells']!r}") from exc
    r_min = _parse_float(raw["r_min"], "r_min")
    r_max = _parse_float(raw["r_max"], "r_max")
    cfl = _parse_float(raw.get("cfl", "0.5"), "cfl")
    mode = raw.get("mode", "conservative")
    t_end = _parse_float(raw["t_end"], "t_end")
    init = parse_init(raw["init"])

    if "boundary" in raw:
        boundary = parse_boundary(raw["boundary"])
    elif isinstance(init, StaticInit):
        boundary = StaticDirichlet(k=init.k, sign=init.sign)
    else:
        boundary = Transmissive()

    if "snapshot_times" in raw:
        tokens = [tok.strip() for tok in raw["snapshot_times"].split(",") if tok.strip()]
        if not tokens:
            raise ConfigError("snapshot_times must list at least one time")
        snapshot_times = tuple(_parse_float(tok, "snapshot time") for tok in tokens)
    else:
        snapshot_times = (t_end,)

    cfg = RunConfig(
        lam=lam,
        c=c,
        n_cells=n_cells,
        r_min=r_min,
        r_max=r_max,
        cfl=cfl,
        mode=mode,
        boundary=boundary,
        init=init,
        t_end=t_end,
        snapshot_times=snapshot_times,
        out_dir=raw.get("out_dir"),
    )
    # Surface every validation problem as a config error before running:
    # grid and model construction, solver parameters, initial data sampled
    # on the actual grid, and the boundary evaluated once against it.
    try:
        grid = cfg.build_grid()
        model = cfg.build_model()
        solver_cfg = cfg.build_solver_config()
        state = initial_data(grid, cfg.init, model)
        apply_boundary(state, grid, solver_cfg, model)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
    return cfg


def load_run_config(source: str | Path, overrides: list[str] | None = None) -> RunConfig:
    """Load a config from a file path or a named preset, then apply overrides."""
    from .presets import PRESETS  # local import to avoid a cycle

    path = Path(source)
    if path.is_file():
        text, label = path.read_text(encoding="utf-8"), str(source)
    elif str(source) in PRESETS:
        text, label = PRESETS[str(source)], f"<preset {source}>"
    else:
        raise ConfigError(f"config {source!r} is neither a file nor a known preset")
    raw = parse_config_text(text, source=label)
    return build_run_config(apply_overrides(raw, overrides or []))
