"""Command-line interface.

    dsburgers verify [--json]
    dsburgers run <config> [--key=value ...]
    dsburgers sweep <config> --lambdas=L1,L2,... [--key=value ...]
    dsburgers static <config> [--all-modes] [--key=value ...]

``<config>`` is a key=value file path or a preset name (fig1..fig7).
Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 runtime instability.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from .config import load_run_config
from .errors import ConfigError, InstabilityError
from .fvsolver import MODES
from .runs import (
    execute_run,
    static_experiment,
    sweep,
    write_run_dir,
    write_static_dir,
    write_sweep_dir,
)
from .verify import run_checks

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_INSTABILITY = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsburgers",
        description="Finite-volume solver for the relativistic Burgers equation "
        "on a de Sitter background.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify", help="run the built-in verification suite").add_argument(
        "--json", action="store_true", help="emit a machine-readable report"
    )

    p_run = sub.add_parser("run", help="run one configuration")
    p_run.add_argument("config", help="config file path or preset name")

    p_sweep = sub.add_parser("sweep", help="run one configuration across lambdas")
    p_sweep.add_argument("config", help="config file path or preset name")
    p_sweep.add_argument("--lambdas", required=True, help="comma-separated lambda values")

    p_static = sub.add_parser("static", help="static-preservation experiment")
    p_static.add_argument("config", help="config file path or preset name")
    p_static.add_argument(
        "--all-modes", action="store_true", help="repeat the experiment in every scheme mode"
    )

    return parser


def _out_dir(cfg) -> Path:
    if not cfg.out_dir:
        raise ConfigError("no output directory; set out_dir in the config or pass --out_dir=...")
    return Path(cfg.out_dir)


def cmd_verify(as_json: bool) -> int:
    results = run_checks()
    ok = all(res.passed for res in results)
    if as_json:
        payload = {
            "passed": ok,
            "checks": [
                {
                    "name": res.name,
                    "passed": res.passed,
                    "max_error": res.max_error,
                    "tolerance": res.tolerance,
                }
                for res in results
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        width = max(len(res.name) for res in results)
        for res in results:
            status = "PASS" if res.passed else "FAIL"
            print(f"{res.name:<{width}}  {status}  max_error={res.max_error:.3e}  "
                  f"tolerance={res.tolerance:.1e}")
        print("verification " + ("passed" if ok else "FAILED"))
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_run(config: str, overrides: list[str]) -> int:
    cfg = load_run_config(config, overrides)
    out = _out_dir(cfg)
    executed = execute_run(cfg)
    write_run_dir(out, executed)
    m = executed.result.metrics
    print(f"wrote {len(executed.result.snapshots)} snapshot(s) to {out} "
          f"({m.n_steps} steps, {m.wall_time_s:.3f}s)")
    return EXIT_OK


def _parse_lambdas(text: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ConfigError(f"bad --lambdas value {text!r}") from exc
    if not values:
        raise ConfigError("--lambdas must list at least one value")
    return values


def cmd_sweep(config: str, lambdas_text: str, overrides: list[str]) -> int:
    cfg = load_run_config(config, overrides)
    out = _out_dir(cfg)
    outcome = sweep(cfg, _parse_lambdas(lambdas_text))
    write_sweep_dir(out, outcome)
    print(f"wrote {len(outcome.runs)} run(s) and metrics.csv to {out}")
    return EXIT_OK


def cmd_static(config: str, all_modes: bool, overrides: list[str]) -> int:
    cfg = load_run_config(config, overrides)
    out = _out_dir(cfg)
    modes = MODES if all_modes else (cfg.mode,)
    for mode in modes:
        outcome = static_experiment(replace(cfg, mode=mode))
        target = out / mode if all_modes else out
        write_static_dir(target, outcome)
        worst = max((row[1] for row in outcome.drift_rows), default=0.0)
        print(f"mode {mode}: max L-inf drift {worst:.3e}, report in {target}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args, extras = parser.parse_known_args(argv)
    try:
        if args.command == "verify":
            if extras:
                raise ConfigError(f"unexpected arguments: {extras}")
            return cmd_verify(args.json)
        if args.command == "run":
            return cmd_run(args.config, extras)
        if args.command == "sweep":
            return cmd_sweep(args.config, args.lambdas, extras)
        if args.command == "static":
            return cmd_static(args.config, args.all_modes, extras)
        raise ConfigError(f"unknown command {args.command!r}")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except InstabilityError as exc:
        step = f" at step {exc.step_index}" if exc.step_index is not None else ""
        print(f"instability{step}: {exc}", file=sys.stderr)
        return EXIT_INSTABILITY


def entry() -> None:
    raise SystemExit(main())
