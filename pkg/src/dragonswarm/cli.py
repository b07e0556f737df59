"""Command line front end for :func:`dragonswarm.harness.run_grid`.

Values come from built-in defaults, then an optional ``--config`` file of
``key = value`` lines (same names as the long flags), then the flags.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .harness import ALGOS, FORMATS, RunConfig, load_config_file, run_grid

DEFAULTS = {
    "algo": "da",
    "suite": None,
    "fn": None,
    "dim": 30,
    "pop": 30,
    "iters": 500,
    "runs": 30,
    "seed": 0,
    "out": "results",
    "format": ",".join(FORMATS),
    "step_mode": None,
    "tf_kind": "static_v",
    "pso_mode": "linear",
    "capacity": 100,
    "segments": 10,
    "jobs": 1,
    "no_timing": False,
}

_INT_KEYS = {"dim", "pop", "iters", "runs", "seed", "capacity", "segments", "jobs"}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dragonswarm",
        description="Run seeded optimizer x benchmark grids and write results, stats and curves.",
    )
    p.add_argument("--config", help="flat key = value file; flags override it")
    p.add_argument("--algo", help=f"comma-separated list from: {', '.join(ALGOS)} (default da)")
    p.add_argument("--suite", choices=["classical", "cec2019"], help="benchmark suite (default classical)")
    p.add_argument("--fn", help="comma-separated function ids, e.g. TF1,TF10 or ONEMAX or SCHAFFER")
    p.add_argument("--dim", type=int, help="dimension of scalable functions and bit strings (default 30)")
    p.add_argument("--pop", type=int, help="population size (default 30)")
    p.add_argument("--iters", type=int, help="iterations per run (default 500)")
    p.add_argument("--runs", type=int, help="independent runs per cell (default 30)")
    p.add_argument("--seed", type=int, help="base seed; run k uses seed + k (default 0)")
    p.add_argument("--out", help="output directory (default ./results)")
    p.add_argument("--format", help="comma-separated stats formats: csv,json,markdown (default all)")
    p.add_argument("--step-mode", dest="step_mode", choices=["levy", "brownian"],
                   help="random walk for isolated dragonflies")
    p.add_argument("--tf-kind", dest="tf_kind", choices=["static_v", "time_varying"],
                   help="transfer function for bda (default static_v)")
    p.add_argument("--pso-mode", dest="pso_mode", choices=["linear", "constriction"],
                   help="PSO inertia regime (default linear)")
    p.add_argument("--capacity", type=int, help="moda archive capacity (default 100)")
    p.add_argument("--segments", type=int, help="moda grid bins per objective (default 10)")
    p.add_argument("--jobs", type=int, help="parallel worker processes (default 1)")
    p.add_argument("--no-timing", dest="no_timing", action="store_true", default=None,
                   help="write wall times as 0 so repeated grids are byte-identical")
    return p


def _split(value: Optional[str]) -> tuple[str, ...]:
    if not value:
        return ()
    return tuple(v.strip() for v in value.split(",") if v.strip())


def resolve(args: argparse.Namespace) -> RunConfig:
    values = dict(DEFAULTS)
    if args.config:
        for key, raw in load_config_file(args.config).items():
            if key not in DEFAULTS:
                raise ValueError(f"unknown config key {key!r}")
            if key in _INT_KEYS:
                values[key] = int(raw)
            elif key == "no_timing":
                values[key] = raw.lower() in ("1", "true", "yes", "on")
            else:
                values[key] = raw
    for key in DEFAULTS:
        v = getattr(args, key, None)
        if v is not None:
            values[key] = v
    return RunConfig(
        algos=_split(values["algo"]),
        suite=values["suite"],
        functions=_split(values["fn"]),
        pop=values["pop"],
        iters=values["iters"],
        dim=values["dim"],
        runs=values["runs"],
        base_seed=values["seed"],
        out_dir=values["out"],
        step_mode=values["step_mode"],
        tf_kind=values["tf_kind"],
        pso_mode=values["pso_mode"],
        capacity=values["capacity"],
        n_segments=values["segments"],
        jobs=values["jobs"],
        timing=not values["no_timing"],
        formats=_split(values["format"]),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Exit status: 0 when every run finished, 1 when any run failed, 2 on bad input or I/O errors."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve(args)
        grid = run_grid(cfg)
    except (ValueError, KeyError, OSError) as exc:
        print(f"dragonswarm: error: {exc}", file=sys.stderr)
        return 2
    done = len(grid.results) - len(grid.failures)
    print(f"{done}/{len(grid.results)} runs completed; output in {cfg.out_dir}")
    for r in grid.failures:
        t = r.task
        print(f"FAILED {t.algo} {t.function} run {t.run} (seed {t.seed}): {r.error}", file=sys.stderr)
    return 1 if grid.failures else 0


if __name__ == "__main__":
    sys.exit(main())
