"""Experiment grids: seeded repeated runs, statistics and report files.

A grid is every (algorithm, function) pair in a :class:`RunConfig` times
``runs`` seeds. Run ``k`` uses seed ``base_seed + k``. Files written to
``out_dir``:

``results.csv``
    one row per run: ``algo,function,run,seed,best_value,wall_seconds,evaluations,status``
``stats.csv`` / ``stats.json`` / ``stats.md``
    one aggregate per (function, algo), failed runs excluded
``curves.csv``
    ``iteration`` then one best-so-far column per successful run, named
    ``algo/function/runK``
``archives/<algo>_<function>_run<K>.csv``
    multi-objective runs only: ``x0..x{d-1}`` then ``f0..f{k-1}``
``run_config.json``
    the resolved configuration, including the PSO inertia mode
"""

from __future__ import annotations

import csv
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from . import benchfns
from .baselines import GaConfig, PsoConfig, ga_optimize, gwo_optimize, pso_optimize
from .binary import TransferConfig, onemax, optimize_binary
from .core import RunRecord, SearchSpace, run_seed
from .da import DaConfig, optimize
from .moda import optimize_multi, schaffer, write_archive_csv

ALGOS = ("da", "da_brownian", "bda", "moda", "pso", "gwo", "ga")
FORMATS = ("csv", "json", "markdown")

#: Bit-string problems for ``bda``; the dimension comes from the config.
BINARY_PROBLEMS = {"ONEMAX": onemax}

#: Multi-objective problems for ``moda``: objective function and search space.
MULTI_PROBLEMS = {"SCHAFFER": (schaffer, SearchSpace.box(1, -1000.0, 1000.0))}

RESULT_COLUMNS = ["algo", "function", "run", "seed", "best_value", "wall_seconds", "evaluations", "status"]
STAT_COLUMNS = ["function", "algo", "mean", "std", "time_sec", "runs"]


def fmt_float(v: float) -> str:
    """Scientific notation with 17 significant digits, which round-trips any double."""
    return format(float(v), ".16e")


@dataclass(frozen=True)
class RunConfig:
    """One experiment grid.

    ``functions`` takes precedence over ``suite``. When both are empty each
    algorithm falls back to its natural problem set: the classical suite
    for continuous optimizers, OneMax for ``bda``, Schaffer for ``moda``.
    ``timing=False`` writes every wall time as 0 so that repeated grids
    produce byte-identical files.
    """

    algos: tuple[str, ...] = ("da",)
    suite: Optional[str] = None
    functions: tuple[str, ...] = ()
    pop: int = 30
    iters: int = 500
    dim: int = 30
    runs: int = 30
    base_seed: int = 0
    out_dir: str = "results"
    step_mode: Optional[str] = None
    tf_kind: str = "static_v"
    pso_mode: str = "linear"
    capacity: int = 100
    n_segments: int = 10
    jobs: int = 1
    timing: bool = True
    formats: tuple[str, ...] = FORMATS

    def __post_init__(self):
        object.__setattr__(self, "algos", tuple(self.algos))
        object.__setattr__(self, "functions", tuple(f.upper() for f in self.functions))
        object.__setattr__(self, "formats", tuple(self.formats))
        if not self.algos:
            raise ValueError("at least one algorithm is required")
        for a in self.algos:
            if a not in ALGOS:
                raise ValueError(f"unknown algorithm {a!r}; choose from {', '.join(ALGOS)}")
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        if self.pop < 2:
            raise ValueError("pop must be >= 2")
        if self.iters < 1:
            raise ValueError("iters must be >= 1")
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.step_mode not in (None, "levy", "brownian"):
            raise ValueError(f"unknown step mode {self.step_mode!r}")
        if self.pso_mode not in ("linear", "constriction"):
            raise ValueError(f"unknown PSO mode {self.pso_mode!r}")
        TransferConfig(self.tf_kind)
        for f in self.formats:
            if f not in FORMATS:
                raise ValueError(f"unknown format {f!r}; choose from {', '.join(FORMATS)}")
        if self.suite is not None and self.suite not in ("classical", "cec2019"):
            raise ValueError(f"unknown suite {self.suite!r}")

    def functions_for(self, algo: str) -> list[str]:
        if algo == "bda":
            pool, default = BINARY_PROBLEMS, ["ONEMAX"]
        elif algo == "moda":
            pool, default = MULTI_PROBLEMS, ["SCHAFFER"]
        else:
            pool, default = benchfns.SUITE_OF, None
        if self.functions:
            bad = [f for f in self.functions if f not in pool]
            if bad:
                raise ValueError(f"{algo} cannot run {', '.join(bad)}")
            return list(self.functions)
        if default is not None:
            return default
        return [fn.id for fn in benchfns.suite(self.suite or "classical", self.dim)]


@dataclass(frozen=True)
class Task:
    algo: str
    function: str
    run: int
    seed: int
    cfg: RunConfig


@dataclass
class RunResult:
    task: Task
    record: Optional[RunRecord] = None
    error: Optional[str] = None
    archive: Optional[object] = None

    @property
    def ok(self) -> bool:
        return self.record is not None


@dataclass(frozen=True)
class StatRow:
    algo: str
    function: str
    mean: float
    std: float
    total_time: float
    runs: int


@dataclass
class GridResult:
    results: list[RunResult] = field(default_factory=list)
    stats: list[StatRow] = field(default_factory=list)

    @property
    def failures(self) -> list[RunResult]:
        return [r for r in self.results if not r.ok]


def _da_config(cfg: RunConfig, seed: int, step_mode: str) -> DaConfig:
    return DaConfig(pop=cfg.pop, iters=cfg.iters, seed=seed, step_mode=step_mode)


def solve(task: Task) -> tuple[RunRecord, Optional[object]]:
    """Run one seeded optimization; returns the record and, for MODA, the archive."""
    cfg, algo, fid, seed = task.cfg, task.algo, task.function, task.seed
    if algo == "bda":
        rec = optimize_binary(BINARY_PROBLEMS[fid], cfg.dim, _da_config(cfg, seed, cfg.step_mode or "levy"),
                              TransferConfig(cfg.tf_kind))
        return rec, None
    if algo == "moda":
        objectives, space = MULTI_PROBLEMS[fid]
        archive, rec = optimize_multi(objectives, space, _da_config(cfg, seed, cfg.step_mode or "levy"),
                                      cfg.capacity, cfg.n_segments)
        return rec, archive
    fn = benchfns.get(fid, cfg.dim)
    if algo in ("da", "da_brownian"):
        mode = "brownian" if algo == "da_brownian" else (cfg.step_mode or "levy")
        return optimize(fn.raw, fn.space, _da_config(cfg, seed, mode)), None
    if algo == "pso":
        pc = PsoConfig(pop=cfg.pop, iters=cfg.iters, seed=seed)
        if cfg.pso_mode == "constriction":
            pc = PsoConfig.constriction(pop=cfg.pop, iters=cfg.iters, seed=seed)
        return pso_optimize(fn.raw, fn.space, pc), None
    if algo == "gwo":
        return gwo_optimize(fn.raw, fn.space, cfg.pop, cfg.iters, seed), None
    return ga_optimize(fn.raw, fn.space, GaConfig(pop=cfg.pop, iters=cfg.iters, seed=seed)), None


def _execute(task: Task) -> RunResult:
    # A failing objective aborts only its own run.
    try:
        rec, archive = solve(task)
    except Exception as exc:  # noqa: BLE001 - recorded as a failure marker
        return RunResult(task, error=f"{type(exc).__name__}: {exc}")
    if not task.cfg.timing:
        rec.wall_seconds = 0.0
    return RunResult(task, rec, archive=archive)


def tasks_for(cfg: RunConfig) -> list[Task]:
    out = []
    for algo in cfg.algos:
        for fid in cfg.functions_for(algo):
            for k in range(cfg.runs):
                out.append(Task(algo, fid, k, run_seed(cfg.base_seed, k), cfg))
    return out


def _function_order(fid: str) -> tuple[int, str]:
    ids = list(benchfns.SUITE_OF)
    return (ids.index(fid), fid) if fid in ids else (len(ids), fid)


def sample_std(values: Sequence[float]) -> float:
    """Sample standard deviation (divisor n - 1); 0 for a single value."""
    if len(values) < 2:
        return 0.0
    return float(np.std(np.asarray(values, dtype=float), ddof=1))


def aggregate(results: Iterable[RunResult], algos: Sequence[str]) -> list[StatRow]:
    """One :class:`StatRow` per (function, algo), functions in suite order; failed runs are skipped."""
    groups: dict[tuple[str, str], list[RunRecord]] = {}
    for r in results:
        if r.ok:
            groups.setdefault((r.task.function, r.task.algo), []).append(r.record)
    rows = []
    for (fid, algo) in sorted(groups, key=lambda k: (_function_order(k[0]), list(algos).index(k[1]))):
        recs = groups[(fid, algo)]
        vals = sorted(rec.best_value for rec in recs)
        rows.append(StatRow(algo, fid, math.fsum(vals) / len(vals), sample_std(vals),
                            math.fsum(sorted(rec.wall_seconds for rec in recs)), len(recs)))
    return rows


def run_grid(cfg: RunConfig, write: bool = True) -> GridResult:
    """Run every task in ``cfg`` (in parallel when ``jobs > 1``) and write the output files."""
    tasks = tasks_for(cfg)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_execute, tasks))
    else:
        results = [_execute(t) for t in tasks]
    grid = GridResult(results, aggregate(results, cfg.algos))
    if write:
        write_outputs(grid, cfg)
    return grid


# ---------------------------------------------------------------------------
# files
# ---------------------------------------------------------------------------


def _open_for_write(path: Path):
    try:
        return open(path, "w", newline="", encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def write_results(results: Sequence[RunResult], path: str | Path) -> None:
    with _open_for_write(Path(path)) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(RESULT_COLUMNS)
        for r in results:
            t = r.task
            if r.ok:
                rec = r.record
                w.writerow([t.algo, t.function, t.run, t.seed, fmt_float(rec.best_value),
                            fmt_float(rec.wall_seconds), rec.evaluations, "ok"])
            else:
                w.writerow([t.algo, t.function, t.run, t.seed, "", "", "", f"FAILED {r.error}"])


def emit_report(stats: Sequence[StatRow], fmt: str, path: str | Path) -> Path:
    """Write aggregate statistics as ``csv``, ``json`` or ``markdown``."""
    if not stats:
        raise ValueError("no statistics to report")
    path = Path(path)
    if fmt == "csv":
        with _open_for_write(path) as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(STAT_COLUMNS)
            for s in stats:
                w.writerow([s.function, s.algo, fmt_float(s.mean), fmt_float(s.std), fmt_float(s.total_time), s.runs])
    elif fmt == "json":
        rows = [asdict(s) for s in stats]
        with _open_for_write(path) as fh:
            json.dump(rows, fh, indent=2)
            fh.write("\n")
    elif fmt == "markdown":
        with _open_for_write(path) as fh:
            fh.write(_markdown(stats))
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return path


def _markdown(stats: Sequence[StatRow]) -> str:
    algos = list(dict.fromkeys(s.algo for s in stats))
    by_fn: dict[str, dict[str, StatRow]] = {}
    for s in stats:
        by_fn.setdefault(s.function, {})[s.algo] = s
    lines = ["| Function | Measure | " + " | ".join(algos) + " |", "|---|---|" + "---|" * len(algos)]
    for fid in sorted(by_fn, key=_function_order):
        row = by_fn[fid]
        for label, attr in (("Mean", "mean"), ("Std.", "std"), ("Time (Sec.)", "total_time")):
            cells = [fmt_float(getattr(row[a], attr)) if a in row else "" for a in algos]
            lines.append(f"| {fid} | {label} | " + " | ".join(cells) + " |")
    runs = sorted({s.runs for s in stats})
    lines += [
        "",
        f"Runs per cell: {', '.join(map(str, runs))}. Std. is the sample standard deviation (n - 1). "
        "Time (Sec.) is total wall time over all runs of the cell, measured around the optimizer call only.",
        "",
    ]
    return "\n".join(lines)


def convergence_dump(records: Sequence[RunRecord], path: str | Path, labels: Optional[Sequence[str]] = None) -> Path:
    """CSV with an ``iteration`` column (from 1) and one best-so-far column per record."""
    if not records:
        raise ValueError("no records to dump")
    labels = list(labels) if labels is not None else [f"run{i}" for i in range(len(records))]
    if len(labels) != len(records):
        raise ValueError("one label per record is required")
    n = max(len(r.curve) for r in records)
    path = Path(path)
    with _open_for_write(path) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["iteration"] + labels)
        for i in range(n):
            w.writerow([i + 1] + [fmt_float(r.curve[i]) if i < len(r.curve) else "" for r in records])
    return path


_SUFFIX = {"csv": "csv", "json": "json", "markdown": "md"}


def write_outputs(grid: GridResult, cfg: RunConfig) -> None:
    out = Path(cfg.out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create output directory {out}: {exc.strerror or exc}") from exc
    write_results(grid.results, out / "results.csv")
    if grid.stats:
        for fmt in cfg.formats:
            emit_report(grid.stats, fmt, out / f"stats.{_SUFFIX[fmt]}")
    ok = [r for r in grid.results if r.ok]
    if ok:
        convergence_dump([r.record for r in ok], out / "curves.csv",
                         [f"{r.task.algo}/{r.task.function}/run{r.task.run}" for r in ok])
    archived = [r for r in ok if r.archive is not None]
    if archived:
        (out / "archives").mkdir(exist_ok=True)
        for r in archived:
            write_archive_csv(r.archive, out / "archives" / f"{r.task.algo}_{r.task.function}_run{r.task.run}.csv")
    with _open_for_write(out / "run_config.json") as fh:
        json.dump(asdict(cfg), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_config_file(path: str | os.PathLike) -> dict[str, str]:
    """Parse a flat ``key = value`` file; ``#`` starts a comment, blank lines are skipped."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for n, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{n}: expected key = value")
            key, value = (p.strip() for p in line.split("=", 1))
            out[key.replace("-", "_")] = value
    return out
