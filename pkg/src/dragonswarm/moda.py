"""Multi-objective Dragonfly Algorithm (MODA).

A bounded Pareto archive replaces the single food and enemy. Objective
space is cut into an equal grid over the archive's bounding box; food
comes from sparse cells, the enemy from the most crowded one, and the
archive is trimmed from crowded cells when it overflows.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np

from .core import (
    ObjectiveError,
    RunRecord,
    SearchSpace,
    euclidean_radius,
    make_rng,
    neighbor_mask,
    radius_schedule,
    weights_at,
)
from .da import DaConfig, _init_swarm, _random_walk, swarm_step

MultiObjective = Callable[[np.ndarray], Sequence[float]]


def dominates(u, v) -> bool:
    """``True`` iff ``u`` is no worse than ``v`` everywhere and better somewhere (minimization)."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape:
        raise ValueError(f"objective vectors differ in length: {u.shape} vs {v.shape}")
    return bool(np.all(u <= v) and np.any(u < v))


@dataclass
class ParetoArchive:
    """Mutually non-dominated ``(position, objectives)`` pairs.

    Attributes:
        capacity: Maximum number of entries kept after truncation.
        n_segments: Grid bins per objective used to measure crowding.
        X: Decision vectors, shape ``(n, dim)``.
        F: Objective vectors, shape ``(n, k)``, aligned with ``X``.
    """

    capacity: int = 100
    n_segments: int = 10
    X: Optional[np.ndarray] = None
    F: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.capacity < 0:
            raise ValueError("capacity must be non-negative")
        if self.n_segments < 1:
            raise ValueError("n_segments must be >= 1")

    def __len__(self) -> int:
        return 0 if self.F is None else self.F.shape[0]

    @property
    def entries(self) -> list[tuple[np.ndarray, np.ndarray]]:
        return [] if self.F is None else list(zip(self.X, self.F))

    def keep(self, idx) -> None:
        self.X = self.X[idx]
        self.F = self.F[idx]

    def remove(self, i: int) -> None:
        self.keep(np.arange(len(self)) != i)

    def is_mutually_nondominated(self) -> bool:
        if len(self) < 2:
            return True
        F = self.F
        le = np.all(F[:, None, :] <= F[None, :, :], axis=2)
        lt = np.any(F[:, None, :] < F[None, :, :], axis=2)
        return not bool(np.any(le & lt))


def archive_insert(
    arch: ParetoArchive, cand: tuple, rng: Optional[np.random.Generator] = None
) -> tuple[ParetoArchive, bool]:
    """Offer ``cand = (position, objectives)`` to the archive, in place.

    Rejected iff some resident dominates it. Otherwise it is added, the
    residents it dominates are dropped, and the archive is truncated if it
    now exceeds capacity (``rng`` picks the victims; a fixed stream seeded
    with 0 is used when none is given).

    Returns:
        The same archive and whether the candidate was accepted.
    """
    position, objs = cand
    f = np.asarray(objs, dtype=float).reshape(-1)
    x = np.asarray(position, dtype=float).reshape(-1)
    if not np.all(np.isfinite(f)):
        raise ValueError("candidate objectives must be finite")
    if len(arch) == 0:
        arch.X, arch.F = x[None, :].copy(), f[None, :].copy()
        return arch, True
    if f.shape[0] != arch.F.shape[1]:
        raise ValueError("candidate has the wrong number of objectives")
    F = arch.F
    if np.any(np.all(F <= f, axis=1) & np.any(F < f, axis=1)):
        return arch, False
    arch.keep(~(np.all(f <= F, axis=1) & np.any(f < F, axis=1)))
    arch.X = np.vstack([arch.X, x])
    arch.F = np.vstack([arch.F, f])
    if len(arch) > arch.capacity:
        truncate(arch, rng if rng is not None else make_rng(0))
    return arch, True


def segment(arch: ParetoArchive) -> dict[int, list[int]]:
    """Map grid-cell id to the indices of the entries inside it.

    Each objective's range over the archive is split into ``n_segments``
    equal bins. A value on a bin boundary goes to the lower bin, the minimum
    to the first bin, and a zero-width range puts everything in bin 0.
    Cell ids are the row-major flattening of the per-objective bins.
    """
    if len(arch) == 0:
        return {}
    F = arch.F
    n = arch.n_segments
    lo = F.min(axis=0)
    width = F.max(axis=0) - lo
    safe = np.where(width > 0, width, 1.0)
    bins = np.ceil((F - lo) / safe * n).astype(int) - 1
    bins = np.clip(bins, 0, n - 1)
    bins[:, width == 0] = 0
    ids = np.ravel_multi_index(bins.T, (n,) * F.shape[1])
    cells: dict[int, list[int]] = {}
    for i, c in enumerate(ids):
        cells.setdefault(int(c), []).append(i)
    return dict(sorted(cells.items()))


def _require_entries(arch: ParetoArchive) -> None:
    if len(arch) == 0:
        raise ValueError("archive is empty")


def select_food(arch: ParetoArchive, rng: np.random.Generator) -> np.ndarray:
    """Roulette over occupied cells with weight ``1 / (count + 1)``, then a uniform member."""
    _require_entries(arch)
    cells = list(segment(arch).values())
    w = np.array([1.0 / (len(c) + 1) for c in cells])
    k = int(rng.choice(len(cells), p=w / w.sum()))
    return arch.X[cells[k][int(rng.integers(len(cells[k])))]].copy()


def _crowded_cell(arch: ParetoArchive) -> list[int]:
    # max() keeps the first maximum and cells are sorted by id, so ties go to the lowest id.
    return max(segment(arch).values(), key=len)


def select_enemy(arch: ParetoArchive, rng: np.random.Generator) -> np.ndarray:
    """Uniform member of the most crowded cell (ties to the lowest cell id)."""
    _require_entries(arch)
    cell = _crowded_cell(arch)
    return arch.X[cell[int(rng.integers(len(cell)))]].copy()


def truncate(arch: ParetoArchive, rng: np.random.Generator) -> ParetoArchive:
    """Drop random members of the most crowded cell until within capacity, regridding each time."""
    while len(arch) > arch.capacity:
        cell = _crowded_cell(arch)
        arch.remove(cell[int(rng.integers(len(cell)))])
    return arch


def hypervolume_2d(points, ref) -> float:
    """Area dominated by a set of 2-objective points and bounded by ``ref``."""
    P = np.asarray(points, dtype=float).reshape(-1, 2)
    ref = np.asarray(ref, dtype=float)
    P = P[np.all(P < ref, axis=1)]
    if P.size == 0:
        return 0.0
    P = P[np.lexsort((P[:, 1], P[:, 0]))]
    area = 0.0
    best_f2 = ref[1]
    for f1, f2 in P:
        if f2 < best_f2:
            area += (ref[0] - f1) * (best_f2 - f2)
            best_f2 = f2
    return float(area)


def schaffer(x) -> np.ndarray:
    """Schaffer's bi-objective problem: ``(x^2, (x - 2)^2)``, front at ``x`` in ``[0, 2]``."""
    x = float(np.asarray(x, dtype=float).reshape(-1)[0])
    return np.array([x * x, (x - 2.0) ** 2])


def schaffer_front_hypervolume(ref=(5.0, 5.0)) -> float:
    """Exact hypervolume of the Schaffer front for a reference point with both coordinates >= 4."""
    r1, r2 = map(float, ref)
    if r1 < 4.0 or r2 < 4.0:
        raise ValueError("closed form needs ref >= (4, 4)")
    # integral of (2 - sqrt(a))^2 over [0, 4] is 8/3
    return r1 * r2 - 8.0 / 3.0


def _evaluate_multi(objectives: MultiObjective, X: np.ndarray) -> np.ndarray:
    F = np.array([np.asarray(objectives(x), dtype=float) for x in X])
    if F.ndim != 2 or F.shape[1] < 2:
        raise ValueError("a multi-objective function must return at least 2 values")
    bad = ~np.all(np.isfinite(F), axis=1)
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise ObjectiveError(f"objectives returned {F[i].tolist()} at in-bounds point {X[i].tolist()}")
    return F


def optimize_multi(
    objectives: MultiObjective,
    space: SearchSpace,
    cfg: DaConfig,
    capacity: int = 100,
    n_segments: int = 10,
) -> tuple[ParetoArchive, RunRecord]:
    """Approximate the Pareto front of ``objectives`` over ``space``.

    Same swarm update as :func:`dragonswarm.da.optimize`, except that food
    and enemy are drawn from the archive every iteration. Every evaluated
    agent is offered to the archive.

    The returned record's scalar is the best-so-far sum of objectives, so
    its curve is monotone like the single-objective one.
    """
    if space.mode != "continuous":
        raise ValueError("optimize_multi needs a continuous search space")
    rng = make_rng(cfg.seed)
    start = time.perf_counter()
    X, dX = _init_swarm(space, cfg, rng, None)
    T = cfg.iters
    max_step = space.width * cfg.max_step_fraction
    arch = ParetoArchive(capacity=capacity, n_segments=n_segments)
    curve = np.empty(T)
    best = np.inf
    best_x = X[0].copy()
    n_eval = 0

    for t in range(T):
        F = _evaluate_multi(objectives, X)
        n_eval += F.shape[0]
        for x, f in zip(X, F):
            archive_insert(arch, (x, f), rng)
        total = F.sum(axis=1)
        i = int(np.argmin(total))
        if total[i] < best:
            best, best_x = float(total[i]), X[i].copy()
        curve[t] = best
        if t == T - 1:
            break

        if len(arch):
            food = select_food(arch, rng)
            enemy = select_enemy(arch, rng)
        else:
            # Unreachable in practice: a non-empty swarm always leaves a non-dominated point.
            food = X[i].copy()
            enemy = X[int(np.argmax(total))].copy()
        w = weights_at(cfg.weights, t, T, rng, cfg.weights.draw_shape(cfg.pop, space.dim))
        radius = euclidean_radius(radius_schedule(space, t, T, cfg.radius_start, cfg.radius_growth))
        mask = neighbor_mask(X, radius)
        step, has = swarm_step(X, dX, mask, food, enemy, w, max_step, cfg.enemy_form)
        new_X = X + step
        for j in np.flatnonzero(~has):
            new_X[j] = _random_walk(X[j], space, cfg, rng)
            step[j] = 0.0 if cfg.reset_step_after_walk else dX[j]
        X = space.clip(new_X)
        dX = step

    record = RunRecord(
        best_value=best,
        best_position=best_x,
        curve=curve,
        wall_seconds=time.perf_counter() - start,
        seed=cfg.seed,
        evaluations=n_eval,
        extra={"archive_size": len(arch)},
    )
    return arch, record


def archive_columns(dim: int, n_obj: int) -> list[str]:
    return [f"x{i}" for i in range(dim)] + [f"f{i}" for i in range(n_obj)]


def write_archive_csv(arch: ParetoArchive, path: str | Path) -> None:
    """One row per entry: ``x0..x{d-1}`` then ``f0..f{k-1}``, floats in round-trip form."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        if len(arch) == 0:
            return
        w.writerow(archive_columns(arch.X.shape[1], arch.F.shape[1]))
        for x, f in zip(arch.X, arch.F):
            w.writerow([repr(float(v)) for v in x] + [repr(float(v)) for v in f])
