"""Reference optimizers: global-best PSO, Grey Wolf Optimizer and a real-coded GA.

They share the objective, :class:`~dragonswarm.core.SearchSpace` and
:class:`~dragonswarm.core.RunRecord` contracts of the dragonfly code so the
harness can run them side by side.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .core import Objective, RunRecord, SearchSpace, make_rng
from .da import evaluate_population

InertiaMode = Literal["constriction", "linear"]


def _check_space(space: SearchSpace) -> None:
    if space.mode != "continuous":
        raise ValueError("baseline optimizers need a continuous search space")


def _check_sizes(pop: int, iters: int) -> None:
    if pop < 2:
        raise ValueError("pop must be >= 2")
    if iters < 1:
        raise ValueError("iters must be >= 1")


# ---------------------------------------------------------------------------
# PSO
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PsoConfig:
    """Global-best PSO settings.

    ``linear`` mode ramps the inertia weight from ``w_start`` to ``w_end``.
    ``constriction`` mode multiplies the whole velocity update by Clerc's
    factor and needs ``c1 + c2 > 4``; :meth:`constriction` returns the usual
    ``c1 = c2 = 2.05`` setting (factor about 0.7298).
    """

    c1: float = 2.0
    c2: float = 2.0
    inertia_mode: InertiaMode = "linear"
    pop: int = 30
    iters: int = 500
    seed: int = 0
    w_start: float = 0.9
    w_end: float = 0.4

    def __post_init__(self):
        _check_sizes(self.pop, self.iters)
        if self.inertia_mode not in ("constriction", "linear"):
            raise ValueError(f"unknown inertia_mode {self.inertia_mode!r}")
        if self.inertia_mode == "constriction" and not self.c1 + self.c2 > 4:
            raise ValueError("constriction mode needs c1 + c2 > 4")

    @classmethod
    def constriction(cls, **kw) -> "PsoConfig":
        kw.setdefault("c1", 2.05)
        kw.setdefault("c2", 2.05)
        return cls(inertia_mode="constriction", **kw)

    @property
    def chi(self) -> float:
        return constriction_factor(self.c1 + self.c2)


def constriction_factor(c: float) -> float:
    """Clerc's ``2 / |2 - c - sqrt(c^2 - 4c)|`` for ``c > 4``."""
    if not c > 4:
        raise ValueError("constriction factor needs c > 4")
    return 2.0 / abs(2.0 - c - math.sqrt(c * c - 4.0 * c))


def pso_optimize(objective: Objective, space: SearchSpace, cfg: PsoConfig) -> RunRecord:
    """Minimize with global-best PSO. Velocities start at zero and are clamped to the box width."""
    _check_space(space)
    rng = make_rng(cfg.seed)
    start = time.perf_counter()
    n, d, T = cfg.pop, space.dim, cfg.iters
    vmax = space.width
    X = space.uniform(rng, n)
    V = np.zeros((n, d))
    fit = evaluate_population(objective, X)
    pbest, pbest_f = X.copy(), fit.copy()
    g = int(np.argmin(pbest_f))
    gbest, gbest_f = pbest[g].copy(), float(pbest_f[g])
    curve = np.empty(T)
    curve[0] = gbest_f
    n_eval = n

    for t in range(1, T):
        r1 = rng.random((n, d))
        r2 = rng.random((n, d))
        pull = cfg.c1 * r1 * (pbest - X) + cfg.c2 * r2 * (gbest - X)
        if cfg.inertia_mode == "constriction":
            V = cfg.chi * (V + pull)
        else:
            w = cfg.w_start - (cfg.w_start - cfg.w_end) * (t - 1) / max(T - 2, 1)
            V = w * V + pull
        V = np.clip(V, -vmax, vmax)
        X = space.clip(X + V)
        fit = evaluate_population(objective, X)
        n_eval += n
        better = fit < pbest_f
        pbest[better] = X[better]
        pbest_f[better] = fit[better]
        g = int(np.argmin(pbest_f))
        if pbest_f[g] < gbest_f:
            gbest, gbest_f = pbest[g].copy(), float(pbest_f[g])
        curve[t] = gbest_f

    return RunRecord(gbest_f, gbest, curve, time.perf_counter() - start, cfg.seed, n_eval,
                     {"inertia_mode": cfg.inertia_mode})


# ---------------------------------------------------------------------------
# GWO
# ---------------------------------------------------------------------------


def gwo_optimize(objective: Objective, space: SearchSpace, pop: int = 30, iters: int = 500, seed: int = 0) -> RunRecord:
    """Minimize with the Grey Wolf Optimizer.

    The three best wolves found so far (alpha, beta, delta) pull every wolf;
    the control scalar ``a`` falls linearly from 2 to 0.
    """
    _check_space(space)
    _check_sizes(pop, iters)
    rng = make_rng(seed)
    start = time.perf_counter()
    d = space.dim
    X = space.uniform(rng, pop)
    leaders = np.zeros((3, d))
    leader_f = np.full(3, np.inf)
    curve = np.empty(iters)
    n_eval = 0

    for t in range(iters):
        fit = evaluate_population(objective, X)
        n_eval += pop
        # Merge the current pack with the previous leaders; stable sort keeps ties deterministic.
        allX = np.vstack([leaders, X])
        allf = np.concatenate([leader_f, fit])
        top = np.argsort(allf, kind="stable")[:3]
        leaders, leader_f = allX[top].copy(), allf[top].copy()
        curve[t] = leader_f[0]
        if t == iters - 1:
            break
        a = 2.0 - 2.0 * t / iters
        A = a * (2.0 * rng.random((3, pop, d)) - 1.0)
        C = 2.0 * rng.random((3, pop, d))
        D = np.abs(C * leaders[:, None, :] - X[None, :, :])
        X = space.clip(np.mean(leaders[:, None, :] - A * D, axis=0))

    return RunRecord(float(leader_f[0]), leaders[0].copy(), curve, time.perf_counter() - start, seed, n_eval)


# ---------------------------------------------------------------------------
# GA
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaConfig:
    """Real-coded GA settings.

    Each generation keeps the best individual, adds ``n_crossover``
    arithmetic-crossover children and ``n_mutation`` Gaussian mutants, and
    fills the remaining slots with tournament winners. Crossover weights are
    drawn per gene from ``[-g, 1 + g]`` with ``g = crossover_extension``, so
    children can land slightly outside the parents' segment.
    """

    pc: float = 0.8
    pm: float = 0.03
    pop: int = 30
    iters: int = 500
    seed: int = 0
    mutation_scale: float = 0.1
    crossover_extension: float = 0.5

    def __post_init__(self):
        _check_sizes(self.pop, self.iters)
        if not (0.0 <= self.pc <= 1.0 and 0.0 <= self.pm <= 1.0):
            raise ValueError("pc and pm must lie in [0, 1]")
        if self.crossover_extension < 0:
            raise ValueError("crossover_extension must be non-negative")

    @property
    def n_crossover(self) -> int:
        return 2 * round(self.pop * self.pc / 2)

    @property
    def n_mutation(self) -> int:
        return round(self.pop * self.pm)


def _tournament(fit: np.ndarray, k: int, rng) -> np.ndarray:
    """Indices of ``k`` winners of size-2 tournaments (ties to the first contender)."""
    a = rng.integers(fit.size, size=k)
    b = rng.integers(fit.size, size=k)
    return np.where(fit[b] < fit[a], b, a)


def ga_optimize(objective: Objective, space: SearchSpace, cfg: GaConfig) -> RunRecord:
    _check_space(space)
    rng = make_rng(cfg.seed)
    start = time.perf_counter()
    n, d, T = cfg.pop, space.dim, cfg.iters
    n_cross = min(cfg.n_crossover, max(n - 1, 0) // 2 * 2)
    n_mut = min(cfg.n_mutation, n - 1 - n_cross)
    sigma = cfg.mutation_scale * space.width
    X = space.uniform(rng, n)
    fit = evaluate_population(objective, X)
    n_eval = n
    curve = np.empty(T)
    best_i = int(np.argmin(fit))
    best, best_x = float(fit[best_i]), X[best_i].copy()
    curve[0] = best

    for t in range(1, T):
        elite = X[best_i][None, :]
        parts = [elite]
        if n_cross:
            pa = X[_tournament(fit, n_cross // 2, rng)]
            pb = X[_tournament(fit, n_cross // 2, rng)]
            g = cfg.crossover_extension
            lam = rng.uniform(-g, 1 + g, (n_cross // 2, d))
            parts += [space.clip(lam * pa + (1 - lam) * pb), space.clip(lam * pb + (1 - lam) * pa)]
        if n_mut:
            src = X[_tournament(fit, n_mut, rng)]
            parts.append(space.clip(src + rng.normal(0.0, 1.0, src.shape) * sigma))
        n_fill = n - sum(p.shape[0] for p in parts)
        if n_fill:
            parts.append(X[_tournament(fit, n_fill, rng)])
        X = np.vstack(parts)
        fit = evaluate_population(objective, X)
        n_eval += n
        best_i = int(np.argmin(fit))
        if fit[best_i] < best:
            best, best_x = float(fit[best_i]), X[best_i].copy()
        curve[t] = best

    return RunRecord(best, best_x, curve, time.perf_counter() - start, cfg.seed, n_eval)
