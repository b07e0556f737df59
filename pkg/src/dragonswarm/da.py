"""Continuous single-objective Dragonfly Algorithm.

The five swarming forces are exposed as small functions acting on one
agent and its neighbour set; :func:`optimize` applies the same formulas to
the whole swarm at once through a neighbour matrix.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from .core import (
    Dragonfly,
    LevyParams,
    NeighborSet,
    Objective,
    ObjectiveError,
    RunRecord,
    SearchSpace,
    WeightSchedule,
    Weights,
    brownian_step,
    euclidean_radius,
    levy_step,
    make_rng,
    neighbor_mask,
    radius_schedule,
    weights_at,
)

StepMode = Literal["levy", "brownian"]
EnemyForm = Literal["sum", "repel"]


@dataclass(frozen=True)
class DaConfig:
    """Run settings shared by the continuous, binary and multi-objective loops.

    ``enemy_form="sum"`` applies the enemy term as ``enemy + X``;
    ``"repel"`` uses ``X - enemy`` instead. ``food_in_radius`` only lets
    the food attract agents that have it inside their neighbourhood.
    """

    pop: int = 100
    iters: int = 1000
    weights: WeightSchedule = field(default_factory=WeightSchedule)
    levy: LevyParams = field(default_factory=LevyParams)
    step_mode: StepMode = "levy"
    seed: int = 0
    brownian_sigma: float = 0.01
    enemy_form: EnemyForm = "repel"
    food_in_radius: bool = False
    reset_step_after_walk: bool = True
    radius_start: float = 0.25
    radius_growth: float = 2.0
    max_step_fraction: float = 0.1
    binary_max_step: float = 1.0

    def __post_init__(self):
        if self.pop < 2:
            raise ValueError("pop must be >= 2")
        if self.iters < 1:
            raise ValueError("iters must be >= 1")
        if self.step_mode not in ("levy", "brownian"):
            raise ValueError(f"unknown step_mode {self.step_mode!r}")
        if self.enemy_form not in ("sum", "repel"):
            raise ValueError(f"unknown enemy_form {self.enemy_form!r}")


@dataclass(frozen=True)
class ForceSet:
    separation: np.ndarray
    alignment: np.ndarray
    cohesion: np.ndarray
    food_attr: np.ndarray
    enemy_distr: np.ndarray


def _require_neighbors(nbrs: NeighborSet) -> None:
    if nbrs.count < 1:
        raise ValueError("empty neighbour set; use the random-walk update instead")


def separation(agent: Dragonfly, nbrs: NeighborSet) -> np.ndarray:
    _require_neighbors(nbrs)
    return -np.sum(agent.position - nbrs.positions, axis=0)


def alignment(nbrs: NeighborSet) -> np.ndarray:
    _require_neighbors(nbrs)
    return np.sum(nbrs.steps, axis=0) / nbrs.count


def cohesion(agent: Dragonfly, nbrs: NeighborSet) -> np.ndarray:
    _require_neighbors(nbrs)
    return np.sum(nbrs.positions, axis=0) / nbrs.count - agent.position


def food_attraction(agent: Dragonfly, food: np.ndarray) -> np.ndarray:
    return np.asarray(food, dtype=float) - agent.position


def enemy_distraction(agent: Dragonfly, enemy: np.ndarray, form: EnemyForm = "sum") -> np.ndarray:
    enemy = np.asarray(enemy, dtype=float)
    if form == "sum":
        return enemy + agent.position
    return agent.position - enemy


def forces(
    agent: Dragonfly, nbrs: NeighborSet, food: np.ndarray, enemy: np.ndarray, form: EnemyForm = "sum"
) -> ForceSet:
    return ForceSet(
        separation(agent, nbrs),
        alignment(nbrs),
        cohesion(agent, nbrs),
        food_attraction(agent, food),
        enemy_distraction(agent, enemy, form),
    )


def step_update(
    forces: ForceSet, weights: Weights, prev_step: np.ndarray, max_step: Optional[np.ndarray] = None
) -> np.ndarray:
    """New step: weighted force sum plus inertia, clipped to ``±max_step``."""
    step = (
        weights.s * forces.separation
        + weights.a * forces.alignment
        + weights.c * forces.cohesion
        + weights.f * forces.food_attr
        + weights.e * forces.enemy_distr
        + weights.w * np.asarray(prev_step, dtype=float)
    )
    if max_step is not None:
        step = np.clip(step, -max_step, max_step)
    return step


def position_update(agent: Dragonfly, new_step: np.ndarray, space: SearchSpace) -> Dragonfly:
    new_step = np.clip(new_step, -space.width, space.width)
    return Dragonfly(space.clip(agent.position + new_step), new_step)


def levy_position_update(
    agent: Dragonfly, space: SearchSpace, params: LevyParams, rng: np.random.Generator
) -> Dragonfly:
    x = agent.position
    new_x = space.clip(x + levy_step(space.dim, params, rng) * x)
    return Dragonfly(new_x, np.zeros_like(x))


def brownian_position_update(
    agent: Dragonfly, space: SearchSpace, sigma: float, rng: np.random.Generator
) -> Dragonfly:
    x = agent.position
    new_x = space.clip(x + brownian_step(space.dim, sigma, rng) * x)
    return Dragonfly(new_x, np.zeros_like(x))


# ---------------------------------------------------------------------------
# swarm loop
# ---------------------------------------------------------------------------


def evaluate_population(objective: Objective, positions: np.ndarray) -> np.ndarray:
    values = np.empty(positions.shape[0])
    for i, x in enumerate(positions):
        v = float(objective(x))
        if not np.isfinite(v):
            raise ObjectiveError(f"objective returned {v!r} at in-bounds point {x.tolist()}")
        values[i] = v
    return values


def swarm_step(
    X: np.ndarray,
    dX: np.ndarray,
    mask: np.ndarray,
    food: np.ndarray,
    enemy: np.ndarray,
    weights: Weights,
    max_step: np.ndarray,
    enemy_form: EnemyForm = "sum",
    food_gate: Optional[np.ndarray] = None,
) -> tuple[np.ndarray, np.ndarray]:
    """New steps for every agent at once.

    Returns ``(steps, has_neighbors)``. Rows without neighbours hold
    garbage and must be replaced by the caller's random-walk update.
    """
    M = mask.astype(float)
    n = M.sum(axis=1)
    has = n > 0
    nn = np.where(has, n, 1.0)[:, None]
    sum_x = M @ X
    S = sum_x - n[:, None] * X
    A = (M @ dX) / nn
    C = sum_x / nn - X
    F = food - X
    if food_gate is not None:
        F = F * food_gate[:, None]
    E = enemy + X if enemy_form == "sum" else X - enemy
    step = (
        weights.s * S + weights.a * A + weights.c * C + weights.f * F + weights.e * E + weights.w * dX
    )
    return np.clip(step, -max_step, max_step), has


def _random_walk(x: np.ndarray, space: SearchSpace, cfg: DaConfig, rng) -> np.ndarray:
    if cfg.step_mode == "levy":
        r = levy_step(space.dim, cfg.levy, rng)
    else:
        r = brownian_step(space.dim, cfg.brownian_sigma, rng)
    return x + r * x


def _init_swarm(space: SearchSpace, cfg: DaConfig, rng, init: Optional[np.ndarray]):
    if init is None:
        X = space.uniform(rng, cfg.pop)
    else:
        X = space.clip(np.array(init, dtype=float))
        if X.shape != (cfg.pop, space.dim):
            raise ValueError(f"init must have shape {(cfg.pop, space.dim)}, got {X.shape}")
    w = space.width
    dX = rng.uniform(-w / 10, w / 10, size=(cfg.pop, space.dim))
    return X, dX


def optimize(
    objective: Objective,
    space: SearchSpace,
    cfg: DaConfig,
    init: Optional[np.ndarray] = None,
) -> RunRecord:
    """Minimize ``objective`` over ``space`` with the Dragonfly Algorithm.

    Each iteration evaluates the whole swarm, refreshes food (best so far)
    and enemy (worst of the current swarm), then moves every agent. Agents
    without neighbours take a Levy or Brownian random walk.

    Raises:
        ObjectiveError: the objective produced NaN or an infinity.
    """
    if space.mode != "continuous":
        raise ValueError("optimize needs a continuous search space; use optimize_binary")
    rng = make_rng(cfg.seed)
    start = time.perf_counter()
    X, dX = _init_swarm(space, cfg, rng, init)
    T = cfg.iters
    max_step = space.width * cfg.max_step_fraction
    food = X[0].copy()
    food_value = np.inf
    curve = np.empty(T)
    n_eval = 0

    for t in range(T):
        fit = evaluate_population(objective, X)
        n_eval += fit.size
        i_best = int(np.argmin(fit))
        if fit[i_best] < food_value:
            food_value = float(fit[i_best])
            food = X[i_best].copy()
        enemy = X[int(np.argmax(fit))].copy()
        curve[t] = food_value
        if t == T - 1:
            break

        w = weights_at(cfg.weights, t, T, rng, cfg.weights.draw_shape(cfg.pop, space.dim))
        radius = euclidean_radius(
            radius_schedule(space, t, T, cfg.radius_start, cfg.radius_growth)
        )
        mask = neighbor_mask(X, radius)
        gate = None
        if cfg.food_in_radius:
            gate = (np.linalg.norm(X - food, axis=1) <= radius).astype(float)
        step, has = swarm_step(X, dX, mask, food, enemy, w, max_step, cfg.enemy_form, gate)
        new_X = X + step
        for i in np.flatnonzero(~has):
            new_X[i] = _random_walk(X[i], space, cfg, rng)
            step[i] = 0.0 if cfg.reset_step_after_walk else dX[i]
        X = space.clip(new_X)
        dX = step

    return RunRecord(
        best_value=food_value,
        best_position=food,
        curve=curve,
        wall_seconds=time.perf_counter() - start,
        seed=cfg.seed,
        evaluations=n_eval,
    )
