"""Binary Dragonfly Algorithm (BDA).

Steps stay continuous; a V-shaped transfer function turns each step
component into a bit-flip probability. Every agent treats the whole swarm
as its neighbourhood.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from .core import RunRecord, SearchSpace, make_rng, weights_at
from .da import DaConfig, evaluate_population, swarm_step

TransferKind = Literal["static_v", "time_varying"]


@dataclass
class BinaryDragonfly:
    bits: np.ndarray
    step: np.ndarray

    def __post_init__(self):
        self.bits = np.asarray(self.bits, dtype=np.int8)
        self.step = np.asarray(self.step, dtype=float)
        if not np.all((self.bits == 0) | (self.bits == 1)):
            raise ValueError("bits must be 0 or 1")
        if self.bits.shape != self.step.shape:
            raise ValueError("bits and step must have the same length")


@dataclass(frozen=True)
class TransferConfig:
    """V-shaped transfer function settings.

    ``time_varying`` scales the curve by ``tau(t)``, which moves linearly
    from ``tau_start`` (flat curve, more flips) to ``tau_end`` over the run.
    With ``tau_end = 1`` the last iteration uses the static curve.
    """

    kind: TransferKind = "static_v"
    tau_start: float = 4.0
    tau_end: float = 1.0

    def __post_init__(self):
        if self.kind not in ("static_v", "time_varying"):
            raise ValueError(f"unknown transfer kind {self.kind!r}")
        if not (self.tau_start >= self.tau_end > 0):
            raise ValueError("need tau_start >= tau_end > 0")

    def tau(self, t: int, T: int) -> float:
        if self.kind == "static_v":
            return 1.0
        # Anchored at tau_end so that t == T gives tau_end exactly.
        return self.tau_end + (self.tau_start - self.tau_end) * (1.0 - t / T)


def transfer(step_component, cfg: TransferConfig, t: int = 0, T: int = 1):
    """Flip probability ``|dx| / sqrt(dx^2 + tau^2)``; works on scalars or arrays."""
    if T < 1:
        raise ValueError("T must be >= 1")
    tau = cfg.tau(t, T)
    dx = np.asarray(step_component, dtype=float)
    p = np.abs(dx) / np.hypot(dx, tau)
    # Rounding can give exactly 1.0 for huge steps; keep the half-open range.
    p = np.minimum(p, np.nextafter(1.0, 0.0))
    return float(p) if p.ndim == 0 else p


def flip_update(agent: BinaryDragonfly, probs, rng: np.random.Generator) -> BinaryDragonfly:
    probs = np.asarray(probs, dtype=float)
    if probs.shape != agent.bits.shape:
        raise ValueError("probs must match the bit vector length")
    if np.any((probs < 0) | (probs > 1)):
        raise ValueError("probabilities must lie in [0, 1]")
    flip = rng.random(probs.shape) < probs
    return BinaryDragonfly(np.where(flip, 1 - agent.bits, agent.bits), agent.step.copy())


def optimize_binary(
    objective: Callable[[np.ndarray], float],
    dim: int,
    cfg: DaConfig,
    tf: TransferConfig = TransferConfig(),
) -> RunRecord:
    """Minimize ``objective`` over ``{0, 1}^dim``.

    The objective receives an ``int8`` array of bits. The swarm update is
    the continuous one with every other agent as a neighbour and bits cast
    to floats; the new step then sets the flip probability of each bit.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    space = SearchSpace.binary(dim)
    rng = make_rng(cfg.seed)
    start = time.perf_counter()
    T = cfg.iters
    B = rng.integers(0, 2, size=(cfg.pop, dim)).astype(np.int8)
    dX = rng.uniform(-0.1, 0.1, size=(cfg.pop, dim))
    max_step = space.width * cfg.binary_max_step
    mask = ~np.eye(cfg.pop, dtype=bool)
    food = B[0].copy()
    food_value = np.inf
    curve = np.empty(T)
    n_eval = 0

    for t in range(T):
        fit = evaluate_population(objective, B)
        n_eval += fit.size
        i_best = int(np.argmin(fit))
        if fit[i_best] < food_value:
            food_value = float(fit[i_best])
            food = B[i_best].copy()
        enemy = B[int(np.argmax(fit))]
        curve[t] = food_value
        if t == T - 1:
            break

        w = weights_at(cfg.weights, t, T, rng, cfg.weights.draw_shape(cfg.pop, dim))
        X = B.astype(float)
        dX, _ = swarm_step(
            X, dX, mask, food.astype(float), enemy.astype(float), w, max_step, cfg.enemy_form
        )
        p = transfer(dX, tf, t + 1, T)
        flip = rng.random(p.shape) < p
        B = np.where(flip, 1 - B, B).astype(np.int8)

    return RunRecord(
        best_value=food_value,
        best_position=food.astype(float),
        curve=curve,
        wall_seconds=time.perf_counter() - start,
        seed=cfg.seed,
        evaluations=n_eval,
    )


@dataclass(frozen=True)
class FeatureFitnessParams:
    alpha: float = 0.99
    total_features: int = 1

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError("alpha must lie in [0, 1]")
        if int(self.total_features) < 1:
            raise ValueError("total_features must be >= 1")

    @property
    def beta(self) -> float:
        return 1.0 - self.alpha


def feature_fitness(error_rate: float, selected: int, params: FeatureFitnessParams) -> float:
    """Wrapper feature-selection score ``alpha * error + beta * |R| / |C|``."""
    if not 0.0 <= error_rate <= 1.0:
        raise ValueError("error_rate must lie in [0, 1]")
    if not 0 <= selected <= params.total_features:
        raise ValueError(f"selected must lie in [0, {params.total_features}], got {selected}")
    return params.alpha * error_rate + params.beta * (selected / params.total_features)


def onemax(bits: np.ndarray) -> float:
    """Number of zero bits; minimum 0 at all ones."""
    return float(np.size(bits) - np.count_nonzero(bits))
