"""Shared building blocks for every optimizer in the package.

Bounded search spaces, agent/swarm containers, the neighbourhood and
radius rules, the adaptive swarming-weight schedule and the two random
walk generators (Mantegna Levy flight and Brownian motion).

Randomness is always drawn from a ``numpy.random.Generator`` owned by a
single run; see :func:`make_rng`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Literal, Optional, Sequence

import numpy as np

Mode = Literal["continuous", "binary"]

#: A single-run random stream. PCG64 under the hood, so a fixed seed gives a
#: fixed draw sequence for a given numpy release.
RngStream = np.random.Generator

Objective = Callable[[np.ndarray], float]


class ObjectiveError(RuntimeError):
    """Raised when an objective returns a non-finite value at an in-bounds point."""


def make_rng(seed: int) -> RngStream:
    return np.random.default_rng(int(seed))


def run_seed(base_seed: int, run_index: int) -> int:
    """Seed for the ``run_index``-th independent run of an experiment."""
    return int(base_seed) + int(run_index)


@dataclass(frozen=True)
class SearchSpace:
    """Box-bounded search domain.

    Binary spaces always have bounds ``[0, 1]`` in every dimension; any
    bounds supplied in binary mode are ignored.
    """

    dim: int
    lower: np.ndarray
    upper: np.ndarray
    mode: Mode = "continuous"

    def __post_init__(self):
        if int(self.dim) < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        object.__setattr__(self, "dim", int(self.dim))
        if self.mode == "binary":
            lower = np.zeros(self.dim)
            upper = np.ones(self.dim)
        elif self.mode == "continuous":
            lower = np.broadcast_to(np.asarray(self.lower, dtype=float), (self.dim,)).copy()
            upper = np.broadcast_to(np.asarray(self.upper, dtype=float), (self.dim,)).copy()
            if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
                raise ValueError("bounds must be finite")
            if np.any(lower >= upper):
                raise ValueError("lower bound must be strictly below upper bound in every dimension")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")
        lower.setflags(write=False)
        upper.setflags(write=False)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def box(cls, dim: int, low: float, high: float) -> "SearchSpace":
        return cls(dim, np.full(dim, float(low)), np.full(dim, float(high)))

    @classmethod
    def binary(cls, dim: int) -> "SearchSpace":
        return cls(dim, np.zeros(dim), np.ones(dim), mode="binary")

    @property
    def width(self) -> np.ndarray:
        return self.upper - self.lower

    def clip(self, x: np.ndarray) -> np.ndarray:
        return np.clip(x, self.lower, self.upper)

    def contains(self, x: np.ndarray) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))

    def uniform(self, rng: RngStream, n: int) -> np.ndarray:
        """``n`` points drawn uniformly inside the box, shape ``(n, dim)``."""
        return rng.uniform(self.lower, self.upper, size=(n, self.dim))


@dataclass
class Dragonfly:
    """One agent: a position and the step (velocity analogue) that produced it."""

    position: np.ndarray
    step: np.ndarray


@dataclass
class SwarmState:
    """Population arrays plus the food (best-so-far) and enemy (current worst)."""

    positions: np.ndarray
    steps: np.ndarray
    food: np.ndarray
    food_value: float
    enemy: np.ndarray
    enemy_value: float
    t: int = 0
    T: int = 1

    @property
    def size(self) -> int:
        return self.positions.shape[0]

    def agent(self, i: int) -> Dragonfly:
        return Dragonfly(self.positions[i], self.steps[i])


@dataclass(frozen=True)
class NeighborSet:
    indices: np.ndarray
    positions: np.ndarray
    steps: np.ndarray

    @property
    def count(self) -> int:
        return int(self.indices.size)


Draw = Literal["iteration", "agent", "dimension"]


@dataclass(frozen=True)
class WeightSchedule:
    """Base magnitudes of the swarming weights and the inertia ramp.

    ``draw`` sets how often the uniform multipliers are redrawn: once per
    iteration, once per agent, or independently for every agent and
    dimension. The defaults are the tuned run settings; :meth:`original`
    gives the original parameter set (constant food weight
    base 1, one draw per iteration).
    """

    s_base: float = 0.1
    a_base: float = 0.1
    c_base: float = 0.7
    f_base: float = 2.0
    e_base: float = 1.0
    w_start: float = 0.9
    w_end: float = 0.2
    draw: Draw = "dimension"

    def __post_init__(self):
        for name in ("s_base", "a_base", "c_base", "f_base", "e_base"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        # w_start == w_end == 0 is allowed so the frozen-swarm property can be exercised.
        if not (self.w_start >= self.w_end >= 0):
            raise ValueError("inertia ramp needs w_start >= w_end >= 0")
        if self.draw not in ("iteration", "agent", "dimension"):
            raise ValueError(f"unknown draw granularity {self.draw!r}")

    @classmethod
    def original(cls) -> "WeightSchedule":
        return cls(s_base=0.1, a_base=0.1, c_base=0.7, f_base=1.0, e_base=1.0,
                   w_start=0.9, w_end=0.2, draw="iteration")

    def draw_shape(self, pop: int, dim: int) -> tuple[int, ...] | None:
        if self.draw == "iteration":
            return None
        if self.draw == "agent":
            return (pop, 1)
        return (pop, dim)


@dataclass(frozen=True)
class Weights:
    s: float | np.ndarray
    a: float | np.ndarray
    c: float | np.ndarray
    f: float | np.ndarray
    e: float | np.ndarray
    w: float


@dataclass(frozen=True)
class LevyParams:
    beta: float = 1.5
    scale: float = 0.01

    def __post_init__(self):
        if not (1.0 < self.beta <= 2.0):
            raise ValueError(f"Levy exponent must lie in (1, 2], got {self.beta}")
        if self.scale <= 0:
            raise ValueError("Levy scale must be positive")

    @property
    def sigma_u(self) -> float:
        return mantegna_sigma(self.beta)


@dataclass
class RunRecord:
    """Outcome of one optimization run."""

    best_value: float
    best_position: np.ndarray
    curve: np.ndarray
    wall_seconds: float
    seed: int
    evaluations: int = 0
    extra: dict = field(default_factory=dict)

    def __eq__(self, other):
        # Wall time is excluded: two replays of a seeded run are "identical".
        if not isinstance(other, RunRecord):
            return NotImplemented
        return (
            self.best_value == other.best_value
            and np.array_equal(self.best_position, other.best_position)
            and np.array_equal(self.curve, other.curve)
            and self.seed == other.seed
            and self.evaluations == other.evaluations
        )


# ---------------------------------------------------------------------------
# neighbourhoods and schedules
# ---------------------------------------------------------------------------


def pairwise_distances(positions: np.ndarray) -> np.ndarray:
    diff = positions[:, None, :] - positions[None, :, :]
    return np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))


def neighbor_mask(positions: np.ndarray, radius: float) -> np.ndarray:
    """Boolean ``(n, n)`` matrix, ``True`` where agent j is a neighbour of i."""
    mask = pairwise_distances(positions) <= radius
    np.fill_diagonal(mask, False)
    return mask


def neighborhood(swarm: SwarmState, i: int, radius: float) -> NeighborSet:
    """All agents other than ``i`` within Euclidean distance ``radius`` of it."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    if not 0 <= i < swarm.size:
        raise IndexError(f"agent index {i} out of range")
    d = np.linalg.norm(swarm.positions - swarm.positions[i], axis=1)
    hit = d <= radius
    hit[i] = False
    idx = np.flatnonzero(hit)
    return NeighborSet(idx, swarm.positions[idx], swarm.steps[idx])


def radius_schedule(
    space: SearchSpace, t: int, T: int, start: float = 0.25, growth: float = 2.0
) -> np.ndarray:
    """Per-dimension neighbourhood radius ``width * (start + growth * t / T)``.

    The defaults start from a quarter of the range and cover the full range
    once ``t >= 3T/8``.
    """
    if T < 1:
        raise ValueError("T must be >= 1")
    if not 0 <= t <= T:
        raise ValueError(f"t must lie in [0, T], got t={t}, T={T}")
    return space.width * (start + growth * t / T)


def euclidean_radius(per_dim_radius: np.ndarray) -> float:
    """Scalar radius for the Euclidean neighbour test.

    The norm of the per-dimension radius vector; it reaches the box diagonal
    exactly when every component reaches its dimension's width.
    """
    return float(np.linalg.norm(per_dim_radius))


def inertia_at(sched: WeightSchedule, t: int, T: int) -> float:
    # Endpoints are returned verbatim; the linear formula can be off by one ulp there.
    if t >= T:
        return sched.w_end
    return sched.w_start - (sched.w_start - sched.w_end) * t / T


def decay_at(t: int, T: int) -> float:
    return max(0.0, 1.0 - 2.0 * t / T)


def weights_at(
    sched: WeightSchedule, t: int, T: int, rng: RngStream, shape: Optional[tuple[int, ...]] = None
) -> Weights:
    """Swarming weights for iteration ``t`` of ``T``.

    Separation, alignment, cohesion and enemy weights share one uniform
    multiplier and fade out linearly by ``t = T/2``; the food weight gets its
    own multiplier and never fades. With ``shape`` the multipliers are drawn
    as arrays of that shape (broadcast against the ``(pop, dim)`` swarm).
    """
    if T < 1:
        raise ValueError("T must be >= 1")
    if not 0 <= t <= T:
        raise ValueError(f"t must lie in [0, T], got t={t}, T={T}")
    u = rng.random(shape)
    u_food = rng.random(shape)
    k = u * decay_at(t, T)
    if shape is None:
        k, u_food = float(k), float(u_food)
    return Weights(
        s=sched.s_base * k,
        a=sched.a_base * k,
        c=sched.c_base * k,
        f=sched.f_base * u_food,
        e=sched.e_base * k,
        w=inertia_at(sched, t, T),
    )


# ---------------------------------------------------------------------------
# random walks
# ---------------------------------------------------------------------------


def mantegna_sigma(beta: float) -> float:
    num = math.gamma(1 + beta) * math.sin(math.pi * beta / 2)
    den = math.gamma((1 + beta) / 2) * beta * 2 ** ((beta - 1) / 2)
    return (num / den) ** (1 / beta)


def levy_step(dim: int, params: LevyParams, rng: RngStream) -> np.ndarray:
    """Mantegna Levy-flight step of length ``dim``, multiplied by ``params.scale``."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    u = rng.normal(0.0, params.sigma_u, size=dim)
    v = rng.normal(0.0, 1.0, size=dim)
    # |v| == 0 has probability zero but would give an infinite step.
    v = np.where(v == 0.0, np.finfo(float).tiny, np.abs(v))
    return params.scale * u / v ** (1.0 / params.beta)


def brownian_step(dim: int, sigma: float, rng: RngStream) -> np.ndarray:
    if dim < 1:
        raise ValueError("dim must be >= 1")
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    return rng.normal(0.0, sigma, size=dim)


def as_array(x: Sequence[float] | np.ndarray) -> np.ndarray:
    return np.asarray(x, dtype=float)
