"""The 23 classical test functions (unimodal, multimodal, fixed-dimension).

Formulas follow the usual forms from the evolutionary-computation
literature (Yao, Liu & Lin 1999 numbering). All functions take a 1-D array
and return a float.
"""

from __future__ import annotations

import hashlib

import numpy as np

__all__ = [
    "sphere",
    "schwefel_2_22",
    "schwefel_1_2",
    "schwefel_2_21",
    "rosenbrock",
    "step",
    "quartic_noise",
    "schwefel_2_26",
    "rastrigin",
    "ackley",
    "griewank",
    "penalized_1",
    "penalized_2",
    "foxholes",
    "kowalik",
    "six_hump_camel",
    "branin",
    "goldstein_price",
    "hartmann_3",
    "hartmann_6",
    "shekel_5",
    "shekel_7",
    "shekel_10",
    "sphere_gradient",
    "rosenbrock_gradient",
]


# --- unimodal -------------------------------------------------------------
# These also accept a (n, d) batch and then return one value per row.


def _out(v):
    return float(v) if np.ndim(v) == 0 else v


def sphere(x):
    x = np.asarray(x, dtype=float)
    return _out(np.sum(x * x, axis=-1))


def schwefel_2_22(x):
    a = np.abs(np.asarray(x, dtype=float))
    return _out(a.sum(axis=-1) + np.prod(a, axis=-1))


def schwefel_1_2(x):
    c = np.cumsum(np.asarray(x, dtype=float), axis=-1)
    return _out(np.sum(c * c, axis=-1))


def schwefel_2_21(x):
    return _out(np.max(np.abs(np.asarray(x, dtype=float)), axis=-1))


def rosenbrock(x):
    x = np.asarray(x, dtype=float)
    a, b = x[..., :-1], x[..., 1:]
    return _out(np.sum(100.0 * (b - a**2) ** 2 + (a - 1.0) ** 2, axis=-1))


def step(x):
    return _out(np.sum(np.floor(np.asarray(x, dtype=float) + 0.5) ** 2, axis=-1))


def _hash_uniform(x: np.ndarray) -> float:
    # Noise is a deterministic function of the input bytes so the function stays pure.
    digest = hashlib.blake2b(np.ascontiguousarray(x).tobytes(), digest_size=8).digest()
    return int.from_bytes(digest, "little") / 2.0**64


def quartic_noise(x):
    """Quartic with uniform [0, 1) noise; the noise is a hash of ``x``."""
    x = np.asarray(x, dtype=float)
    i = np.arange(1, x.shape[-1] + 1)
    q = np.sum(i * x**4, axis=-1)
    if x.ndim == 1:
        return float(q + _hash_uniform(x))
    return q + np.array([_hash_uniform(r) for r in x.reshape(-1, x.shape[-1])]).reshape(q.shape)


# --- multimodal -----------------------------------------------------------


def schwefel_2_26(x):
    x = np.asarray(x, dtype=float)
    return float(np.sum(-x * np.sin(np.sqrt(np.abs(x)))))


def rastrigin(x):
    x = np.asarray(x, dtype=float)
    return float(np.sum(x**2 - 10.0 * np.cos(2.0 * np.pi * x) + 10.0))


def ackley(x):
    x = np.asarray(x, dtype=float)
    n = x.size
    a = -20.0 * np.exp(-0.2 * np.sqrt(np.dot(x, x) / n))
    b = -np.exp(np.sum(np.cos(2.0 * np.pi * x)) / n)
    return float(a + b + 20.0 + np.e)


def griewank(x):
    x = np.asarray(x, dtype=float)
    i = np.arange(1, x.size + 1)
    return float(np.dot(x, x) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def _u(x, a, k, m):
    return np.where(x > a, k * (x - a) ** m, np.where(x < -a, k * (-x - a) ** m, 0.0))


def penalized_1(x):
    x = np.asarray(x, dtype=float)
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    core = (
        10.0 * np.sin(np.pi * y[0]) ** 2
        + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[1:]) ** 2))
        + (y[-1] - 1.0) ** 2
    )
    return float(np.pi / n * core + np.sum(_u(x, 10.0, 100.0, 4)))


def penalized_2(x):
    x = np.asarray(x, dtype=float)
    core = (
        np.sin(3.0 * np.pi * x[0]) ** 2
        + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * x[1:]) ** 2))
        + (x[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * x[-1]) ** 2)
    )
    return float(0.1 * core + np.sum(_u(x, 5.0, 100.0, 4)))


# --- fixed dimension ------------------------------------------------------

# De Jong's foxholes: 5x5 lattice of holes at {-32, -16, 0, 16, 32}^2.
_FOX_GRID = np.array([-32.0, -16.0, 0.0, 16.0, 32.0])
FOXHOLES_A = np.vstack([np.tile(_FOX_GRID, 5), np.repeat(_FOX_GRID, 5)])


def foxholes(x):
    x = np.asarray(x, dtype=float)
    j = np.arange(1, 26)
    inner = j + np.sum((x[:, None] - FOXHOLES_A) ** 6, axis=0)
    return float(1.0 / (1.0 / 500.0 + np.sum(1.0 / inner)))


# Kowalik-Osborne enzyme reaction data.
KOWALIK_A = np.array(
    [0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246]
)
KOWALIK_B = 1.0 / np.array([0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0])


def kowalik(x):
    x = np.asarray(x, dtype=float)
    b = KOWALIK_B
    model = x[0] * (b**2 + b * x[1]) / (b**2 + b * x[2] + x[3])
    return float(np.sum((KOWALIK_A - model) ** 2))


def six_hump_camel(x):
    x1, x2 = float(x[0]), float(x[1])
    return 4 * x1**2 - 2.1 * x1**4 + x1**6 / 3 + x1 * x2 - 4 * x2**2 + 4 * x2**4


def branin(x):
    x1, x2 = float(x[0]), float(x[1])
    return (
        (x2 - 5.1 / (4 * np.pi**2) * x1**2 + 5 / np.pi * x1 - 6) ** 2
        + 10 * (1 - 1 / (8 * np.pi)) * np.cos(x1)
        + 10
    )


def goldstein_price(x):
    x1, x2 = float(x[0]), float(x[1])
    a = 1 + (x1 + x2 + 1) ** 2 * (19 - 14 * x1 + 3 * x1**2 - 14 * x2 + 6 * x1 * x2 + 3 * x2**2)
    b = 30 + (2 * x1 - 3 * x2) ** 2 * (18 - 32 * x1 + 12 * x1**2 + 48 * x2 - 36 * x1 * x2 + 27 * x2**2)
    return a * b


# Hartmann family coefficients (Dixon & Szego 1978).
HARTMANN_C = np.array([1.0, 1.2, 3.0, 3.2])
HARTMANN3_A = np.array([[3.0, 10, 30], [0.1, 10, 35], [3.0, 10, 30], [0.1, 10, 35]])
HARTMANN3_P = np.array(
    [
        [0.3689, 0.1170, 0.2673],
        [0.4699, 0.4387, 0.7470],
        [0.1091, 0.8732, 0.5547],
        [0.03815, 0.5743, 0.8828],
    ]
)
HARTMANN6_A = np.array(
    [
        [10, 3, 17, 3.5, 1.7, 8],
        [0.05, 10, 17, 0.1, 8, 14],
        [3, 3.5, 1.7, 10, 17, 8],
        [17, 8, 0.05, 10, 0.1, 14],
    ]
)
HARTMANN6_P = np.array(
    [
        [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
        [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
        [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
        [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
    ]
)


def _hartmann(x, a, p):
    x = np.asarray(x, dtype=float)
    return float(-np.sum(HARTMANN_C * np.exp(-np.sum(a * (x - p) ** 2, axis=1))))


def hartmann_3(x):
    return _hartmann(x, HARTMANN3_A, HARTMANN3_P)


def hartmann_6(x):
    return _hartmann(x, HARTMANN6_A, HARTMANN6_P)


# Shekel foxholes in 4-D (Dixon & Szego 1978); m = 5, 7, 10 use the leading rows.
SHEKEL_A = np.array(
    [
        [4, 4, 4, 4],
        [1, 1, 1, 1],
        [8, 8, 8, 8],
        [6, 6, 6, 6],
        [3, 7, 3, 7],
        [2, 9, 2, 9],
        [5, 5, 3, 3],
        [8, 1, 8, 1],
        [6, 2, 6, 2],
        [7, 3.6, 7, 3.6],
    ],
    dtype=float,
)
SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])


def _shekel(x, m):
    x = np.asarray(x, dtype=float)
    d = np.sum((x - SHEKEL_A[:m]) ** 2, axis=1) + SHEKEL_C[:m]
    return float(-np.sum(1.0 / d))


def shekel_5(x):
    return _shekel(x, 5)


def shekel_7(x):
    return _shekel(x, 7)


def shekel_10(x):
    return _shekel(x, 10)


# --- analytic gradients (used as finite-difference oracles) ---------------


def sphere_gradient(x):
    return 2.0 * np.asarray(x, dtype=float)


def rosenbrock_gradient(x):
    x = np.asarray(x, dtype=float)
    g = np.zeros_like(x)
    r = x[1:] - x[:-1] ** 2
    g[:-1] += -400.0 * x[:-1] * r + 2.0 * (x[:-1] - 1.0)
    g[1:] += 200.0 * r
    return g
