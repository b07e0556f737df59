"""CEC-2019 "100-digit challenge" functions in their base (unshifted) form.

Each function adds 1 so its global minimum value is 1. CEC04-CEC10 apply
the usual CEC input scaling (e.g. Rastrigin sees ``x * 5.12 / 100``) but no
shift or rotation unless a :class:`ShiftRotation` is supplied.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np


@dataclass(frozen=True)
class ShiftRotation:
    """Optional transform ``z = R (x - shift)`` applied before the base function."""

    shift: np.ndarray
    rotation: np.ndarray

    def apply(self, x: np.ndarray) -> np.ndarray:
        return self.rotation @ (x - self.shift)

    @classmethod
    def load_csv(cls, path: str | Path) -> "ShiftRotation":
        """Read the plain-text layout: ``dim,k`` header, one shift row, ``dim`` rotation rows."""
        with open(path, newline="") as fh:
            rows = [r for r in csv.reader(fh) if r]
        try:
            dim = int(rows[0][0])
        except (IndexError, ValueError) as exc:
            raise ValueError(f"{path}: first line must be 'dim,k'") from exc
        if len(rows) != dim + 2:
            raise ValueError(f"{path}: expected {dim + 2} lines, found {len(rows)}")
        shift = np.array([float(v) for v in rows[1]])
        rotation = np.array([[float(v) for v in r] for r in rows[2:]])
        if shift.shape != (dim,) or rotation.shape != (dim, dim):
            raise ValueError(f"{path}: shift/rotation shapes do not match dim={dim}")
        return cls(shift, rotation)

    def save_csv(self, path: str | Path, k: int = 0) -> None:
        dim = self.shift.size
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow([dim, k])
            w.writerow([repr(float(v)) for v in self.shift])
            for row in self.rotation:
                w.writerow([repr(float(v)) for v in row])


def _chebyshev_target(dim: int) -> float:
    # T_{dim-1}(1.2) via the three-term recurrence.
    a, b = 1.0, 1.2
    for _ in range(dim - 2):
        a, b = b, 2.4 * b - a
    return b


def storn_chebyshev(x):
    """Storn's Chebyshev polynomial fitting problem (CEC01 base)."""
    x = np.asarray(x, dtype=float)
    D = x.size
    d = _chebyshev_target(D)
    powers = np.arange(D - 1, -1, -1)
    u = np.sum(x * 1.2**powers)
    v = np.sum(x * (-1.2) ** powers)
    p1 = (u - d) ** 2 if u < d else 0.0
    p2 = (v - d) ** 2 if v < d else 0.0
    m = 32 * D
    grid = 2.0 * np.arange(m + 1) / m - 1.0
    w = np.polyval(x, grid)
    p3 = np.sum(np.where(w > 1, (w - 1) ** 2, 0.0) + np.where(w < -1, (w + 1) ** 2, 0.0))
    return float(p1 + p2 + p3)


def inverse_hilbert(x):
    """Inverse Hilbert matrix problem (CEC02 base): ``sum |H Z - I|``."""
    x = np.asarray(x, dtype=float)
    n = int(round(np.sqrt(x.size)))
    if n * n != x.size:
        raise ValueError("inverse_hilbert needs a square number of variables")
    i = np.arange(n)
    H = 1.0 / (i[:, None] + i[None, :] + 1.0)
    W = H @ x.reshape(n, n) - np.eye(n)
    return float(np.sum(np.abs(W)))


LJ_OFFSET = 12.7120622568


def lennard_jones(x):
    """Lennard-Jones minimum energy cluster (CEC03 base), offset so the minimum is 0."""
    p = np.asarray(x, dtype=float).reshape(-1, 3)
    iu = np.triu_indices(p.shape[0], k=1)
    diff = p[iu[0]] - p[iu[1]]
    r2 = np.maximum(np.einsum("ij,ij->i", diff, diff), 1e-12)
    r6 = r2**3
    return float(LJ_OFFSET + np.sum(1.0 / r6**2 - 2.0 / r6))


def rastrigin_cec(x):
    z = np.asarray(x, dtype=float) * 5.12 / 100.0
    return float(np.sum(z**2 - 10.0 * np.cos(2.0 * np.pi * z) + 10.0))


def griewank_cec(x):
    z = np.asarray(x, dtype=float) * 600.0 / 100.0
    i = np.arange(1, z.size + 1)
    return float(np.dot(z, z) / 4000.0 - np.prod(np.cos(z / np.sqrt(i))) + 1.0)


_WEI_K = np.arange(21)
_WEI_A = 0.5**_WEI_K
_WEI_B = 3.0**_WEI_K


def weierstrass_cec(x):
    z = np.asarray(x, dtype=float) * 0.5 / 100.0
    terms = _WEI_A * np.cos(2.0 * np.pi * _WEI_B * (z[:, None] + 0.5))
    offset = z.size * np.sum(_WEI_A * np.cos(np.pi * _WEI_B))
    return float(np.sum(terms) - offset)


SCHWEFEL_CONST = 418.9828872724338
SCHWEFEL_SHIFT = 420.9687462275036


def modified_schwefel_cec(x):
    z = np.asarray(x, dtype=float) * 1000.0 / 100.0 + SCHWEFEL_SHIFT
    D = z.size
    g = np.empty_like(z)
    inside = np.abs(z) <= 500.0
    g[inside] = z[inside] * np.sin(np.sqrt(np.abs(z[inside])))
    hi = z > 500.0
    m = 500.0 - np.fmod(z[hi], 500.0)
    g[hi] = m * np.sin(np.sqrt(np.abs(m))) - (z[hi] - 500.0) ** 2 / (10000.0 * D)
    lo = z < -500.0
    m = np.fmod(np.abs(z[lo]), 500.0) - 500.0
    g[lo] = m * np.sin(np.sqrt(np.abs(m))) - (z[lo] + 500.0) ** 2 / (10000.0 * D)
    return float(SCHWEFEL_CONST * D - np.sum(g))


def expanded_schaffer_f6(x):
    x = np.asarray(x, dtype=float)
    s = x**2 + np.roll(x, -1) ** 2
    return float(np.sum(0.5 + (np.sin(np.sqrt(s)) ** 2 - 0.5) / (1.0 + 0.001 * s) ** 2))


def happy_cat_cec(x):
    z = np.asarray(x, dtype=float) * 5.0 / 100.0 - 1.0
    D = z.size
    r2 = np.dot(z, z)
    return float(abs(r2 - D) ** 0.25 + (0.5 * r2 + np.sum(z)) / D + 0.5)


def ackley_cec(x):
    x = np.asarray(x, dtype=float)
    n = x.size
    return float(
        -20.0 * np.exp(-0.2 * np.sqrt(np.dot(x, x) / n))
        - np.exp(np.sum(np.cos(2.0 * np.pi * x)) / n)
        + 20.0
        + np.e
    )


def chebyshev_optimum(dim: int = 9) -> np.ndarray:
    """Coefficients of T_{dim-1}, highest power first."""
    coeffs = np.polynomial.chebyshev.cheb2poly([0] * (dim - 1) + [1])
    return coeffs[::-1].astype(float)


def inverse_hilbert_optimum(n: int = 4) -> np.ndarray:
    from scipy.linalg import invhilbert

    return invhilbert(n, exact=False).reshape(-1)


def lennard_jones_optimum() -> np.ndarray:
    """Six atoms on a regular octahedron at the energy-minimising edge length."""
    # Edge a with y = a^-6: E(y) = 12(y^2 - 2y) + 3(y^2/64 - y/4) over 12 edges and 3 diagonals.
    y = 24.75 / (2.0 * (12.0 + 3.0 / 64.0))
    s = y ** (-1.0 / 6.0) / np.sqrt(2.0)
    verts = np.array(
        [[s, 0, 0], [-s, 0, 0], [0, s, 0], [0, -s, 0], [0, 0, s], [0, 0, -s]], dtype=float
    )
    return verts.reshape(-1)
