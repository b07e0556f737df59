"""Benchmark corpus: classical TF1-TF23 and the ten CEC-2019 functions.

>>> fn = get("TF16")
>>> round(fn(fn.optimum), 7)
-1.0316285
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal, Optional

import numpy as np

from ..core import SearchSpace
from . import cec2019 as _cec
from . import classical as _cl
from .cec2019 import ShiftRotation

Group = Literal["unimodal", "multimodal", "fixed_dimension", "cec2019"]

DEFAULT_DIM = 30


@dataclass(frozen=True)
class BenchmarkFn:
    id: str
    name: str
    group: Group
    space: SearchSpace
    func: Callable[[np.ndarray], float]
    known_min: Optional[float]
    optimum: Optional[np.ndarray] = None
    transform: Optional[ShiftRotation] = None
    offset: float = 0.0

    @property
    def dim(self) -> int:
        return self.space.dim

    def evaluate(self, x) -> float:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            raise ValueError(f"{self.id} expects a vector of length {self.dim}, got shape {x.shape}")
        if not self.space.contains(x):
            raise ValueError(f"{self.id}: point lies outside the search box")
        return self.raw(x)

    def raw(self, x: np.ndarray) -> float:
        """Evaluate without the shape and bound checks."""
        if self.transform is not None:
            x = self.transform.apply(x)
        return float(self.func(x)) + self.offset

    __call__ = evaluate

    def with_transform(self, transform: ShiftRotation) -> "BenchmarkFn":
        if transform.shift.shape != (self.dim,):
            raise ValueError("transform dimension does not match the function")
        opt = np.linalg.solve(transform.rotation, self.optimum) + transform.shift if self.optimum is not None else None
        return BenchmarkFn(
            self.id, self.name, self.group, self.space, self.func, self.known_min, opt, transform, self.offset
        )


def _box(dim, low, high):
    if np.ndim(low):
        return SearchSpace(dim, np.asarray(low, float), np.asarray(high, float))
    return SearchSpace.box(dim, low, high)


def _scalable(fid, name, group, func, low, high, known_min, opt_value, dim):
    opt = None if opt_value is None else np.full(dim, float(opt_value))
    return BenchmarkFn(fid, name, group, _box(dim, low, high), func, known_min, opt)


# Polished optima (scipy, tight tolerances) starting from the literature locations.
_FIXED = [
    ("TF14", "Shekel foxholes", _cl.foxholes, 2, -65.536, 65.536,
     0.99800383779445, [-31.978330712590456, -31.97833157692572]),
    ("TF15", "Kowalik", _cl.kowalik, 4, -5.0, 5.0,
     0.0003074859878056051,
     [0.19283345304274813, 0.19083624027597035, 0.12311729907598003, 0.13576599033984466]),
    ("TF16", "Six-hump camel", _cl.six_hump_camel, 2, -5.0, 5.0,
     -1.0316284534898776, [0.08984201652927098, -0.7126564013807202]),
    ("TF17", "Branin", _cl.branin, 2, [-5.0, 0.0], [10.0, 15.0],
     5.0 / (4.0 * np.pi), [np.pi, 2.275]),
    ("TF18", "Goldstein-Price", _cl.goldstein_price, 2, -2.0, 2.0, 3.0, [0.0, -1.0]),
    ("TF19", "Hartmann 3", _cl.hartmann_3, 3, 0.0, 1.0,
     -3.8627821478207554, [0.11461434203082951, 0.5556488507905384, 0.8525469538460251]),
    ("TF20", "Hartmann 6", _cl.hartmann_6, 6, 0.0, 1.0,
     -3.322368011415515,
     [0.20168951037794658, 0.15001069146456325, 0.4768739733706766,
      0.2753324288543796, 0.3116516165632252, 0.6573005308464771]),
    ("TF21", "Shekel 5", _cl.shekel_5, 4, 0.0, 10.0,
     -10.153199679058229, [4.000037152376549, 4.000133278657566, 4.000037151057555, 4.000133277090425]),
    ("TF22", "Shekel 7", _cl.shekel_7, 4, 0.0, 10.0,
     -10.402940566818664, [4.000572916903747, 4.000689366493592, 3.999489708812103, 3.9996061590298426]),
    ("TF23", "Shekel 10", _cl.shekel_10, 4, 0.0, 10.0,
     -10.536409816692045, [4.000746530253313, 4.000592936779709, 3.9996633957714787, 3.9995097993299975]),
]


def classical_suite(dim: int = DEFAULT_DIM) -> list[BenchmarkFn]:
    """TF1-TF23; ``dim`` applies to the scalable TF1-TF13 only."""
    if dim < 2:
        raise ValueError("scalable classical functions need dim >= 2")
    U, M = "unimodal", "multimodal"
    fns = [
        _scalable("TF1", "Sphere", U, _cl.sphere, -100, 100, 0.0, 0.0, dim),
        _scalable("TF2", "Schwefel 2.22", U, _cl.schwefel_2_22, -10, 10, 0.0, 0.0, dim),
        _scalable("TF3", "Schwefel 1.2", U, _cl.schwefel_1_2, -100, 100, 0.0, 0.0, dim),
        _scalable("TF4", "Schwefel 2.21", U, _cl.schwefel_2_21, -100, 100, 0.0, 0.0, dim),
        _scalable("TF5", "Rosenbrock", U, _cl.rosenbrock, -30, 30, 0.0, 1.0, dim),
        _scalable("TF6", "Step", U, _cl.step, -100, 100, 0.0, 0.0, dim),
        # The noise term has no stored optimum: 0 is only a lower bound.
        _scalable("TF7", "Quartic with noise", U, _cl.quartic_noise, -1.28, 1.28, 0.0, None, dim),
        _scalable("TF8", "Schwefel 2.26", M, _cl.schwefel_2_26, -500, 500,
                  -418.9828872724338 * dim, 420.96874657644923, dim),
        _scalable("TF9", "Rastrigin", M, _cl.rastrigin, -5.12, 5.12, 0.0, 0.0, dim),
        _scalable("TF10", "Ackley", M, _cl.ackley, -32, 32, 0.0, 0.0, dim),
        _scalable("TF11", "Griewank", M, _cl.griewank, -600, 600, 0.0, 0.0, dim),
        _scalable("TF12", "Penalized 1", M, _cl.penalized_1, -50, 50, 0.0, -1.0, dim),
        _scalable("TF13", "Penalized 2", M, _cl.penalized_2, -50, 50, 0.0, 1.0, dim),
    ]
    for fid, name, func, d, low, high, fmin, opt in _FIXED:
        fns.append(BenchmarkFn(fid, name, "fixed_dimension", _box(d, low, high), func, fmin, np.array(opt, float)))
    return fns


def cec2019_suite() -> list[BenchmarkFn]:
    C = "cec2019"
    std = dict(low=-100.0, high=100.0)
    rows = [
        ("CEC01", "Storn's Chebyshev polynomial fitting", _cec.storn_chebyshev, 9, -8192.0, 8192.0,
         _cec.chebyshev_optimum(9)),
        ("CEC02", "Inverse Hilbert matrix", _cec.inverse_hilbert, 16, -16384.0, 16384.0,
         _cec.inverse_hilbert_optimum(4)),
        ("CEC03", "Lennard-Jones minimum energy cluster", _cec.lennard_jones, 18, -4.0, 4.0,
         _cec.lennard_jones_optimum()),
        ("CEC04", "Rastrigin", _cec.rastrigin_cec, 10, std["low"], std["high"], np.zeros(10)),
        ("CEC05", "Griewank", _cec.griewank_cec, 10, std["low"], std["high"], np.zeros(10)),
        ("CEC06", "Weierstrass", _cec.weierstrass_cec, 10, std["low"], std["high"], np.zeros(10)),
        ("CEC07", "Modified Schwefel", _cec.modified_schwefel_cec, 10, std["low"], std["high"], np.zeros(10)),
        ("CEC08", "Expanded Schaffer F6", _cec.expanded_schaffer_f6, 10, std["low"], std["high"], np.zeros(10)),
        ("CEC09", "Happy Cat", _cec.happy_cat_cec, 10, std["low"], std["high"], np.zeros(10)),
        ("CEC10", "Ackley", _cec.ackley_cec, 10, std["low"], std["high"], np.zeros(10)),
    ]
    return [
        BenchmarkFn(fid, name, C, SearchSpace.box(d, lo, hi), func, 1.0, opt, offset=1.0)
        for fid, name, func, d, lo, hi, opt in rows
    ]


def suite(name: str, dim: int = DEFAULT_DIM) -> list[BenchmarkFn]:
    if name == "classical":
        return classical_suite(dim)
    if name == "cec2019":
        return cec2019_suite()
    raise ValueError(f"unknown suite {name!r}; expected 'classical' or 'cec2019'")


SUITE_OF = {**{f"TF{i}": "classical" for i in range(1, 24)}, **{f"CEC{i:02d}": "cec2019" for i in range(1, 11)}}


def get(fid: str, dim: int = DEFAULT_DIM) -> BenchmarkFn:
    fid = fid.upper()
    if fid not in SUITE_OF:
        raise KeyError(f"unknown benchmark function {fid!r}")
    for fn in suite(SUITE_OF[fid], dim):
        if fn.id == fid:
            return fn
    raise AssertionError("unreachable")


__all__ = ["BenchmarkFn", "ShiftRotation", "classical_suite", "cec2019_suite", "suite", "get", "SUITE_OF"]
