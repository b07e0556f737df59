import math

import numpy as np
import pytest

from dragonswarm.binary import (
    BinaryDragonfly,
    FeatureFitnessParams,
    TransferConfig,
    feature_fitness,
    flip_update,
    onemax,
    optimize_binary,
    transfer,
)
from dragonswarm.core import make_rng
from dragonswarm.da import DaConfig

STATIC = TransferConfig("static_v")


class TestTransfer:
    def test_zero_step(self):
        assert transfer(0.0, STATIC) == 0.0

    def test_unit_step(self):
        assert transfer(1.0, STATIC) == pytest.approx(1 / math.sqrt(2), abs=1e-15)
        assert round(transfer(1.0, STATIC), 5) == 0.70711

    def test_symmetry(self):
        assert transfer(-1.0, STATIC) == transfer(1.0, STATIC)

    def test_huge_step_stays_below_one(self):
        assert transfer(1e300, STATIC) < 1.0

    def test_time_varying_endpoints(self):
        tv = TransferConfig("time_varying", 4.0, 1.0)
        assert tv.tau(0, 10) == 4.0 and tv.tau(10, 10) == 1.0
        assert transfer(0.7, tv, 10, 10) == transfer(0.7, STATIC)
        assert transfer(0.7, tv, 0, 10) < transfer(0.7, STATIC)

    def test_array_input(self):
        p = transfer(np.array([0.0, 1.0, -1.0]), STATIC)
        assert p.shape == (3,) and p[1] == p[2]

    def test_validation(self):
        with pytest.raises(ValueError):
            TransferConfig("s_shaped")
        with pytest.raises(ValueError):
            TransferConfig("time_varying", 0.5, 1.0)
        with pytest.raises(ValueError):
            TransferConfig("time_varying", 1.0, 0.0)
        with pytest.raises(ValueError):
            transfer(1.0, STATIC, 0, 0)


class TestFlip:
    def agent(self, n=8):
        bits = make_rng(0).integers(0, 2, n)
        return BinaryDragonfly(bits, np.zeros(n))

    def test_zero_probability_keeps_bits(self):
        a = self.agent()
        assert np.array_equal(flip_update(a, np.zeros(8), make_rng(1)).bits, a.bits)

    def test_unit_probability_flips_all(self):
        a = self.agent()
        assert np.array_equal(flip_update(a, np.ones(8), make_rng(1)).bits, 1 - a.bits)

    def test_binomial_rate(self):
        a = BinaryDragonfly(np.zeros(1000, int), np.zeros(1000))
        frac = flip_update(a, np.full(1000, 0.3), make_rng(2)).bits.mean()
        assert abs(frac - 0.3) <= 0.05

    def test_rejects_bad_input(self):
        a = self.agent()
        with pytest.raises(ValueError):
            flip_update(a, np.zeros(3), make_rng(0))
        with pytest.raises(ValueError):
            flip_update(a, np.full(8, 1.5), make_rng(0))
        with pytest.raises(ValueError):
            BinaryDragonfly(np.array([0, 2]), np.zeros(2))


class TestFeatureFitness:
    def test_zero(self):
        assert feature_fitness(0.0, 0, FeatureFitnessParams(0.99, 10)) == 0.0

    def test_hand_value(self):
        assert feature_fitness(0.1, 5, FeatureFitnessParams(0.99, 10)) == pytest.approx(0.104, abs=1e-15)

    def test_alpha_one_ignores_selection(self):
        p = FeatureFitnessParams(1.0, 10)
        assert feature_fitness(0.3, 0, p) == feature_fitness(0.3, 10, p) == 0.3

    def test_beta_complements_alpha(self):
        p = FeatureFitnessParams(0.75, 4)
        assert p.alpha + p.beta == 1.0

    def test_rejects(self):
        with pytest.raises(ValueError):
            feature_fitness(0.1, 11, FeatureFitnessParams(0.9, 10))
        with pytest.raises(ValueError):
            FeatureFitnessParams(1.2, 10)
        with pytest.raises(ValueError):
            FeatureFitnessParams(0.5, 0)


class TestOptimizeBinary:
    def test_onemax_small(self):
        rec = optimize_binary(onemax, 12, DaConfig(pop=20, iters=80, seed=0))
        assert rec.best_value == 0 and np.array_equal(rec.best_position, np.ones(12))

    def test_replay(self):
        cfg = DaConfig(pop=10, iters=30, seed=4)
        tf = TransferConfig("time_varying")
        assert optimize_binary(onemax, 16, cfg, tf) == optimize_binary(onemax, 16, cfg, tf)

    def test_objective_sees_bits(self):
        seen = []

        def f(b):
            seen.append(b)
            return float(b.sum())

        optimize_binary(f, 5, DaConfig(pop=4, iters=3, seed=0))
        assert all(set(np.unique(b)) <= {0, 1} for b in seen)

    def test_curve_monotone(self):
        rec = optimize_binary(onemax, 30, DaConfig(pop=10, iters=50, seed=1))
        assert np.all(np.diff(rec.curve) <= 0) and rec.curve[-1] == rec.best_value

    def test_dim_validated(self):
        with pytest.raises(ValueError):
            optimize_binary(onemax, 0, DaConfig(pop=4, iters=3))
