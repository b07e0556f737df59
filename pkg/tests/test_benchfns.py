import numpy as np
import pytest

from dragonswarm import benchfns
from dragonswarm.benchfns import ShiftRotation, cec2019_suite, classical_suite
from dragonswarm.benchfns import classical as cl
from dragonswarm.core import make_rng

ALL = classical_suite(10) + cec2019_suite()
WITH_OPT = [f for f in ALL if f.optimum is not None]


@pytest.mark.parametrize("fn", WITH_OPT, ids=lambda f: f.id)
def test_stored_optimum_hits_known_min(fn):
    v = fn(fn.optimum)
    assert abs(v - fn.known_min) <= 1e-9 * max(1.0, abs(fn.known_min))


def test_reference_optimum_values():
    assert benchfns.get("TF1", 5)(np.zeros(5)) == 0.0
    assert round(benchfns.get("TF16").known_min, 7) == -1.0316285
    assert round(benchfns.get("TF17").known_min, 7) == 0.3978874
    assert benchfns.get("TF18").known_min == 3.0
    assert all(f.known_min == 1.0 for f in cec2019_suite())


def test_classical_grouping():
    fns = classical_suite()
    assert len(fns) == 23
    groups = [f.group for f in fns]
    assert groups.count("unimodal") == 7 and groups.count("multimodal") == 6 and groups.count("fixed_dimension") == 10


def test_cec_dims_and_ranges():
    by_id = {f.id: f for f in cec2019_suite()}
    assert [f.dim for f in by_id.values()] == [9, 16, 18] + [10] * 7
    assert by_id["CEC01"].space.lower[0] == -8192 and by_id["CEC01"].space.upper[0] == 8192
    assert by_id["CEC02"].space.upper[0] == 16384
    assert by_id["CEC03"].space.lower[0] == -4 and by_id["CEC03"].space.upper[0] == 4
    assert by_id["CEC10"].space.upper[0] == 100


def test_suite_and_get_errors():
    with pytest.raises(ValueError):
        benchfns.suite("bbob")
    with pytest.raises(KeyError):
        benchfns.get("TF99")


def test_evaluate_checks_input():
    fn = benchfns.get("TF1", 3)
    with pytest.raises(ValueError):
        fn(np.zeros(4))
    with pytest.raises(ValueError):
        fn(np.array([0.0, 0.0, 101.0]))


@pytest.mark.parametrize("fn", ALL, ids=lambda f: f.id)
def test_pure_and_finite(fn):
    x = fn.space.uniform(make_rng(0), 1)[0]
    a, b = fn(x), fn(x)
    assert np.isfinite(a) and a == b


def test_branin_has_three_minima():
    f = benchfns.get("TF17")
    for x in ([-np.pi, 12.275], [np.pi, 2.275], [9.42478, 2.475]):
        assert f(np.array(x)) == pytest.approx(0.397887, abs=1e-6)


def test_unimodal_lower_bound_on_random_samples():
    rng = make_rng(0)
    for fn in (f for f in classical_suite(10) if f.group == "unimodal"):
        X = rng.uniform(fn.space.lower, fn.space.upper, (1_000_000 if fn.id != "TF7" else 100_000, 10))
        assert np.min(fn.func(X)) >= fn.known_min


def _central_diff(f, x, h=1e-6):
    g = np.empty_like(x)
    for i in range(x.size):
        e = np.zeros_like(x)
        e[i] = h
        g[i] = (f(x + e) - f(x - e)) / (2 * h)
    return g


@pytest.mark.parametrize("f, grad, box", [(cl.sphere, cl.sphere_gradient, 100), (cl.rosenbrock, cl.rosenbrock_gradient, 2)])
def test_analytic_gradients(f, grad, box):
    rng = make_rng(1)
    for _ in range(100):
        x = rng.uniform(-box, box, 5)
        g = grad(x)
        assert np.allclose(_central_diff(f, x), g, rtol=1e-4, atol=1e-4 * max(1.0, np.abs(g).max()))


def test_tf7_noise_is_deterministic_and_bounded():
    x = np.full(10, 0.0)
    v = cl.quartic_noise(x)
    assert 0.0 <= v < 1.0 and v == cl.quartic_noise(x.copy())


class TestShiftRotation:
    def test_csv_round_trip(self, tmp_path):
        rng = make_rng(0)
        Q, _ = np.linalg.qr(rng.standard_normal((4, 4)))
        sr = ShiftRotation(rng.uniform(-50, 50, 4), Q)
        path = tmp_path / "sr.csv"
        sr.save_csv(path, k=3)
        back = ShiftRotation.load_csv(path)
        assert np.array_equal(back.shift, sr.shift) and np.array_equal(back.rotation, sr.rotation)

    def test_transformed_optimum(self):
        rng = make_rng(2)
        Q, _ = np.linalg.qr(rng.standard_normal((10, 10)))
        base = benchfns.get("CEC05")
        fn = base.with_transform(ShiftRotation(rng.uniform(-20, 20, 10), Q))
        assert fn(fn.optimum) == pytest.approx(1.0, abs=1e-9)

    def test_bad_file(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("3,0\n1,2,3\n")
        with pytest.raises(ValueError):
            ShiftRotation.load_csv(path)
