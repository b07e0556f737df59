import csv
import json

import numpy as np
import pytest

from dragonswarm import cli, harness
from dragonswarm.core import RunRecord
from dragonswarm.harness import (
    RunConfig,
    RunResult,
    StatRow,
    Task,
    aggregate,
    convergence_dump,
    emit_report,
    fmt_float,
    run_grid,
    sample_std,
)


def quick(tmp_path, **kw):
    base = dict(algos=("da",), functions=("TF1",), pop=6, iters=5, dim=3, runs=2, out_dir=str(tmp_path))
    base.update(kw)
    return RunConfig(**base)


def fake_result(algo, fid, run, value, seconds=1.0):
    rec = RunRecord(best_value=value, best_position=np.zeros(1), curve=np.array([value]), wall_seconds=seconds, seed=run,
                    evaluations=1)
    return RunResult(Task(algo, fid, run, run, RunConfig()), rec)


def read_csv(path):
    return list(csv.reader(open(path, newline="")))


class TestStats:
    def test_single_run_std_zero(self):
        assert sample_std([3.0]) == 0.0

    def test_sample_std(self):
        assert sample_std([1.0, 2.0, 3.0, 4.0]) == pytest.approx(1.2909944487358056, rel=1e-15)

    def test_aggregate_values(self):
        rows = aggregate([fake_result("da", "TF1", k, v, 0.5) for k, v in enumerate([1.0, 2.0, 3.0])], ["da"])
        assert rows == [StatRow("da", "TF1", 2.0, 1.0, 1.5, 3)]

    def test_permutation_invariant(self):
        vals = np.random.default_rng(0).standard_normal(30) * 1e3
        res = [fake_result("da", "TF1", k, v, v * 1e-3 + 2) for k, v in enumerate(vals)]
        a = aggregate(res, ["da"])
        b = aggregate(list(reversed(res)), ["da"])
        assert a == b

    def test_failures_excluded(self):
        res = [fake_result("da", "TF1", 0, 1.0), RunResult(Task("da", "TF1", 1, 1, RunConfig()), error="boom")]
        assert aggregate(res, ["da"])[0].runs == 1

    def test_function_order_follows_suite(self):
        res = [fake_result("da", f, 0, 1.0) for f in ("TF10", "TF2", "TF1")]
        assert [r.function for r in aggregate(res, ["da"])] == ["TF1", "TF2", "TF10"]


class TestReports:
    def test_float_format_round_trips(self):
        for v in (0.1, 1 / 3, -1.0316284534898774, 1e-300, 123456789.123):
            s = fmt_float(v)
            assert float(s) == v and len(s.split("e")[0].replace("-", "").replace(".", "")) >= 15

    def test_csv_report(self, tmp_path):
        rows = read_csv(emit_report([StatRow("da", "TF1", 0.5, 0.0, 2.0, 1)], "csv", tmp_path / "s.csv"))
        assert rows[0] == harness.STAT_COLUMNS and len(rows) == 2 and float(rows[1][2]) == 0.5

    def test_json_report(self, tmp_path):
        data = json.loads(emit_report([StatRow("da", "TF1", 0.5, 0.0, 2.0, 1)], "json", tmp_path / "s.json").read_text())
        assert data == [dict(algo="da", function="TF1", mean=0.5, std=0.0, total_time=2.0, runs=1)]

    def test_markdown_layout(self, tmp_path):
        stats = [StatRow("da", "TF1", 1.0, 0.1, 2.0, 3), StatRow("pso", "TF1", 4.0, 0.2, 3.0, 3)]
        text = emit_report(stats, "markdown", tmp_path / "s.md").read_text()
        lines = text.splitlines()
        assert lines[0] == "| Function | Measure | da | pso |"
        assert [ln.split("|")[2].strip() for ln in lines[2:5]] == ["Mean", "Std.", "Time (Sec.)"]
        assert "sample standard deviation" in text

    def test_bad_format_and_empty(self, tmp_path):
        with pytest.raises(ValueError):
            emit_report([StatRow("da", "TF1", 1, 0, 0, 1)], "xml", tmp_path / "s")
        with pytest.raises(ValueError):
            emit_report([], "csv", tmp_path / "s")

    def test_unwritable_path(self, tmp_path):
        with pytest.raises(OSError, match="cannot write"):
            emit_report([StatRow("da", "TF1", 1, 0, 0, 1)], "csv", tmp_path / "missing" / "s.csv")

    def test_convergence_dump_shape(self, tmp_path):
        recs = [RunRecord(0.0, np.zeros(1), np.linspace(5, 0, 7), 0.0, k, 7) for k in range(3)]
        rows = read_csv(convergence_dump(recs, tmp_path / "c.csv"))
        assert len(rows) == 8 and all(len(r) == 4 for r in rows)
        assert rows[1][0] == "1" and rows[-1][0] == "7"


class TestGrid:
    def test_results_and_files(self, tmp_path):
        grid = run_grid(quick(tmp_path, runs=1))
        rows = read_csv(tmp_path / "results.csv")
        assert rows[0] == harness.RESULT_COLUMNS and len(rows) == 2 and rows[1][-1] == "ok"
        assert grid.stats[0].std == 0.0
        for name in ("stats.csv", "stats.json", "stats.md", "curves.csv", "run_config.json"):
            assert (tmp_path / name).exists()

    def test_curves_columns(self, tmp_path):
        run_grid(quick(tmp_path, runs=3))
        rows = read_csv(tmp_path / "curves.csv")
        assert rows[0] == ["iteration", "da/TF1/run0", "da/TF1/run1", "da/TF1/run2"] and len(rows) == 6

    def test_total_time_is_sum(self, tmp_path):
        grid = run_grid(quick(tmp_path, runs=3), write=False)
        assert grid.stats[0].total_time == pytest.approx(sum(r.record.wall_seconds for r in grid.results))

    def test_seed_offset_changes_results(self, tmp_path):
        a = run_grid(quick(tmp_path, base_seed=0), write=False)
        b = run_grid(quick(tmp_path, base_seed=100), write=False)
        assert [r.record.best_value for r in a.results] != [r.record.best_value for r in b.results]
        assert [r.task.seed for r in b.results] == [100, 101]

    def test_failed_run_is_marked(self, tmp_path, monkeypatch):
        def broken(bits):
            raise RuntimeError("objective exploded")

        monkeypatch.setitem(harness.BINARY_PROBLEMS, "BROKEN", broken)
        grid = run_grid(quick(tmp_path, algos=("bda",), functions=("BROKEN",), runs=2, dim=4))
        assert len(grid.failures) == 2 and not grid.stats
        rows = read_csv(tmp_path / "results.csv")
        assert rows[1][-1].startswith("FAILED RuntimeError: objective exploded")

    def test_moda_writes_archives(self, tmp_path):
        run_grid(quick(tmp_path, algos=("moda",), functions=(), runs=1, pop=8, iters=5, capacity=10))
        files = list((tmp_path / "archives").iterdir())
        assert [f.name for f in files] == ["moda_SCHAFFER_run0.csv"]

    def test_natural_problem_sets(self):
        cfg = RunConfig(algos=("da", "bda", "moda"))
        assert len(cfg.functions_for("da")) == 23
        assert cfg.functions_for("bda") == ["ONEMAX"] and cfg.functions_for("moda") == ["SCHAFFER"]
        assert len(RunConfig(suite="cec2019").functions_for("pso")) == 10

    @pytest.mark.parametrize("kw", [dict(algos=("sa",)), dict(runs=0), dict(formats=("xml",)), dict(suite="bbob"),
                                    dict(pso_mode="x"), dict(tf_kind="x"), dict(jobs=0)])
    def test_config_validation(self, kw):
        with pytest.raises(ValueError):
            RunConfig(**kw)

    def test_function_not_available_for_algo(self):
        with pytest.raises(ValueError, match="cannot run"):
            RunConfig(algos=("bda",), functions=("TF1",)).functions_for("bda")


class TestCli:
    ARGS = ["--fn", "TF1", "--dim", "3", "--pop", "6", "--iters", "5", "--runs", "2"]

    def test_success(self, tmp_path, capsys):
        assert cli.main(self.ARGS + ["--out", str(tmp_path)]) == 0
        assert "2/2 runs completed" in capsys.readouterr().out

    def test_bad_algo_exit_two(self, tmp_path, capsys):
        assert cli.main(["--algo", "sa", "--out", str(tmp_path)]) == 2
        assert "unknown algorithm" in capsys.readouterr().err

    def test_failure_exit_one(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setitem(harness.BINARY_PROBLEMS, "BROKEN", lambda b: 1 / 0)
        code = cli.main(["--algo", "bda", "--fn", "broken", "--dim", "4", "--pop", "4", "--iters", "2",
                         "--runs", "1", "--out", str(tmp_path)])
        assert code == 1 and "FAILED bda BROKEN run 0" in capsys.readouterr().err

    def test_config_file_then_flags(self, tmp_path):
        conf = tmp_path / "grid.conf"
        conf.write_text("# grid\nalgo = pso, gwo\ndim = 4\nruns = 3\npso-mode = constriction\niters = 50\n")
        cfg = cli.resolve(cli.build_parser().parse_args(["--config", str(conf), "--runs", "1"]))
        assert cfg.algos == ("pso", "gwo") and cfg.dim == 4 and cfg.runs == 1
        assert cfg.pso_mode == "constriction" and cfg.iters == 50

    def test_config_unknown_key(self, tmp_path):
        conf = tmp_path / "grid.conf"
        conf.write_text("colour = blue\n")
        assert cli.main(["--config", str(conf)]) == 2

    def test_no_timing_flag(self, tmp_path):
        cli.main(self.ARGS + ["--out", str(tmp_path), "--no-timing"])
        rows = read_csv(tmp_path / "results.csv")
        assert all(float(r[5]) == 0.0 for r in rows[1:])
        assert json.loads((tmp_path / "run_config.json").read_text())["timing"] is False
