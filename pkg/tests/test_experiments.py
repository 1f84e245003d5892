"""Simulation drivers: test functions, result files, reduced-size runs."""

import json

import numpy as np
import pytest

from dpm.experiments import (
    ExperimentResult,
    run_example1,
    run_example2,
    run_table1,
    run_table2,
    write_result_files,
)
from dpm.experiments.testfuncs import gramacy1d, sine_linear, sun5d
from dpm.experiments.testfuncs import test_function_eval as eval_named
from dpm.separability import psi


class TestFunctions:
    def test_gramacy_pins(self):
        assert gramacy1d(0.55) == pytest.approx(-0.86808465909090909, rel=1e-14)
        # sin(10 pi) = 0 and (x-1)^4 = 0 at x = 1
        assert abs(gramacy1d(1.0)) < 1e-14
        assert eval_named("gramacy1d", 0.55) == pytest.approx(
            -0.86808465909090909, rel=1e-14)

    def test_sun5d_pins(self):
        center = np.full(5, 0.5)
        assert sun5d(center)[0] == pytest.approx(2.3454915028125263, rel=1e-14)
        assert eval_named("sun5d", center) == pytest.approx(
            2.3454915028125263, rel=1e-14)
        batch = sun5d(np.vstack([center, np.zeros(5)]))
        assert batch.shape == (2,)

    def test_sine_linear(self):
        x = np.array([0.0, 0.25, 1.0])
        np.testing.assert_allclose(sine_linear(3.0, 1.0, 3.0, x),
                                   x + 3.0 * np.sin(3.0 * x), atol=0)
        assert eval_named("sine-linear(3,1,3)", 0.0) == 0.0
        assert eval_named("sine-linear(3, 1, 3)", 0.5) == pytest.approx(
            0.5 + 3.0 * np.sin(1.5), rel=1e-14)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            eval_named("gramacy1d", 0.3)
        with pytest.raises(ValueError):
            eval_named("sun5d", np.full(5, 1.2))
        with pytest.raises(ValueError):
            eval_named("sun5d", np.full(4, 0.5))
        with pytest.raises(ValueError):
            eval_named("sine-linear(3,1,3)", 1.5)
        with pytest.raises(ValueError, match="unknown"):
            eval_named("rosenbrock", 0.5)


class TestResultFiles:
    def _result(self):
        return ExperimentResult(
            name="demo", seed=9, config={"reps": 2, "theta": 3.0},
            columns=("a", "b"), rows=((1, 0.5), (2, 0.125)),
            wall_time_s=12.5, notes=("note one",),
        )

    def test_column_accessor(self):
        res = self._result()
        assert tuple(res.column("b")) == (0.5, 0.125)
        with pytest.raises(ValueError):
            res.column("missing")

    def test_files_round_trip(self, tmp_path):
        res = self._result()
        paths = write_result_files(res, tmp_path)
        csv_path = tmp_path / "demo_seed9.csv"
        json_path = tmp_path / "demo_seed9.json"
        assert set(paths) == {csv_path, json_path}
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "a,b"
        assert lines[1] == "1,0.5"
        payload = json.loads(json_path.read_text())
        assert payload["experiment"] == "demo"
        assert payload["seed"] == 9
        assert payload["rows"] == [[1, 0.5], [2, 0.125]]
        assert "wall_time_s" not in payload

    def test_rerun_is_byte_identical(self, tmp_path):
        a = tmp_path / "a"
        b = tmp_path / "b"
        a.mkdir(), b.mkdir()
        first = ExperimentResult("demo", 1, {}, ("v",), ((0.1,),), wall_time_s=1.0)
        second = ExperimentResult("demo", 1, {}, ("v",), ((0.1,),), wall_time_s=99.0)
        write_result_files(first, a)
        write_result_files(second, b)
        for name in ("demo_seed1.csv", "demo_seed1.json"):
            assert (a / name).read_bytes() == (b / name).read_bytes()


class TestTableRuns:
    def test_table1_reduced(self):
        res = run_table1(thetas=(3.0,), reps=4, seed=5)
        assert res.name == "table1"
        assert res.columns[:3] == ("theta", "psi", "two_log_psi")
        (row,) = res.rows
        vals = dict(zip(res.columns, row))
        assert vals["theta"] == 3.0
        assert vals["psi"] == pytest.approx(psi(3.0), rel=1e-12)
        assert vals["two_log_psi"] == pytest.approx(2 * np.log(psi(3.0)), rel=1e-12)
        # theta = 3 contracts at roughly psi^2 per cycle
        assert -0.6 < vals["mean_slope"] < -0.2
        assert vals["mean_iterations"] > 10
        assert vals["reps_with_slope"] == 4

    def test_table1_deterministic(self):
        a = run_table1(thetas=(2.0,), reps=3, seed=1)
        b = run_table1(thetas=(2.0,), reps=3, seed=1)
        assert a.rows == b.rows
        c = run_table1(thetas=(2.0,), reps=3, seed=2)
        assert c.rows != a.rows

    def test_table2_reduced(self):
        res = run_table2(sizes=(20, 100), reps=4, seed=3)
        assert res.name == "table2"
        assert [dict(zip(res.columns, r))["n"] for r in res.rows] == [20, 100]
        for r in res.rows:
            vals = dict(zip(res.columns, r))
            assert vals["reps_with_slope"] >= 1
            assert vals["mean_slope"] < 0


class TestExampleRuns:
    def test_example1_reduced(self):
        res = run_example1(reps=3, seed=2)
        assert res.name == "example1"
        assert len(res.rows) == 3
        for r in res.rows:
            vals = dict(zip(res.columns, r))
            assert vals["mspe"] > 0
            assert vals["iterations"] >= 1
            assert vals["n_lambda"] > 0
        assert any(n.startswith("mean_mspe") for n in res.notes)

    def test_example1_large_clean_sample_improves_mspe(self):
        # same pipeline, more data and no noise: prediction error must drop
        noisy = run_example1(reps=3, seed=4)
        clean = run_example1(n=200, noise_var=0.0, reps=3, seed=4)
        m_noisy = float(np.mean(noisy.column("mspe")))
        m_clean = float(np.mean(clean.column("mspe")))
        assert m_clean < 0.5 * m_noisy

    def test_example2_reduced(self):
        res = run_example2(nlambdas=(1.0, 1e-9), noise_sds=(0.1,), iters=2,
                           reps=2, seed=6)
        assert res.name == "example2"
        assert len(res.rows) == 2 * 2
        vals = [dict(zip(res.columns, r)) for r in res.rows]
        for v in vals:
            assert v["noise_sd"] == 0.1
            assert v["training"] > 0 and v["prediction"] > 0
            assert v["linear_l2"] > 0 and v["nonlinear_l2"] > 0
        # smaller penalty drives the training error toward zero
        tight = [v for v in vals if v["n_lambda"] == 1e-9]
        loose = [v for v in vals if v["n_lambda"] == 1.0]
        assert min(t["training"] for t in tight) < min(l["training"] for l in loose)

    def test_example2_deterministic(self):
        kw = dict(nlambdas=(0.1,), noise_sds=(0.1,), iters=1, reps=2, seed=8)
        assert run_example2(**kw).rows == run_example2(**kw).rows
