import json
import math

import numpy as np
import pytest

from thirdlim import harness
from thirdlim.cli import main
from thirdlim.harness import ConvergenceReport, RunConfig, observed_order


def test_runconfig_validation():
    with pytest.raises(ValueError):
        RunConfig(cells=(80, 40, 160))
    with pytest.raises(ValueError):
        RunConfig(nu=1.2)
    with pytest.raises(ValueError):
        RunConfig(limiter="minmod")
    with pytest.raises(ValueError):
        RunConfig(problem="burgers")


def test_alpha_resolution():
    assert RunConfig(problem="sine").alpha() == math.pi ** 2
    assert RunConfig(problem="square").alpha() == 0.0
    assert RunConfig(problem="square", alpha_override=0.1).limiter_spec().switch.alpha == 0.1


def test_run_single_t_end_zero(tmp_path):
    out = tmp_path / "sol.csv"
    err = harness.run_single(RunConfig(t_end=0.0, cells=(40,), output_path=str(out)))
    assert err == 0.0
    rows = harness.read_report_csv(out.read_text())
    assert len(rows) == 40
    assert all(r["u_numeric"] == r["u_exact"] for r in rows)


def test_run_single_json(tmp_path):
    out = tmp_path / "sol.json"
    err = harness.run_single(RunConfig(t_end=0.5, cells=(40,), output_path=str(out), format="json"))
    data = json.loads(out.read_text())
    assert len(data["rows"]) == 40
    assert data["l1_error"] == err
    assert data["time"] == 0.5


def test_report_orders():
    rep = ConvergenceReport.from_errors(
        [10, 20, 40], [0.2, 0.1, 0.05], [1e-2, 1.25e-3, 1.5625e-4],
        problem="sine", limiter="o3", alpha_used=0.0, nu=0.8, t_end=1.0,
    )
    assert rep.rows[0].observed_order is None
    assert rep.orders == pytest.approx([3.0, 3.0], rel=1e-12)


def test_convergence_needs_three():
    with pytest.raises(ValueError):
        harness.run_convergence(RunConfig(cells=(40, 80)))


def test_convergence_csv_roundtrip(tmp_path):
    out = tmp_path / "conv.csv"
    cfg = RunConfig(limiter="o3", cells=(20, 40, 80), t_end=1.0, output_path=str(out))
    rep = harness.run_convergence(cfg)
    rows = harness.read_report_csv(out.read_text())
    assert [int(r["n_cells"]) for r in rows] == [20, 40, 80]
    assert rows[0]["observed_order"] == ""
    errs = [float(r["l1_error"]) for r in rows]
    dxs = [float(r["dx"]) for r in rows]
    for k in (1, 2):
        recomputed = observed_order(errs[k - 1], errs[k], dxs[k - 1], dxs[k])
        assert abs(recomputed - float(rows[k]["observed_order"])) <= 1e-12
    assert errs == rep.errors


def test_parallel_matches_serial():
    base = RunConfig(limiter="new", cells=(20, 40, 80), t_end=0.5)
    a = harness.run_convergence(base, write=False)
    b = harness.run_convergence(RunConfig(**{**base.__dict__, "workers": 3}), write=False)
    assert a.errors == b.errors


def test_alpha_sweep(tmp_path):
    out = tmp_path / "sweep.csv"
    cfg = RunConfig(cells=(20, 40, 80), t_end=0.5, output_path=str(out))
    reps = harness.run_alpha_sweep(cfg, [1.0, 10.0])
    assert [r.alpha_used for r in reps] == [1.0, 10.0]
    rows = harness.read_report_csv(out.read_text())
    assert len(rows) == 6
    assert {float(r["alpha"]) for r in rows} == {1.0, 10.0}
    with pytest.raises(ValueError):
        harness.run_alpha_sweep(cfg, [])


class TestLimiterTable:
    def test_shape_and_values(self, tmp_path):
        out = tmp_path / "t.csv"
        text = harness.emit_limiter_table(theta_range=(-2, 4, 601), q=1.4, output=str(out))
        assert out.read_text() == text
        rows = harness.read_report_csv(text)
        assert len(rows) == 601
        assert list(rows[0]) == ["theta", *harness.TABLE_COLUMNS]
        theta = np.array([float(r["theta"]) for r in rows])
        at = lambda x: rows[int(np.argmin(np.abs(theta - x)))]
        one = at(1.0)
        for col in harness.TABLE_COLUMNS:
            assert float(one[col]) == pytest.approx(1.0, abs=1e-12)
        four = at(4.0)
        assert float(four["phi_limo3"]) == 1.6 and float(four["phi_new"]) == 1.5
        zero = at(0.0)
        assert float(zero["phi_as"]) == pytest.approx(0.0, abs=1e-12)
        assert float(zero["phi_o3"]) == pytest.approx(2 / 3, abs=1e-12)

    def test_steps(self):
        with pytest.raises(ValueError):
            harness.emit_limiter_table(theta_range=(0, 1, 1))


class TestCli:
    def test_limiter_table_stdout(self, capsys):
        assert main(["limiter-table", "--steps", "3"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("theta,")
        assert len(lines) == 4

    def test_solve(self, tmp_path, capsys):
        out = tmp_path / "s.csv"
        rc = main(["solve", "--problem", "square", "--limiter", "comb", "--alpha", "0.1",
                   "--cells", "40", "--t-end", "0.5", "--out", str(out)])
        assert rc == 0
        assert "l1_error=" in capsys.readouterr().err
        assert len(out.read_text().splitlines()) == 41

    def test_converge_json(self, capsys):
        rc = main(["converge", "--limiter", "o3", "--cells", "20,40,80", "--t-end", "0.5",
                   "--format", "json"])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        assert data[0]["rows"][2]["observed_order"] > 2.5

    def test_sweep(self, capsys):
        rc = main(["sweep-alpha", "--alphas", "1,100", "--cells", "20,40,80", "--t-end", "0.25",
                   "--norm", "l1", "--epsilon", "1e-4"])
        assert rc == 0
        assert len(capsys.readouterr().out.splitlines()) == 7

    @pytest.mark.parametrize("argv", [
        ["converge", "--cells", "80,40,160"],
        ["converge", "--nu", "2"],
        ["solve", "--cells", "40,80"],
        ["solve", "--cells", "3"],
    ])
    def test_invalid_config(self, argv, capsys):
        assert main(argv) == 1
        assert "thirdlim:" in capsys.readouterr().err

    def test_blow_up_exit_code(self, monkeypatch, capsys):
        from thirdlim.solver import SolverError

        def boom(*a, **k):
            raise SolverError("solver blow-up", 1.5)

        monkeypatch.setattr(harness, "solve", boom)
        assert main(["solve", "--cells", "40"]) == 2
        assert "t = 1.5" in capsys.readouterr().err
