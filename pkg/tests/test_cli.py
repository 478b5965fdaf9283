import numpy as np
import pytest

from arlkit.cli import main

FAST_SWEEP = "sweep.num_points = 4\n"


def write_config(tmp_path, extra=""):
    path = tmp_path / "exp.cfg"
    path.write_text(FAST_SWEEP + extra, encoding="utf-8")
    return path


class TestSweepCommand:
    def test_writes_csv(self, tmp_path, capsys):
        cfg = write_config(tmp_path)
        out = tmp_path / "sweep.csv"
        rc = main(["sweep", "--config", str(cfg), "--out", str(out)])
        assert rc == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 5
        assert "wrote 4 sweep points" in capsys.readouterr().out

    def test_seed_changes_output(self, tmp_path):
        cfg = write_config(tmp_path)
        out_a, out_b = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["sweep", "--config", str(cfg), "--out", str(out_a), "--quiet"])
        main(["sweep", "--config", str(cfg), "--out", str(out_b), "--quiet", "--seed", "99"])
        assert out_a.read_bytes() != out_b.read_bytes()

    def test_geometry_warning_on_stderr(self, tmp_path, capsys):
        cfg = write_config(tmp_path)
        main(["sweep", "--config", str(cfg), "--out", str(tmp_path / "w.csv")])
        assert "d/lambda" in capsys.readouterr().err

    def test_quiet_suppresses_warnings(self, tmp_path, capsys):
        cfg = write_config(tmp_path)
        main(["sweep", "--config", str(cfg), "--out", str(tmp_path / "q.csv"), "--quiet"])
        captured = capsys.readouterr()
        assert captured.err == "" and captured.out == ""


class TestOneShotCommands:
    def test_crb_printout(self, capsys):
        rc = main(["crb", "--quiet"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "Fisher information matrix" in out
        assert "CRB(omega1)" in out
        assert "CRB(delta)" in out

    def test_arl_printout(self, capsys):
        rc = main(["arl", "--quiet"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "closed-form ARL" in out
        assert "exact-Smith ARL" in out
        assert "discriminant" in out

    def test_arl_to_file(self, tmp_path):
        out = tmp_path / "arl.txt"
        rc = main(["arl", "--quiet", "--out", str(out)])
        assert rc == 0
        assert "closed-form ARL" in out.read_text(encoding="utf-8")

    def test_crb_closed_and_numeric_agree_in_output(self, capsys):
        main(["crb", "--quiet"])
        for line in capsys.readouterr().out.splitlines():
            if line.startswith("CRB(omega1)"):
                parts = line.split()
                closed, numeric = float(parts[2]), float(parts[4])
                assert closed == pytest.approx(numeric, rel=1e-9)
                break
        else:
            pytest.fail("CRB(omega1) line missing")


class TestExitCodes:
    def test_config_error_is_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.cfg"
        bad.write_text("geometry.L = 2\n", encoding="utf-8")
        assert main(["sweep", "--config", str(bad)]) == 2
        assert "config error" in capsys.readouterr().err

    def test_missing_config_is_2(self, tmp_path):
        assert main(["sweep", "--config", str(tmp_path / "nope.cfg")]) == 2

    def test_io_error_is_3(self, tmp_path, capsys):
        cfg = write_config(tmp_path)
        target = tmp_path / "no" / "such" / "dir" / "out.csv"
        assert main(["sweep", "--config", str(cfg), "--out", str(target), "--quiet"]) == 3
        assert "i/o error" in capsys.readouterr().err

    def test_infeasible_scenario_is_1(self, tmp_path, capsys):
        # the arl one-shot lands in the negative-discriminant band
        cfg = tmp_path / "noisy.cfg"
        cfg.write_text(
            "sweep.inv_sigma2_start = 1e-7\nsweep.inv_sigma2_stop = 1e-5\n",
            encoding="utf-8")
        assert main(["arl", "--config", str(cfg), "--quiet"]) == 1
        assert "discriminant" in capsys.readouterr().err
