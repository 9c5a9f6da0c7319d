import csv
import io
import json
import math
import subprocess
import sys

import pytest

from mcshane import cli
from mcshane.gapcat import CONE, CUSP


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestParse:
    def test_cusp(self):
        cfg = cli.parse_args(["verify", "--boundary", "cusp", "--cutoff", "25"])
        assert cfg.command == "verify" and cfg.boundary.kind == CUSP and cfg.cutoff == 25

    def test_cone_json(self):
        cfg = cli.parse_args(["verify", "--boundary", "cone:3.14159", "--cutoff", "25", "--format", "json"])
        assert cfg.boundary.kind == CONE and cfg.boundary.magnitude == 3.14159
        assert cfg.format == "json"

    def test_defaults(self):
        assert cli.parse_args(["verify", "--boundary", "cusp"]).cutoff == 25
        assert cli.parse_args(["weierstrass", "--boundary", "cusp", "--class", "A"]).cutoff == 30
        assert cli.parse_args(["combined", "--boundary", "cusp"]).cutoff == 30

    def test_degrees(self):
        cfg = cli.parse_args(["verify", "--boundary", "cone:180", "--degrees"])
        assert cfg.boundary.magnitude == pytest.approx(math.pi)

    def test_seed(self):
        cfg = cli.parse_args(["verify", "--boundary", "cusp", "--seed", "3,3,6"])
        assert cfg.seed_override == (3.0, 3.0, 6.0)

    @pytest.mark.parametrize("argv,flag", [
        (["verify", "--boundary", "hole:-1"], "--boundary"),
        (["verify", "--boundary", "disc:1"], "--boundary"),
        (["verify", "--boundary", "cone:7"], "--boundary"),
        (["verify", "--boundary", "cusp", "--cutoff", "0"], "--cutoff"),
        (["verify", "--boundary", "cusp", "--tolerance", "-1"], "--tolerance"),
        (["verify", "--boundary", "cusp", "--seed", "3,3"], "--seed"),
        (["verify", "--boundary", "cusp", "--format", "xml"], "--format"),
        (["verify", "--boundary", "cusp", "--frobnicate"], "--frobnicate"),
        (["weierstrass", "--boundary", "cusp", "--class", "Q"], "--class"),
        (["gap", "--delta0", "cone:1", "--end-a", "ring:1", "--end-b", "interior:1"], "--end-a"),
    ])
    def test_usage_errors_name_flag(self, argv, flag, capsys):
        code, out, err = run(argv, capsys)
        assert code == 2
        assert flag in err
        assert out == ""


class TestVerify:
    def test_exit_zero(self, capsys):
        code, out, _ = run(["verify", "--boundary", "cusp", "--cutoff", "25", "--tolerance", "1e-5"], capsys)
        assert code == 0

    def test_exit_one(self, capsys):
        code, _, _ = run(["verify", "--boundary", "cusp", "--cutoff", "3", "--tolerance", "1e-5"], capsys)
        assert code == 1

    def test_default_tolerance_is_tail_estimate(self, capsys):
        code, _, _ = run(["verify", "--boundary", "cusp", "--cutoff", "20"], capsys)
        assert code == 0

    def test_csv(self, capsys):
        code, out, _ = run(["verify", "--boundary", "cusp", "--cutoff", "10"], capsys)
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["slope_p", "slope_q", "trace", "length", "term", "cumulative_sum"]
        # traces 3, 6, 15, 39, 87, 102 lie below 2 cosh 5
        assert len(rows) == 1 + 30
        first = rows[1]
        assert (first[0], first[1], float(first[2])) == ("0", "1", 3.0)
        # shortest round-trip floats
        for row in rows[1:]:
            for cell in row[2:]:
                assert repr(float(cell)) == cell
        lengths = [float(r[3]) for r in rows[1:]]
        assert lengths == sorted(lengths)

    def test_json(self, capsys):
        code, out, _ = run(["verify", "--boundary", "cone:3.14159", "--cutoff", "25", "--format", "json"], capsys)
        d = json.loads(out)
        assert list(d) == ["boundary_kind", "boundary_value", "identity", "cutoff", "term_count",
                           "partial_sum", "target", "residual", "tail_estimate", "monotone_ok"]
        assert d["boundary_kind"] == "cone-point"
        assert d["target"] == 3.14159 / 2
        assert abs(d["residual"]) <= 1e-6
        assert code == 0

    def test_weierstrass_and_combined(self, capsys):
        code, out, _ = run(["weierstrass", "--boundary", "hole:2", "--class", "B", "--format", "json"], capsys)
        assert json.loads(out)["identity"] == "weierstrass:B"
        code, out, _ = run(["combined", "--boundary", "cusp", "--format", "json"], capsys)
        d = json.loads(out)
        assert d["target"] == 1.5 * math.pi and abs(d["residual"]) <= 1.5e-2

    def test_seed_mismatch(self, capsys):
        code, _, err = run(["verify", "--boundary", "cusp", "--seed", "3,3,3.5"], capsys)
        assert code == 2 and "--seed" in err

    def test_seed_override(self, capsys):
        code, out, _ = run(["verify", "--boundary", "cusp", "--seed", "3,3,6", "--format", "json",
                            "--tolerance", "1e-6"], capsys)
        assert code == 0

    def test_output_file(self, tmp_path, capsys):
        path = tmp_path / "r.csv"
        code, out, _ = run(["verify", "--boundary", "cusp", "--cutoff", "8", "--output", str(path)], capsys)
        assert out == ""
        assert path.read_text().startswith("slope_p,")

    def test_byte_identical(self, tmp_path, capsys):
        outs = []
        for fmt in ("csv", "json"):
            for i in range(2):
                path = tmp_path / f"{fmt}{i}"
                run(["combined", "--boundary", "cone:2.5", "--format", fmt, "--output", str(path)], capsys)
                outs.append(path.read_bytes())
        assert outs[0] == outs[1] and outs[2] == outs[3]

    def test_threads_do_not_change_output(self, tmp_path, monkeypatch, capsys):
        path1, path3 = tmp_path / "a", tmp_path / "b"
        monkeypatch.setenv("MCSHANE_THREADS", "1")
        run(["verify", "--boundary", "hole:1.5", "--output", str(path1)], capsys)
        monkeypatch.setenv("MCSHANE_THREADS", "3")
        run(["verify", "--boundary", "hole:1.5", "--output", str(path3)], capsys)
        assert path1.read_bytes() == path3.read_bytes()

    @pytest.mark.parametrize("value", ["0", "-1", "two", "1.5"])
    def test_bad_threads(self, monkeypatch, capsys, value):
        monkeypatch.setenv("MCSHANE_THREADS", value)
        code, _, err = run(["verify", "--boundary", "cusp"], capsys)
        assert code == 2 and "MCSHANE_THREADS" in err


class TestProbes:
    def test_gap(self, capsys):
        code, out, _ = run(["gap", "--delta0", "cone:1", "--end-a", "cusp", "--end-b", "interior:2",
                            "--format", "json"], capsys)
        d = json.loads(out)
        assert code == 0
        assert d["gap"] == pytest.approx(2 * math.atan(math.sin(0.5) / (math.cos(0.5) + math.e)))
        assert d["gs_imag"] == pytest.approx(d["gap"], abs=1e-12)

    def test_gap_prime(self, capsys):
        code, out, _ = run(["gap", "--delta0", "cusp", "--end-a", "interior:2", "--end-b", "interior:2"], capsys)
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["gap"]
        assert float(rows[1][0]) == pytest.approx(1 / (1 + math.exp(2)))

    def test_gap_invalid_combination(self, capsys):
        code, _, err = run(["gap", "--delta0", "hole:1", "--end-a", "cone:1", "--end-b", "cone:1"], capsys)
        assert code == 2

    def test_pants(self, capsys):
        code, out, _ = run(["pants", "--delta0", "hole:2", "--end-a", "interior:2", "--end-b", "interior:3",
                            "--format", "json"], capsys)
        d = json.loads(out)
        assert d["main_gap"] + d["width_a"] + d["width_b"] == pytest.approx(1.0, abs=1e-14)

    def test_pants_degrees(self, capsys):
        code, out, _ = run(["pants", "--delta0", "cone:180", "--end-a", "interior:2", "--end-b",
                            "interior:2", "--degrees", "--format", "json"], capsys)
        assert json.loads(out)["perp_a"] == pytest.approx(math.asinh(1 / math.tanh(1)))

    def test_gs(self, capsys):
        code, out, _ = run(["gs", "--func", "S", "--x", "1", "--y", "1.5707963267948966j", "--z", "1",
                            "--format", "json"], capsys)
        d = json.loads(out)
        assert d["real"] == pytest.approx(0, abs=1e-15)
        assert d["imag"] == pytest.approx(math.atan(math.tanh(1)), abs=1e-15)

    def test_gs_singular(self, capsys):
        code, _, err = run(["gs", "--func", "S", "--x", "0.3", "--y", "0.3", "--z=3.141592653589793j"], capsys)
        assert code == 2

    def test_gs_bad_number(self, capsys):
        code, _, err = run(["gs", "--func", "G", "--x", "one", "--y", "0", "--z", "0"], capsys)
        assert code == 2 and "--x" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mcshane", "verify", "--boundary", "cusp",
                           "--cutoff", "25", "--tolerance", "1e-5", "--format", "json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["term_count"] > 0
    proc = subprocess.run([sys.executable, "-m", "mcshane", "verify", "--boundary", "hole:-1"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
