import json
import math

import pytest

from barneszeta.cli import canonical_json, main


@pytest.fixture
def run(capsys):
    def _run(argv, env=None, monkeypatch=None):
        code = main(argv)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


class TestEval:
    def test_direct_value(self, run):
        code, out, err = run(["eval", "--alpha", "5", "--a", "1", "--w", "1,1",
                              "--method", "direct"])
        assert code == 0
        assert "1.0823232" in out

    def test_pole_exit_with_residue_hint(self, run):
        code, out, err = run(["eval", "--alpha", "1", "--a", "1", "--w", "1",
                              "--method", "series"])
        assert code == 4
        assert "residue" in err
        assert "1" in err

    def test_json_output_and_roundtrip(self, run):
        code, out, err = run(["eval", "--alpha", "0.5", "--a", "1", "--w", "1,1",
                              "--method", "integral", "--json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["value"][0] == pytest.approx(-0.20788622497735468, abs=1e-9)
        assert payload["method"] == "integral"
        # byte-identical round trip
        assert canonical_json(payload) + "\n" == out

    def test_homogeneous(self, run):
        code, out, err = run(["eval", "--alpha", "5", "--w", "1,1",
                              "--method", "series", "--homogeneous", "--json"])
        assert code == 0
        assert json.loads(out)["value"][0] == pytest.approx(2.1192509888, abs=1e-8)

    def test_reduction_route(self, run):
        code, out, err = run(["eval", "--alpha", "5", "--a", "1", "--w", "1,2",
                              "--method", "reduction", "--json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["method"] == "reduction"

    def test_usage_error(self, run):
        code, out, err = run(["eval", "--alpha", "5", "--a", "1", "--w", "oops"])
        assert code == 2

    def test_missing_a_is_usage_error(self, run):
        code, out, err = run(["eval", "--alpha", "5", "--w", "1,1", "--method", "series"])
        assert code == 2


class TestFpDerivGamma:
    def test_fp_series_euler(self, run):
        code, out, err = run(["fp", "--q", "1", "--a", "1", "--w", "1",
                              "--method", "series", "--json"])
        assert code == 0
        assert json.loads(out)["value"][0] == pytest.approx(0.5772156649, abs=1e-9)

    def test_deriv0_limit(self, run):
        code, out, err = run(["deriv0", "--a", "1", "--w", "1", "--method", "limit", "--json"])
        assert code == 0
        assert json.loads(out)["value"][0] == pytest.approx(-0.9189385, abs=1e-6)

    def test_gamma_dq(self, run):
        code, out, err = run(["gamma", "--fn", "gammadq", "--q", "1", "--w", "1", "--json"])
        assert code == 0
        assert json.loads(out)["value"][0] == pytest.approx(0.5772157, abs=1e-6)

    def test_multigamma(self, run):
        code, out, err = run(["gamma", "--fn", "multigamma", "--a", "3", "--d", "1", "--json"])
        assert code == 0
        assert json.loads(out)["value"][0] == pytest.approx(math.log(2), abs=1e-9)


class TestCompare:
    def test_d1_canonical_passes_tight(self, run):
        # must pass with tolerances 10x tighter than the defaults
        code, out, err = run(["compare", "--a", "1", "--w", "1", "--tol", "1e-6"])
        assert code == 0
        payload = json.loads(out.splitlines()[0])
        assert payload["pass"] is True

    def test_report_files(self, run, tmp_path):
        stem = str(tmp_path / "report")
        code, out, err = run(["compare", "--a", "1", "--w", "1", "--out", stem])
        assert code == 0
        data = json.loads((tmp_path / "report.json").read_text())
        assert data["pass"] is True
        csv_text = (tmp_path / "report.csv").read_text()
        assert csv_text.startswith("quantity,series_re")
        assert "\r" not in csv_text

    def test_failure_exit_code(self, run):
        code, out, err = run(["compare", "--a", "1", "--w", "1", "--tol", "1e-30"])
        assert code == 1
        payload = json.loads(out.splitlines()[0])
        assert payload["pass"] is False


class TestTable:
    def test_five_rows(self, run):
        code, out, err = run(["table", "--alpha-grid", "3:5:5", "--a", "1", "--w", "1,1",
                              "--method", "series"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "alpha_re,alpha_im,value_re,value_im,est_error,method"
        assert len(lines) == 6

    def test_series_matches_direct(self, run):
        # the direct tail bound converges fast enough for 1e-10 only well
        # above the abscissa, so the match is checked on alpha in [5, 6]
        code_s, out_s, _ = run(["table", "--alpha-grid", "5:6:3", "--a", "1", "--w", "1,1",
                                "--method", "series"])
        code_d, out_d, _ = run(["table", "--alpha-grid", "5:6:3", "--a", "1", "--w", "1,1",
                                "--method", "direct", "--tol", "1e-12"])
        for ls, ld in zip(out_s.splitlines()[1:], out_d.splitlines()[1:]):
            vs = float(ls.split(",")[2])
            vd = float(ld.split(",")[2])
            assert abs(vs - vd) <= 1e-10 * (1 + abs(vd))

    def test_pole_row_is_nan_and_exit_nonzero(self, run):
        code, out, err = run(["table", "--alpha-grid", "1.5:2.5:3", "--a", "1", "--w", "1,1",
                              "--method", "series"])
        assert code == 4
        rows = out.strip().splitlines()
        assert len(rows) == 4
        assert "nan" in rows[2]

    def test_float_formatting_17_digits(self, run):
        code, out, err = run(["table", "--alpha-grid", "5:5:1", "--a", "1", "--w", "1,1",
                              "--method", "series"])
        value = out.strip().splitlines()[1].split(",")[2]
        assert value == format(float(value), ".17g")


class TestEnvironment:
    def test_env_tolerance_respected(self, run, monkeypatch):
        monkeypatch.setenv("BARNES_ZETA_TOL", "1e-4")
        code, out, err = run(["eval", "--alpha", "4", "--a", "1", "--w", "1,1",
                              "--method", "direct", "--json"])
        assert code == 0
        loose = json.loads(out)["diagnostics"]["shells"]
        monkeypatch.setenv("BARNES_ZETA_TOL", "1e-9")
        code, out, err = run(["eval", "--alpha", "4", "--a", "1", "--w", "1,1",
                              "--method", "direct", "--json"])
        tight = json.loads(out)["diagnostics"]["shells"]
        assert loose < tight

    def test_flag_overrides_env(self, run, monkeypatch):
        monkeypatch.setenv("BARNES_ZETA_TOL", "1e-3")
        code, out, err = run(["eval", "--alpha", "4", "--a", "1", "--w", "1,1",
                              "--method", "direct", "--tol", "1e-9", "--json"])
        shells = json.loads(out)["diagnostics"]["shells"]
        assert shells > 100
