"""Command-line behavior: outputs, formats, exit codes, determinism."""

import json
from fractions import Fraction

import pytest

from saddlepoint import series
from saddlepoint.cli import main

GAMMA_PROBLEM = """\
p = {"builtin": "gamma", "order": 12}
a = 1
variant = "even_opposite"
k = 0
order = 6
contour = [{"segment": [[0.05, 0.0], [4.0, 0.0]]}]
n_values = [50.0]
"""


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExample:
    def test_gamma_exact_rationals(self, capsys):
        code, out, _ = run(capsys, ["example", "gamma", "--terms", "8"])
        assert code == 0
        assert "1/12" in out and "1/288" in out and "-139/51840" in out

    def test_gamma_agreement_line(self, capsys):
        code, out, _ = run(capsys, ["example", "gamma", "--terms", "6"])
        assert code == 0
        digits = int(out.split("agreement: ")[1].split(" ")[0])
        assert digits >= 6

    def test_center_agreement(self, capsys):
        code, out, _ = run(capsys, ["example", "center", "--n", "50",
                                    "--eps", "0.4", "--terms", "13"])
        assert code == 0
        assert "agreement: 10 digits" in out
        assert "2.8171413884" in out.replace("e-14", "")[:10000] or "2.817141388" in out

    def test_sylvester_values(self, capsys):
        code, out, _ = run(capsys, ["example", "sylvester", "--n", "2000",
                                    "--lambda", "1", "--terms", "3"])
        assert code == 0
        one = float(out.split("1 term(s): ")[1].splitlines()[0])
        three = float(out.split("3 term(s): ")[1].splitlines()[0])
        assert abs(one - 4.56e53) < 0.005e53
        assert abs(three - 4.37e53) < 0.005e53

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, ["example", "kepler", "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["example"] == "kepler"
        assert payload["agreement_digits"] >= 8
        assert payload["coefficients"][2] == "1/20"
        assert {"re", "im"} == set(payload["expansion_value"])

    def test_tsv_format(self, capsys):
        code, out, _ = run(capsys, ["example", "parabolic", "--format", "tsv"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "s\texp_re\texp_im\tcoeff_re\tcoeff_im"
        assert len(lines) == 9

    def test_determinism(self, capsys):
        _, first, _ = run(capsys, ["example", "center", "--terms", "9"])
        _, second, _ = run(capsys, ["example", "center", "--terms", "9"])
        assert first == second

    def test_bad_eps_is_input_error(self, capsys):
        code, _, err = run(capsys, ["example", "center", "--eps", "1.7"])
        assert code == 2
        assert "eccentricity" in err

    def test_sylvester_non_integer_lambda_n(self, capsys):
        code, _, err = run(capsys, ["example", "sylvester", "--n", "101",
                                    "--lambda", "1/2"])
        assert code == 2
        assert "integer" in err

    def test_sylvester_json(self, capsys):
        code, out, _ = run(capsys, ["example", "sylvester", "--n", "2000",
                                    "--lambda", "1", "--terms", "2",
                                    "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert abs(payload["w0"]["re"] - 0.916198) < 1e-6
        assert payload["main_terms"][0]["terms"] == 1
        assert abs(payload["main_terms"][0]["value"] - 4.56e53) < 0.005e53


class TestExpand:
    def test_gamma_problem_file(self, tmp_path, capsys):
        path = tmp_path / "gamma.txt"
        path.write_text(GAMMA_PROBLEM)
        code, out, _ = run(capsys, ["expand", str(path)])
        assert code == 0
        assert "mu = 2" in out
        digits = int(out.split("agreement digits: ")[1].split()[0])
        assert digits >= 6

    def test_parse_error_exit_2(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text(GAMMA_PROBLEM.replace("order = 6", "order = {6"))
        code, _, err = run(capsys, ["expand", str(path)])
        assert code == 2
        assert "line" in err

    def test_missing_file_exit_2(self, capsys):
        code, _, err = run(capsys, ["expand", "/no/such/file.txt"])
        assert code == 2

    def test_even_opposite_odd_mu_named_error(self, tmp_path, capsys):
        text = """\
p = {"builtin": "kepler", "order": 12}
variant = "even_opposite"
k = 0
order = 4
"""
        path = tmp_path / "odd.txt"
        path.write_text(text)
        code, _, err = run(capsys, ["expand", str(path)])
        assert code == 2
        assert "even mu" in err

    def test_equal_sector_warning(self, tmp_path, capsys):
        text = """\
p = {"builtin": "kepler", "order": 12}
variant = "through"
k1 = 1
k2 = 1
order = 4
"""
        path = tmp_path / "same.txt"
        path.write_text(text)
        code, out, _ = run(capsys, ["expand", str(path)])
        assert code == 0
        assert "warning" in out
        assert "(zero)" in out

    def test_determinism(self, tmp_path, capsys):
        path = tmp_path / "gamma.txt"
        path.write_text(GAMMA_PROBLEM)
        _, first, _ = run(capsys, ["expand", str(path)])
        _, second, _ = run(capsys, ["expand", str(path)])
        assert first == second

    def test_shipped_center_problem_file(self, capsys):
        from pathlib import Path
        path = Path(__file__).resolve().parent.parent / "demos" / "problems" / "center.txt"
        code, out, _ = run(capsys, ["expand", str(path)])
        assert code == 0
        digits = int(out.split("agreement digits: ")[1].split()[0])
        assert digits >= 10

    def test_json_format(self, tmp_path, capsys):
        path = tmp_path / "gamma.txt"
        path.write_text(GAMMA_PROBLEM)
        code, out, _ = run(capsys, ["expand", str(path), "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["mu"] == 2
        assert payload["validation"][0]["agreement_digits"] >= 6
        assert payload["alpha_route_deviation"] < 1e-10

    def test_polynomial_phase_with_contour(self, tmp_path, capsys):
        # coefficient lists are integrated as the polynomials they
        # define: p = -z^2 through the origin gives the plain Gaussian
        text = """\
z0 = [0.0, 0.0]
p = [[0,0],[0,0],[-1,0],[0,0],[0,0],[0,0],[0,0],[0,0]]
q = [[1,0],[0,0],[0,0],[0,0],[0,0],[0,0]]
variant = "even_opposite"
k = 0
order = 6
contour = [{"segment": [[-2.0, 0.0], [2.0, 0.0]]}]
n_values = [20.0]
"""
        path = tmp_path / "gauss.txt"
        path.write_text(text)
        code, out, _ = run(capsys, ["expand", str(path), "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        entry = payload["validation"][0]
        import math
        want = math.sqrt(math.pi / 20.0)
        assert abs(entry["expansion"]["re"] - want) < 1e-12
        assert entry["agreement_digits"] >= 12

    def test_tol_flag_loosens_quadrature(self, tmp_path, capsys):
        path = tmp_path / "gamma.txt"
        path.write_text(GAMMA_PROBLEM)
        code, out, _ = run(capsys, ["expand", str(path), "--format", "json",
                                    "--tol", "1e-4"])
        assert code == 0
        loose = json.loads(out)["validation"][0]["evaluations"]
        code, out, _ = run(capsys, ["expand", str(path), "--format", "json"])
        tight = json.loads(out)["validation"][0]["evaluations"]
        assert loose < tight


class TestSelftest:
    def test_fresh_build_passes(self, capsys):
        code, out, _ = run(capsys, ["selftest"])
        assert code == 0
        assert "0 failed" in out

    def test_json_summary(self, capsys):
        code, out, _ = run(capsys, ["selftest", "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["failed"] == 0
        assert payload["passed"] == len(payload["checks"])

    def test_fault_injection_fails_named_check(self, capsys, monkeypatch):
        # corrupt one Bernoulli value: the recurrence that pins the
        # table must fail and name itself, and the exit code flips
        real = series.bernoulli

        def corrupted(m):
            if m == 12:
                return Fraction(-691, 2731)
            return real(m)

        monkeypatch.setattr(series, "bernoulli", corrupted)
        code, out, _ = run(capsys, ["selftest"])
        assert code == 1
        assert "FAIL  bernoulli-recurrence" in out

    def test_fault_injection_json_counts(self, capsys, monkeypatch):
        real = series.stirling2

        def corrupted(m, j):
            if (m, j) == (7, 3):
                return real(m, j) + 1
            return real(m, j)

        monkeypatch.setattr(series, "stirling2", corrupted)
        code, out, _ = run(capsys, ["selftest", "--format", "json"])
        assert code == 1
        payload = json.loads(out)
        assert payload["failed"] >= 1
        names = {c["name"] for c in payload["checks"] if not c["ok"]}
        assert "stirling-recurrence" in names


class TestFlags:
    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0

    def test_unknown_example_is_input_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["example", "laplace"])
        assert exc.value.code == 2
