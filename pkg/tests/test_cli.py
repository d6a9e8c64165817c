"""End-to-end tests for the command-line interface (in-process via main())."""

import json
import shutil
import subprocess
import sys

import pytest

from omegacalc.cli import main
from omegacalc.omega import OmegaProblem, omega_closed_form, zero_pad, padded_names
from omegacalc.symfun import Alphabet

GOLDEN_EXPR = "omega(lambda / ((1-x1*lambda)*(1-x2*lambda)*(1-y/lambda)))"
GOLDEN_TEXT = ("(-1*x1*y - 1*x2*y + 1*y + 1) / "
               "((-1*x1 + 1)*(-1*x2 + 1)*(-1*x1*y + 1)*(-1*x2*y + 1))")


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEvaluation:
    def test_golden_expression_text(self, capsys):
        code, out, err = run_cli(capsys, "--expr", GOLDEN_EXPR)
        assert code == 0
        assert out == GOLDEN_TEXT + "\n"

    def test_flags_equal_expression(self, capsys):
        _, out_expr, _ = run_cli(capsys, "--expr", GOLDEN_EXPR)
        _, out_flags, _ = run_cli(capsys, "--k", "1", "--x", "x1,x2", "--y", "y")
        assert out_expr == out_flags

    def test_series_json(self, capsys):
        code, out, _ = run_cli(capsys, "--k", "0", "--x", "x",
                               "--method", "series", "--truncate", "3",
                               "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["method"] == "series"
        assert payload["truncation"] == 3
        assert payload["denominator_factors"] == []
        coeffs = {tuple(sorted(t["exps"].items())): t["coeff"]
                  for t in payload["numerator"]}
        assert coeffs == {(): "1", (("x", 1),): "1",
                          (("x", 2),): "1", (("x", 3),): "1"}

    def test_json_output_is_byte_identical_across_runs(self, capsys):
        args = ("--expr", GOLDEN_EXPR, "--format", "json")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_method_all_text(self, capsys):
        code, out, _ = run_cli(capsys, "--expr", GOLDEN_EXPR, "--method", "all",
                               "--truncate", "4")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("schur: ")
        assert lines[1].startswith("lagrange: ")
        assert lines[2].startswith("series (degree <= 4): ")
        assert lines[0].split(": ", 1)[1] == lines[1].split(": ", 1)[1] == GOLDEN_TEXT

    def test_method_all_json(self, capsys):
        code, out, _ = run_cli(capsys, "--expr", GOLDEN_EXPR, "--method", "all",
                               "--format", "json")
        payload = json.loads(out)
        assert [r["method"] for r in payload["results"]] == ["schur", "lagrange", "series"]

    def test_lagrange_method(self, capsys):
        code, out, _ = run_cli(capsys, "--expr", GOLDEN_EXPR, "--method", "lagrange")
        assert code == 0
        assert out == GOLDEN_TEXT + "\n"

    def test_custom_lambda(self, capsys):
        code, out, _ = run_cli(capsys, "--expr", "omega(t/((1-x1*t)*(1-x2*t)*(1-y/t)))",
                               "--lambda", "t")
        assert code == 0
        assert out == GOLDEN_TEXT + "\n"


class TestPadding:
    def test_k_too_large_without_pad(self, capsys):
        code, out, err = run_cli(capsys, "--k", "2", "--x", "x", "--y", "y")
        assert code == 3
        assert "k < n" in err
        assert "--pad 2" in err

    def test_pad_lifts_the_restriction(self, capsys):
        code, out, _ = run_cli(capsys, "--k", "2", "--x", "x", "--y", "y", "--pad", "2")
        assert code == 0
        original = OmegaProblem(2, Alphabet(["x"]), Alphabet(["y"]))
        padded = zero_pad(original, 2)
        names = padded_names(original, padded)
        expected = omega_closed_form(padded).value.substitute({n: 0 for n in names})
        assert out == expected.to_text() + "\n"

    def test_series_ignores_padding(self, capsys):
        code, out, _ = run_cli(capsys, "--k", "2", "--x", "x", "--method", "series",
                               "--truncate", "3")
        assert code == 0  # the series method has no k < n restriction
        _, padded_out, _ = run_cli(capsys, "--k", "2", "--x", "x", "--method", "series",
                                   "--truncate", "3", "--pad", "1")
        assert out == padded_out


class TestCheck:
    def test_check_passes(self, capsys):
        code, out, _ = run_cli(capsys, "--expr", GOLDEN_EXPR, "--check",
                               "--truncate", "5")
        assert code == 0
        assert "schur vs lagrange: PASS" in out
        assert "overall: PASS" in out

    def test_corrupt_check_fails_with_exit_2(self, capsys):
        code, out, _ = run_cli(capsys, "--expr", GOLDEN_EXPR, "--check",
                               "--truncate", "5", "--corrupt")
        assert code == 2
        assert "overall: FAIL" in out

    def test_check_json(self, capsys):
        code, out, _ = run_cli(capsys, "--expr", GOLDEN_EXPR, "--check",
                               "--truncate", "4", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        assert len(payload["comparisons"]) == 2

    def test_report_dir(self, capsys, tmp_path):
        out_dir = tmp_path / "report"
        code, out, err = run_cli(capsys, "--expr", GOLDEN_EXPR, "--check",
                                 "--truncate", "4", "--report-dir", str(out_dir))
        assert code == 0
        report_csv = out_dir / "check_report.csv"
        metrics_csv = out_dir / "check_metrics.csv"
        figure = out_dir / "check_report.png"
        assert report_csv.exists() and metrics_csv.exists() and figure.exists()
        assert "pass" in report_csv.read_text()
        assert "numerator_terms_schur" in metrics_csv.read_text()
        assert figure.read_bytes()[:4] == b"\x89PNG"
        assert str(figure) in err

    def test_report_dir_written_even_on_failure(self, capsys, tmp_path):
        out_dir = tmp_path / "failing"
        code, _, _ = run_cli(capsys, "--expr", GOLDEN_EXPR, "--check",
                             "--truncate", "4", "--corrupt",
                             "--report-dir", str(out_dir))
        assert code == 2
        assert "fail" in (out_dir / "check_report.csv").read_text()


class TestInputErrors:
    def test_unparseable_expression(self, capsys):
        code, out, err = run_cli(capsys, "--expr", "omega(lambda")
        assert code == 1
        assert err.startswith("error:")

    def test_structure_error(self, capsys):
        code, _, err = run_cli(capsys, "--expr", "omega(lambda/(1-x*lambda^2))")
        assert code == 1
        assert "net exponent" in err

    def test_expr_and_flags_conflict(self, capsys):
        code, _, err = run_cli(capsys, "--expr", GOLDEN_EXPR, "--k", "1")
        assert code == 1
        assert "not both" in err

    def test_missing_problem(self, capsys):
        code, _, err = run_cli(capsys)
        assert code == 1
        assert err

    def test_missing_x(self, capsys):
        code, _, err = run_cli(capsys, "--k", "1")
        assert code == 1
        assert "--x" in err

    def test_negative_k(self, capsys):
        code, _, err = run_cli(capsys, "--k", "-1", "--x", "x")
        assert code == 1
        assert err

    def test_negative_truncate(self, capsys):
        code, _, err = run_cli(capsys, "--k", "0", "--x", "x", "--truncate", "-2")
        assert code == 1
        assert err

    def test_bad_letter(self, capsys):
        code, _, err = run_cli(capsys, "--k", "0", "--x", "x^")
        assert code == 1
        assert "--x" in err

    def test_unknown_flag(self, capsys):
        code, _, err = run_cli(capsys, "--bogus")
        assert code == 1
        assert err

    def test_bad_int_flag(self, capsys):
        code, _, err = run_cli(capsys, "--k", "one", "--x", "x")
        assert code == 1
        assert err


class TestDomainErrors:
    def test_repeated_letters_lagrange(self, capsys):
        code, _, err = run_cli(capsys, "--k", "1", "--x", "q,q", "--method", "lagrange")
        assert code == 3
        assert "distinct" in err

    def test_constant_letter_series(self, capsys):
        code, _, err = run_cli(capsys, "--k", "0", "--x", "1", "--method", "series")
        assert code == 3
        assert "degree" in err

    def test_constant_letter_pole(self, capsys):
        # X letter 1 makes the factor (1 - 1) vanish
        code, _, err = run_cli(capsys, "--k", "0", "--x", "1", "--method", "schur")
        assert code == 3


class TestProcessLevel:
    def test_python_module_entry(self):
        proc = subprocess.run(
            [sys.executable, "-m", "omegacalc", "--expr", GOLDEN_EXPR],
            capture_output=True, text=True, timeout=60)
        assert proc.returncode == 0
        assert proc.stdout == GOLDEN_TEXT + "\n"

    def test_console_script(self):
        exe = shutil.which("omegacalc")
        assert exe, "console script not on PATH (install the package first)"
        proc = subprocess.run(
            [exe, "--k", "0", "--x", "x", "--method", "series",
             "--truncate", "2", "--format", "json"],
            capture_output=True, text=True, timeout=60)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["truncation"] == 2
