import csv
import io
import json
from contextlib import redirect_stdout

import pytest

from qoscil.cli import main


def run_cli(*argv):
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = main(list(argv))
    return code, buffer.getvalue()


class TestChainCommand:
    def test_unit_start(self):
        code, out = run_cli("chain", "--start", "1", "--params", "2", "--levels", "4")
        assert code == 0
        assert "f_1 = 2^n" in out
        assert "1, 2, 4, 8" in out

    def test_deformation_of_unity(self):
        code, out = run_cli("chain", "--start", "1", "--params", "1,1", "--levels", "4")
        assert code == 0
        assert "f_2 = 1" in out
        assert "1, 1, 1, 1" in out

    def test_linear_start_parity(self):
        code, out = run_cli("chain", "--start", "2n+2", "--params", "-1", "--levels", "4")
        assert code == 0
        assert "2, 0, 2, 0" in out

    def test_json_round_trip(self):
        code, out = run_cli(
            "chain", "--start", "1", "--params", "2,1/2", "--levels", "3",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        from qoscil.serialize import chain_from_wire
        from qoscil import chain, ExpPoly
        back = chain_from_wire(payload)
        assert back.steps == chain(ExpPoly.constant(1), payload["params"]).steps

    def test_csv_output(self):
        code, out = run_cli(
            "chain", "--start", "1", "--params", "2", "--levels", "3", "--format", "csv"
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0][:2] == ["series", "closed form"]
        f1 = next(r for r in rows if r[0] == "f_1")
        assert f1[2:] == ["1", "2", "4"]

    def test_parse_error_exit_code(self):
        code, _ = run_cli("chain", "--start", "zebra", "--params", "2")
        assert code == 2
        code, _ = run_cli("chain", "--start", "1", "--params", "2//3")
        assert code == 2

    def test_degenerate_exit_code(self):
        code, _ = run_cli("chain", "--start", "1", "--params", "0")
        assert code == 3
        code, _ = run_cli("family", "--name", "mb", "--q", "1")
        assert code == 3


class TestFamilyCommand:
    def test_mb_values(self):
        code, out = run_cli("family", "--name", "mb", "--q", "2", "--levels", "3")
        assert code == 0
        assert "1, 3/2, 11/4" in out

    def test_cv(self):
        code, out = run_cli("family", "--name", "cv", "--nu", "1/2", "--levels", "4")
        assert code == 0
        assert "2, 0, 2, 0" in out

    def test_qcv_three_terms(self):
        code, out = run_cli(
            "family", "--name", "qcv", "--nu", "1/2", "--q", "2", "--Q", "2",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert len(payload["bracket"]["exp"]) + (1 if payload["bracket"]["poly"] else 0) == 3

    def test_missing_parameter(self):
        code, _ = run_cli("family", "--name", "cj", "--q1", "2")
        assert code == 2


class TestVerifyCommand:
    def test_each_suite_passes(self):
        for suite in ("equivalence", "ordering", "casimir", "inverse"):
            code, out = run_cli("verify", "--suite", suite, "--seed", "7")
            assert code == 0, out
            assert "FAIL" not in out

    def test_all_suites(self):
        code, out = run_cli("verify", "--suite", "all", "--seed", "3")
        assert code == 0
        assert "identities hold exactly" in out

    def test_json_report(self):
        code, out = run_cli("verify", "--suite", "inverse", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["failed"] == 0
        assert all(item["ok"] for item in payload["results"])

    def test_csv_report(self):
        code, out = run_cli("verify", "--suite", "casimir", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["suite", "check", "status", "detail"]
        assert all(row[2] == "PASS" for row in rows[1:])


class TestOtherCommands:
    def test_normal_order_example(self):
        code, out = run_cli("normal-order", "--f", "1", "--q", "2", "--m", "2")
        assert code == 0
        assert "C[2,2] = 2" in out and "C[2,1] = 1" in out

    def test_normal_order_bar(self):
        code, out = run_cli("normal-order", "--f", "q^n", "--q", "2", "--bar", "--m", "2")
        assert code == 0
        assert "C[2,1] = 2^n" in out

    def test_inverse_auto(self):
        code, out = run_cli("inverse", "--phi", "q^n", "--q", "3", "--auto")
        assert code == 0
        assert "Q = 3" in out and "Phi = 1" in out

    def test_inverse_unit(self):
        code, out = run_cli("inverse", "--phi", "q^n", "--q", "3", "--unit")
        assert code == 0
        assert "3, 3, 3" in out

    def test_inverse_precondition_exit(self):
        code, _ = run_cli("inverse", "--phi", "1+1*(-1)^n", "--unit")
        assert code == 3

    def test_casimir_verdicts(self):
        code, out = run_cli("casimir", "--f", "1", "--q", "2")
        assert code == 0
        assert "FAIL" not in out
        assert "mu =" in out and "nu =" in out

    def test_casimir_json_carries_operator_dump(self):
        code, out = run_cli("casimir", "--f", "1", "--q", "2", "--format", "json", "-N", "4")
        assert code == 0
        payload = json.loads(out)
        # the Casimir vanishes identically on the Fock window, so its dump
        # (nonzero determined entries as [degree, level, value]) is empty
        assert payload["operator"] == []

    def test_casimir_non_fock_diagnostic(self):
        code, out = run_cli(
            "casimir", "--f", "1", "--q", "2", "--casimir-value", "3/2", "-N", "4"
        )
        assert code == 0
        assert "candidate spectrum" in out

    def test_qderiv(self):
        code, out = run_cli("qderiv", "--coeffs", "0,0,1", "--params", "2,1/2")
        assert code == 0
        assert "0, 5/2" in out


class TestWindowEnv:
    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("QOSCIL_WINDOW", "6")
        code, out = run_cli("inverse", "--phi", "q^n", "--q", "3", "--unit")
        assert code == 0
        assert out.count("3") >= 6

    def test_bad_env_rejected(self, monkeypatch):
        monkeypatch.setenv("QOSCIL_WINDOW", "banana")
        code, _ = run_cli("inverse", "--phi", "q^n", "--q", "3", "--unit")
        assert code == 2

    def test_flag_beats_env(self, monkeypatch):
        monkeypatch.setenv("QOSCIL_WINDOW", "32")
        code, out = run_cli(
            "inverse", "--phi", "q^n", "--q", "3", "--unit", "-N", "4",
            "--format", "csv",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert len(rows) == 5  # header + 4 levels

    def test_output_file(self, tmp_path):
        target = tmp_path / "out.json"
        code, out = run_cli(
            "chain", "--start", "1", "--params", "2", "--format", "json",
            "--output", str(target),
        )
        assert code == 0 and out == ""
        payload = json.loads(target.read_text())
        assert payload["params"] == ["2"]


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as err:
        main(["family", "--name", "nonsense"])
    assert err.value.code == 2
