"""End-to-end command-line checks: output bytes and exit codes."""

import json

import qpartitions.cli as cli
from qpartitions.cli import main

WORKED_FLAGS = ["--r", "2", "--n1", "2", "--n2", "3", "--k1", "2", "--k2", "2"]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class TestGauss:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "gauss", "--top", "4", "--bottom", "2")
        assert code == 0
        assert out == "1 + q + 2*q^2 + q^3 + q^4\n"

    def test_out_of_range_bottom(self, capsys):
        code, out, _ = run(capsys, "gauss", "--top", "3", "--bottom", "5")
        assert code == 0
        assert out == "0\n"

    def test_step(self, capsys):
        code, out, _ = run(capsys, "gauss", "--top", "3", "--bottom", "1", "--step", "2")
        assert code == 0
        assert out == "1 + q^2 + q^4\n"

    def test_json_round_trips(self, capsys):
        code, out, _ = run(
            capsys, "gauss", "--top", "4", "--bottom", "2", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["coeffs"] == ["1", "1", "2", "1", "1"]
        assert payload["polynomial"] == "1 + q + 2*q^2 + q^3 + q^4"
        assert canonical(payload) == out.strip()

    def test_csv_rejected(self, capsys):
        code, _, err = run(
            capsys, "gauss", "--top", "4", "--bottom", "2", "--format", "csv"
        )
        assert code == 2
        assert "csv" in err

    def test_bad_step(self, capsys):
        code, _, err = run(capsys, "gauss", "--top", "4", "--bottom", "2", "--step", "0")
        assert code == 2
        assert "step" in err

    def test_missing_flag(self, capsys):
        code, _, _ = run(capsys, "gauss", "--top", "4")
        assert code == 2


class TestCount:
    def test_two_kind_worked_example(self, capsys):
        code, out, _ = run(capsys, "count", "pbar", *WORKED_FLAGS, "--n", "4")
        assert code == 0
        assert out == "6\n"

    def test_all_routes_agree(self, capsys):
        code, out, err = run(
            capsys, "count", "pbar", *WORKED_FLAGS, "--n", "4", "--method", "all"
        )
        assert code == 0
        assert out == "genfun: 6\nconvolution: 6\nenumerate: 6\n"
        assert err == ""

    def test_partition_number(self, capsys):
        code, out, _ = run(capsys, "count", "partition", "--n", "6")
        assert code == 0
        assert out == "11\n"

    def test_one_kind_trivial(self, capsys):
        code, out, _ = run(capsys, "count", "p", "--N", "5", "--k", "0", "--n", "0")
        assert code == 0
        assert out == "1\n"

    def test_enumerate_method(self, capsys):
        code, out, _ = run(
            capsys, "count", "p", "--N", "2", "--k", "2", "--n", "2",
            "--method", "enumerate",
        )
        assert code == 0
        assert out == "2\n"

    def test_convolution_invalid_for_p(self, capsys):
        code, _, err = run(
            capsys, "count", "p", "--N", "2", "--k", "2", "--n", "2",
            "--method", "convolution",
        )
        assert code == 2
        assert "convolution" in err

    def test_missing_params(self, capsys):
        code, _, err = run(capsys, "count", "pbar", "--n", "4")
        assert code == 2
        assert "--r" in err

    def test_extraneous_params(self, capsys):
        code, _, err = run(
            capsys, "count", "partition", "--n", "6", "--k1", "2"
        )
        assert code == 2
        assert "--k1" in err

    def test_json_uses_decimal_strings(self, capsys):
        code, out, _ = run(
            capsys, "count", "pbar", *WORKED_FLAGS, "--n", "4", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == "6"
        assert payload["params"]["r"] == "2"
        assert canonical(payload) == out.strip()

    def test_route_disagreement_exits_nonzero(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "pbar_convolution", lambda query: 999)
        code, out, err = run(
            capsys, "count", "pbar", *WORKED_FLAGS, "--n", "4", "--method", "all"
        )
        assert code == 1
        assert "disagreement" in err
        assert "999" in err

    def test_quiet(self, capsys):
        code, out, _ = run(
            capsys, "count", "partition", "--n", "6", "--quiet"
        )
        assert code == 0
        assert out == ""


class TestEnumerate:
    def test_worked_example_lines(self, capsys):
        code, out, _ = run(capsys, "enumerate", "pbar", *WORKED_FLAGS, "--n", "4")
        assert code == 0
        assert out == "4\n2+2\n2+2'\n2+1'+1'\n3'+1'\n2'+2'\n"

    def test_empty_partition_line(self, capsys):
        code, out, _ = run(capsys, "enumerate", "pbar", *WORKED_FLAGS, "--n", "0")
        assert code == 0
        assert out == "(empty)\n"

    def test_unreachable_target(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "pbar",
            "--r", "2", "--n1", "1", "--n2", "0", "--k1", "1", "--k2", "0",
            "--n", "3",
        )
        assert code == 0
        assert out == ""

    def test_json_shape(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "pbar", *WORKED_FLAGS, "--n", "4",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == "6"
        assert payload["partitions"][0] == {"first": ["4"], "second": []}
        assert payload["partitions"][3] == {"first": ["2"], "second": ["1", "1"]}
        assert canonical(payload) == out.strip()

    def test_distinct_kind(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "qbar",
            "--r", "2", "--n1", "3", "--n2", "2", "--k1", "1", "--k2", "1",
            "--n", "5",
        )
        assert code == 0
        assert out == "4+1'\n"


class TestVerify:
    def test_pass_with_grid_flags(self, capsys):
        code, out, _ = run(
            capsys, "verify", "eq2", "--m-max", "8", "--n-max", "8"
        )
        assert code == 0
        assert "eq2: PASS" in out
        assert "checked=81" in out

    def test_unknown_identity(self, capsys):
        code, _, err = run(capsys, "verify", "thm9.9")
        assert code == 2
        assert "invalid choice" in err

    def test_json_report_round_trips(self, capsys):
        code, out, _ = run(
            capsys, "verify", "thm2.5", "--r-max", "2", "--param-max", "2",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["identity_id"] == "thm2.5"
        assert payload["failures"] == []
        assert payload["checked"] > 0
        assert canonical(payload) == out.strip()

    def test_all_on_reduced_grids(self, capsys):
        code, out, _ = run(
            capsys, "verify", "all",
            "--param-max", "2", "--r-max", "2", "--m-max", "3",
            "--n-max", "3", "--k-max", "3",
        )
        assert code == 0
        lines = [line for line in out.splitlines() if line]
        assert len(lines) == 11
        assert all("PASS" in line for line in lines)

    def test_quiet_still_signals_by_exit_code(self, capsys):
        code, out, _ = run(
            capsys, "verify", "eq2", "--m-max", "2", "--n-max", "2", "--quiet"
        )
        assert code == 0
        assert out == ""

    def test_failing_report_exits_one(self, capsys, monkeypatch):
        from qpartitions.identities import Counterexample, VerificationReport

        failing = VerificationReport(
            "eq2", "stub", checked=1,
            failures=[Counterexample((3, 4), "1 + q", "1")],
        )
        monkeypatch.setattr(cli, "run_identity", lambda *a, **k: failing)
        code, out, _ = run(capsys, "verify", "eq2")
        assert code == 1
        assert "FAIL" in out
        assert "params=(3, 4)" in out

    def test_all_json_shape(self, capsys):
        code, out, _ = run(
            capsys, "verify", "all",
            "--param-max", "1", "--r-max", "1", "--m-max", "1",
            "--n-max", "1", "--k-max", "1", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["pass"] is True
        assert len(payload["reports"]) == 11
        assert canonical(payload) == out.strip()


class TestTable:
    def test_one_kind_golden_csv(self, capsys):
        code, out, _ = run(
            capsys, "table", "p", "--N", "2", "--k", "2", "--n", "0..4",
            "--format", "csv",
        )
        assert code == 0
        assert out == "n,count\n0,1\n1,1\n2,2\n3,1\n4,1\n"

    def test_two_kind_row(self, capsys):
        code, out, _ = run(
            capsys, "table", "pbar", *WORKED_FLAGS, "--n", "0..10",
            "--format", "csv",
        )
        assert code == 0
        assert "4,6" in out.splitlines()

    def test_empty_range(self, capsys):
        code, _, err = run(
            capsys, "table", "pbar", *WORKED_FLAGS, "--n", "5..2",
            "--format", "csv",
        )
        assert code == 2
        assert "empty range" in err

    def test_malformed_range(self, capsys):
        code, _, err = run(capsys, "table", "partition", "--n", "7")
        assert code == 2
        assert "expected A..B" in err

    def test_formats_agree_on_numeric_content(self, capsys):
        _, csv_out, _ = run(
            capsys, "table", "p", "--N", "2", "--k", "2", "--n", "0..4",
            "--format", "csv",
        )
        _, text_out, _ = run(
            capsys, "table", "p", "--N", "2", "--k", "2", "--n", "0..4"
        )
        _, json_out, _ = run(
            capsys, "table", "p", "--N", "2", "--k", "2", "--n", "0..4",
            "--format", "json",
        )
        csv_rows = [line.split(",") for line in csv_out.splitlines()[1:]]
        text_rows = [line.split() for line in text_out.splitlines()[1:]]
        json_rows = [
            [row["n"], row["count"]] for row in json.loads(json_out)["rows"]
        ]
        assert csv_rows == text_rows == json_rows
        assert canonical(json.loads(json_out)) == json_out.strip()


class TestParserBasics:
    def test_no_command(self, capsys):
        code, _, _ = run(capsys)
        assert code == 2

    def test_help_exits_zero(self, capsys):
        code, _, _ = run(capsys, "--help")
        assert code == 0
