import csv
import io
import json

import pytest

from padquat import __version__
from padquat.cli import main


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestSeq:
    def test_symbolic_table_matches_reference_rows(self, capsys):
        status, out, _ = run_cli(capsys, "seq", "--symbolic", "--upto", "11")
        assert status == 0
        lines = out.splitlines()
        assert lines[0].split() == ["n", "padovan", "perrin"]
        assert len(lines) == 12
        row8 = lines[9]
        assert "a^4 + 2a + b" in row8 and "2a^3 + 3a + 3b + 2" in row8

    def test_modular_perrin(self, capsys):
        status, out, _ = run_cli(capsys, "seq", "--kind", "perrin", "--p", "5", "--upto", "4")
        assert status == 0
        values = [line.split()[1] for line in out.splitlines()[1:]]
        assert values == ["3", "0", "2", "3"]

    def test_upto_zero_empty_table(self, capsys):
        status, out, _ = run_cli(capsys, "seq", "--symbolic", "--upto", "0")
        assert status == 0
        assert out.splitlines() == ["n  padovan  perrin"]

    def test_modular_requires_twin_prime(self, capsys):
        status, _, err = run_cli(capsys, "seq", "--p", "11", "--upto", "4")
        assert status == 1
        assert "twin prime" in err

    def test_needs_p_or_symbolic(self, capsys):
        status, _, err = run_cli(capsys, "seq", "--upto", "4")
        assert status == 1 and "error:" in err

    def test_json_round_trip(self, capsys):
        status, out, _ = run_cli(capsys, "seq", "--symbolic", "--upto", "3", "--format", "json")
        assert status == 0
        doc = json.loads(out)
        assert doc["tool_version"] == __version__
        assert doc["config"]["command"] == "seq"
        assert doc["terms"][0] == {"n": 0, "padovan": "1", "perrin": "3"}
        assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == out

    def test_csv_format(self, capsys):
        status, out, _ = run_cli(capsys, "seq", "--kind", "padovan", "--p", "5",
                                 "--upto", "5", "--format", "csv")
        assert status == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["n", "padovan"]
        assert [r[1] for r in rows[1:]] == ["1", "0", "3", "1", "4"]


class TestFib:
    def test_profile_181(self, capsys):
        status, out, _ = run_cli(capsys, "fib", "--p", "181")
        assert status == 0
        assert "entry_point: 90" in out
        assert "pisano_period: 90" in out
        assert "relation: pi(p) = z(p)" in out

    def test_profile_7(self, capsys):
        status, out, _ = run_cli(capsys, "fib", "--p", "7")
        assert status == 0 and "pisano_period: 16" in out

    def test_rejects_non_prime(self, capsys):
        status, _, err = run_cli(capsys, "fib", "--p", "4")
        assert status == 1 and "odd prime" in err

    def test_csv(self, capsys):
        status, out, _ = run_cli(capsys, "fib", "--p", "5", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0][:3] == ["p", "entry_point", "pisano_period"]
        assert rows[1][:3] == ["5", "5", "20"]


class TestVerify:
    def test_cor_13_holds_exit_zero(self, capsys):
        status, out, _ = run_cli(capsys, "verify", "--p", "13", "--case", "cor-13")
        assert status == 0
        assert "HOLDS" in out and "FAILS" not in out

    def test_not_twin_prime(self, capsys):
        status, _, err = run_cli(capsys, "verify", "--p", "9")
        assert status == 1 and "twin prime" in err

    def test_excluded_case_is_usage_error(self, capsys):
        status, _, err = run_cli(capsys, "verify", "--p", "13", "--case", "cor-7")
        assert status == 1 and "error:" in err

    def test_unknown_case_rejected_by_parser(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--p", "13", "--case", "cor-99"])
        assert exc.value.code == 1

    def test_fails_verdict_sets_exit_two(self, capsys):
        status, out, _ = run_cli(capsys, "verify", "--p", "13")
        assert status == 2  # the even/odd four-class claims over-predict at 13
        assert "FAILS" in out

    def test_json_document_deterministic_and_round_trips(self, capsys):
        s1, out1, _ = run_cli(capsys, "verify", "--p", "5", "--format", "json")
        s2, out2, _ = run_cli(capsys, "verify", "--p", "5", "--format", "json")
        assert s1 == s2 and out1 == out2
        doc = json.loads(out1)
        assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == out1
        ids = [v["case"]["claim_id"] for v in doc["verdicts"]]
        assert ids == sorted(ids)
        fails = [v for v in doc["verdicts"] if v["classification"] == "FAILS"]
        assert all(v["counterexamples"] for v in fails)

    def test_scan_multiplier_below_two_rejected(self, capsys):
        status, _, err = run_cli(capsys, "verify", "--p", "13", "--scan-multiplier", "1")
        assert status == 1 and "scan-multiplier" in err

    def test_scan_multiplier_flag(self, capsys):
        status, out, _ = run_cli(capsys, "verify", "--p", "13", "--case", "cor-13",
                                 "--scan-multiplier", "3", "--format", "json")
        assert status == 0
        doc = json.loads(out)
        assert doc["verdicts"][0]["scan"]["multiplier"] == 3


class TestScan:
    def test_small_bound_rows(self, capsys):
        status, out, _ = run_cli(capsys, "scan", "--upto", "7", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == [
            "prime", "case_id", "parity", "hypothesis_class",
            "predicted_count", "observed_count", "classification",
            "first_counterexample",
        ]
        primes = sorted({r[0] for r in rows[1:]})
        assert primes == ["5", "7"]
        # ordered by (p, case_id)
        keys = [(int(r[0]), r[1]) for r in rows[1:]]
        assert keys == sorted(keys)
        assert status == 2  # honest FAILS rows exist already at p=5

    def test_below_five_header_only(self, capsys):
        status, out, _ = run_cli(capsys, "scan", "--upto", "4", "--format", "csv")
        assert status == 0
        assert out.splitlines()[1:] == []

    def test_deterministic_bytes(self, capsys):
        _, out1, _ = run_cli(capsys, "scan", "--upto", "13", "--format", "csv")
        _, out2, _ = run_cli(capsys, "scan", "--upto", "13", "--format", "csv")
        assert out1 == out2

    def test_json_rows(self, capsys):
        status, out, _ = run_cli(capsys, "scan", "--upto", "7", "--format", "json")
        doc = json.loads(out)
        assert {row["prime"] for row in doc["verdicts"]} == {5, 7}
        for row in doc["verdicts"]:
            assert row["classification"] in ("HOLDS", "HOLDS_VACUOUSLY", "FAILS")

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "report.csv"
        status = main(["scan", "--upto", "7", "--format", "csv", "--out", str(target)])
        capsys.readouterr()
        assert status == 2
        content = target.read_bytes()
        assert content.startswith(b"prime,case_id")
        assert b"\r" not in content


class TestParser:
    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as exc:
            main(["seq"])  # missing --upto
        assert exc.value.code == 1

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 1
