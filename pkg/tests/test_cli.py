import json

import pytest

from tribq.cli import main
from tribq.matrices import fast_seq
from tribq.quat import qnorm, seq_quaternion
from tribq.seqcore import sequence_value


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSeq:
    def test_table_reproduces_first_rows(self, capsys):
        code, out, _ = run(capsys, "seq", "T", "0", "13")
        assert code == 0
        values = [line.split()[-1] for line in out.splitlines()[2:]]
        assert values == [str(sequence_value("T", n)) for n in range(14)]

    def test_csv_single_row(self, capsys):
        code, out, _ = run(capsys, "seq", "K", "0", "0", "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["n,K", "0,3"]

    def test_negative_range(self, capsys):
        code, out, _ = run(capsys, "seq", "T", "-5", "-1", "--format", "csv")
        assert code == 0
        assert out.splitlines()[1:] == ["-5,2", "-4,0", "-3,-1", "-2,1", "-1,0"]

    def test_json_matches_module_values(self, capsys):
        code, out, _ = run(capsys, "seq", "S", "0", "5", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["version"] == 1
        assert [row["S"] for row in doc["rows"]] == ["0", "1", "2", "4", "8", "15"]

    def test_json_round_trips_canonically(self, capsys):
        code, out, _ = run(capsys, "seq", "T", "0", "9", "--format", "json")
        assert json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n" == out

    def test_empty_range_is_usage_error(self, capsys):
        code, _, err = run(capsys, "seq", "T", "5", "1")
        assert code == 2
        assert err

    def test_domain_violation_is_usage_error(self, capsys):
        code, _, err = run(capsys, "seq", "R", "-3", "3")
        assert code == 2
        assert "R" in err

    def test_bad_kind_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            run(capsys, "seq", "X", "0", "3")
        assert info.value.code == 2


class TestQuat:
    def test_display(self, capsys):
        code, out, _ = run(capsys, "quat", "Q", "5")
        assert code == 0
        assert "7 + 13 i + 24 j + 44 k" in out
        assert "2634" in out

    def test_lucas_at_zero(self, capsys):
        code, out, _ = run(capsys, "quat", "Qtilde", "0")
        assert code == 0
        assert "3 + 1 i + 3 j + 7 k" in out

    def test_negative_index(self, capsys):
        code, out, _ = run(capsys, "quat", "Q", "-1")
        assert code == 0
        assert "0 + 0 i + 1 j + 1 k" in out

    def test_json_matches_module(self, capsys):
        code, out, _ = run(capsys, "quat", "Q", "7", "--format", "json")
        doc = json.loads(out)
        q = seq_quaternion("Q", 7)
        row = doc["rows"][0]
        assert row["a0"] == str(q.a0) and row["a3"] == str(q.a3)
        assert row["norm"] == str(qnorm(q))

    def test_domain_error(self, capsys):
        code, _, err = run(capsys, "quat", "Utilde", "-1")
        assert code == 2
        assert "Utilde" in err


class TestAudit:
    def test_single_passing_identity(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code, out, _ = run(capsys, "audit", "--ids", "I1.2", "--out", str(out_path))
        assert code == 0
        assert "pass" in out
        doc = json.loads(out_path.read_text())
        assert doc["results"][0]["id"] == "I1.2"
        assert doc["results"][0]["status"] == "pass"

    def test_refuted_identity_exits_one(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code, out, _ = run(capsys, "audit", "--ids", "I6.3a", "--out", str(out_path))
        assert code == 1
        assert "fail" in out
        assert '{"n": 2}' in out

    def test_stable_runs_byte_identical(self, capsys, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        run(capsys, "audit", "--ids", "I1.1,I6.3a", "--max-n", "40",
            "--stable", "--out", str(a))
        run(capsys, "audit", "--ids", "I1.1,I6.3a", "--max-n", "40",
            "--stable", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_unknown_id_is_usage_error(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "audit", "--ids", "bogus", "--out", str(tmp_path / "r.json")
        )
        assert code == 2
        assert "bogus" in err

    def test_json_format_prints_report(self, capsys, tmp_path):
        out_path = tmp_path / "r.json"
        code, out, _ = run(
            capsys, "audit", "--ids", "I1.1", "--format", "json",
            "--stable", "--out", str(out_path),
        )
        assert code == 0
        assert json.loads(out) == json.loads(out_path.read_text())


class TestBinet:
    def test_match(self, capsys):
        code, out, _ = run(capsys, "binet", "T", "10", "--precision", "128")
        assert code == 0
        assert "MATCH" in out
        assert "149" in out

    def test_quaternion_match(self, capsys):
        code, out, _ = run(capsys, "binet", "Q", "-4")
        assert code == 0
        assert out.count("MATCH") >= 4

    def test_precision_too_low_is_math_error(self, capsys):
        code, _, err = run(capsys, "binet", "T", "400", "--precision", "64")
        assert code == 1
        assert "residue" in err

    def test_env_floor_applies(self, capsys, monkeypatch):
        monkeypatch.setenv("TRIBQ_PRECISION_BITS", "512")
        code, out, _ = run(capsys, "binet", "T", "3", "--format", "json")
        assert code == 0
        assert json.loads(out)["precision_bits"] == 512

    def test_env_ignored_when_explicit(self, capsys, monkeypatch):
        monkeypatch.setenv("TRIBQ_PRECISION_BITS", "512")
        code, out, _ = run(
            capsys, "binet", "T", "3", "--precision", "128", "--format", "json"
        )
        assert json.loads(out)["precision_bits"] == 128

    def test_bad_env_value(self, capsys, monkeypatch):
        monkeypatch.setenv("TRIBQ_PRECISION_BITS", "many")
        code, _, err = run(capsys, "binet", "T", "3")
        assert code == 2
        assert "TRIBQ_PRECISION_BITS" in err


class TestSeries:
    def test_tribonacci_coefficients(self, capsys):
        code, out, _ = run(capsys, "series", "f", "8", "--format", "csv")
        assert code == 0
        coeffs = [line.split(",")[1] for line in out.splitlines()[1:]]
        assert coeffs == ["0", "1", "1", "2", "4", "7", "13", "24"]

    def test_quaternion_coefficients(self, capsys):
        code, out, _ = run(capsys, "series", "G", "2")
        assert code == 0
        assert "0 + 1 i + 1 j + 2 k" in out

    def test_unknown_series(self, capsys):
        with pytest.raises(SystemExit):
            run(capsys, "series", "bogus", "4")


class TestMatrix:
    def test_det_equals_norm(self, capsys):
        code, out, _ = run(capsys, "matrix", "0")
        assert code == 0
        assert "det: 6+0i" in out
        assert "norm: 6" in out
        assert "det_equals_norm: yes" in out

    def test_entries(self, capsys):
        code, out, _ = run(capsys, "matrix", "0", "--format", "json")
        doc = json.loads(out)
        assert doc["rows"][0]["col0"] == "0+1i"
        assert doc["rows"][1]["col1"] == "0-1i"


class TestPow:
    def test_values(self, capsys):
        code, out, _ = run(capsys, "pow", "T", "13", "--format", "csv")
        assert code == 0
        assert out.splitlines()[1] == "T,13,927,3"

    def test_matches_module(self, capsys):
        code, out, _ = run(capsys, "pow", "K", "-20", "--format", "json")
        doc = json.loads(out)
        assert doc["rows"][0]["value"] == str(fast_seq("K", -20))


class TestOutputFile:
    def test_out_flag_writes_file(self, capsys, tmp_path):
        target = tmp_path / "seq.csv"
        code, out, _ = run(
            capsys, "seq", "T", "0", "3", "--format", "csv", "--out", str(target)
        )
        assert code == 0
        assert out == ""
        assert target.read_text().splitlines() == ["n,T", "0,0", "1,1", "2,1", "3,2"]
