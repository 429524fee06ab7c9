import csv
import io
import json

import pytest

from csfkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_worked_example_text(self, capsys):
        code, out, _ = run_cli(capsys, "compute", "--hess", "2,3,3", "--basis", "s")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "t*s[2,1] + (1+2t+t^2)*s[1,1,1]"
        assert "graded multiplicities (shift 1):" in out
        assert "  [2,1]: t^2" in lines
        assert "  [1,1,1]: t+2t^2+t^3" in lines

    def test_invalid_input_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "compute", "--hess", "3,2,3")
        assert code == 2
        assert "NotWeaklyIncreasing" in err

    def test_graph_flag_equivalence(self, capsys):
        _, by_hess, _ = run_cli(capsys, "compute", "--hess", "2,3,3")
        _, by_dyck, _ = run_cli(capsys, "compute", "--dyck", "1,1,0")
        _, by_ideal, _ = run_cli(
            capsys, "compute", "--ideal", "{(1,3)}", "--n", "3"
        )
        assert by_hess == by_dyck == by_ideal

    def test_requires_exactly_one_graph_flag(self, capsys):
        code, _, err = run_cli(capsys, "compute")
        assert code == 2
        code, _, err = run_cli(
            capsys, "compute", "--hess", "2,3,3", "--dyck", "1,1,0"
        )
        assert code == 2

    def test_json_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "--hess", "2,3,3", "--output", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["version"] == "compute-v1"
        assert data["value"]["version"] == "symfunc-v1"
        assert data["value"]["terms"][0] == {"partition": [2, 1], "coeff": [[2, 1]]}
        assert data["graded_multiplicities"]["shift"] == 1

    def test_deterministic(self, capsys):
        _, first, _ = run_cli(capsys, "compute", "--hess", "2,3,4,4", "--basis", "e")
        _, second, _ = run_cli(capsys, "compute", "--hess", "2,3,4,4", "--basis", "e")
        assert first == second


class TestFormula:
    def test_text(self, capsys):
        code, out, _ = run_cli(capsys, "formula", "--hess", "2,3,3")
        assert code == 0
        assert "word tuples: 12" in out
        assert "6  delta=0 lambda0=1 eps=1,1,1" in out
        assert "1  delta=-1 lambda0=1 eps=2,1,0" in out
        assert "as monomial symmetric function: m[2,1] + 6*m[1,1,1]" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "formula", "--hess", "2,3,3", "--output", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["version"] == "weightsum-v1"
        assert data["term_tuples"] == 12
        assert {"eps": [1, 1, 1], "count": 6} in data["projection"]
        assert all(term["lambda0"] == 1 for term in data["terms"])


class TestVerify:
    def test_n3_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n", "3")
        assert code == 0
        assert "failed=0" in out.replace("   ", " ")

    def test_json_report(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n", "3", "--output", "json")
        assert code == 0
        data = json.loads(out)
        assert data["version"] == "verify-v1"
        assert all(rec["status"] == "pass" for rec in data["results"])

    def test_csv_summary(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n", "3", "--output", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert {row["suite"] for row in rows} >= {"formula", "euler", "complete"}
        assert all(row["failed"] == "0" for row in rows)

    def test_single_suite(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--n", "4", "--suite", "modular", "--output", "csv"
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [row["suite"] for row in rows] == ["modular"]
        assert rows[0]["total"] == "2"

    def test_cache_cold_vs_warm(self, tmp_path, capsys, monkeypatch):
        monkeypatch.delenv("CSF_CACHE_DIR", raising=False)
        cache_dir = str(tmp_path / "cache")
        args = ["verify", "--n", "3", "--output", "json", "--cache-dir", cache_dir]
        code, cold, _ = run_cli(capsys, *args)
        assert code == 0
        assert (tmp_path / "cache" / "kostka.json").exists()
        assert (tmp_path / "cache" / "verify-n3.json").exists()
        code, warm, _ = run_cli(capsys, *args)
        assert code == 0
        assert cold == warm

    def test_cache_dir_from_env(self, tmp_path, capsys, monkeypatch):
        cache_dir = tmp_path / "envcache"
        monkeypatch.setenv("CSF_CACHE_DIR", str(cache_dir))
        code, _, _ = run_cli(capsys, "verify", "--n", "2")
        assert code == 0
        assert (cache_dir / "kostka.json").exists()


class TestEnumerate:
    def test_n4_csv(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--n", "4", "--output", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 14
        assert rows[0]["h"] == "1,2,3,4"
        assert rows[0]["euler_char"] == "256"  # empty graph: 4^4
        assert rows[-1]["h"] == "4,4,4,4"
        assert rows[-1]["euler_char"] == "24"  # complete graph: 4!
        for row in rows:
            assert int(row["edge_count"]) + int(row["ideal_size"]) == 6

    def test_text_total(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--n", "3")
        assert code == 0
        assert "total: 5" in out


class TestBench:
    def test_csv_well_formed(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--n", "3")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 5
        for row in rows:
            assert row["oracle_terms"] == "27"
            assert int(row["formula_terms"]) >= 1
            assert float(row["formula_seconds"]) >= 0
            assert float(row["oracle_seconds"]) >= 0

    def test_both_kernels(self, capsys):
        from csfkit import kernel

        code, out, _ = run_cli(capsys, "bench", "--n", "3", "--kernel", "both")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        kernels = {row["kernel"] for row in rows}
        assert kernels == set(kernel.available_backends())

    def test_out_file(self, tmp_path, capsys):
        path = str(tmp_path / "bench.csv")
        code, out, _ = run_cli(capsys, "bench", "--n", "2", "--out", path)
        assert code == 0
        with open(path) as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 2


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
