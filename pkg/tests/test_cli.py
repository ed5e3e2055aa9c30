"""Tests for the command-line interface: exit codes, output, determinism."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from qutrit_bloch.cli import main


def run_cli(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestEval:
    def test_defaults_are_maximally_mixed(self, capsys):
        code, out = run_cli(capsys, "eval", "--json")
        doc = json.loads(out)
        assert code == 0
        assert doc["invariants_block"]["physical"] is True
        assert doc["invariants_block"]["lhs1"] == 0
        assert doc["invariants_block"]["lhs2"] == 0

    def test_pure_state_fixture(self, capsys):
        code, out = run_cli(
            capsys, "eval", "--set", "x=0.70710678", "--set", "y=0.40824829", "--json"
        )
        doc = json.loads(out)
        assert code == 0
        assert doc["invariants_block"]["purity"] == pytest.approx(1.0, abs=1e-7)
        assert doc["bloch"]["u"]["length"] == pytest.approx(1.0, abs=1e-7)
        assert doc["bloch"]["v"]["squares"][0] == pytest.approx(-2 / 3, abs=1e-6)
        assert doc["bloch"]["v"]["negative_components"][0] is True

    def test_known_point_values(self, capsys):
        code, out = run_cli(capsys, "eval", "--set", "x=0.2", "--set", "y=0.3", "--json")
        doc = json.loads(out)
        assert doc["invariants_block"]["lhs1"] == pytest.approx(0.195, abs=1e-15)
        assert doc["invariants_block"]["lhs2"] == pytest.approx(0.5519318884724272, abs=1e-13)

    def test_unphysical_exit_code(self, capsys):
        code, out = run_cli(capsys, "eval", "--set", "x=0.9")
        assert code == 3
        assert "unphysical" in out

    def test_text_mode_mentions_vectors(self, capsys):
        code, out = run_cli(capsys, "eval", "--set", "y=0.1")
        assert code == 0
        for label in ("u:", "v:", "w:", "eigenvalues"):
            assert label in out

    def test_unknown_parameter_is_usage_error(self, capsys):
        assert run_cli(capsys, "eval", "--set", "zeta=1")[0] == 2

    def test_unparsable_value_is_usage_error(self, capsys):
        assert run_cli(capsys, "eval", "--set", "x=abc")[0] == 2

    def test_unknown_flag_is_usage_error(self):
        with pytest.raises(SystemExit) as err:
            main(["eval", "--bogus"])
        assert err.value.code == 2


class TestCheck:
    def test_physical(self, capsys):
        code, out = run_cli(capsys, "check", "--set", "x=0.1")
        assert code == 0 and out.strip() == "physical"

    def test_unphysical(self, capsys):
        code, out = run_cli(capsys, "check", "--set", "x=0.9")
        assert code == 3 and out.strip() == "unphysical"


class TestScan:
    def test_coarse_cluster_i(self, tmp_path, capsys):
        out_csv = tmp_path / "g.csv"
        code, _ = run_cli(
            capsys, "scan", "--cluster", "I", "--min", "-1", "--max", "1",
            "--step", "0.5", "--out", str(out_csv),
        )
        assert code == 0
        lines = out_csv.read_text().splitlines()
        assert len(lines) == 26  # header + 25 cells
        assert sum(1 for line in lines[1:] if float(line.split(",")[2]) <= 1.0) == 9

    def test_byte_identical_across_runs(self, tmp_path, capsys):
        args = ["scan", "--cluster", "III", "--sub", "(a,alpha2)", "--min", "-0.4",
                "--max", "0.4", "--step", "0.2"]
        f1, f2 = tmp_path / "a.csv", tmp_path / "b.csv"
        s1, s2 = tmp_path / "a.svg", tmp_path / "b.svg"
        assert main(args + ["--out", str(f1), "--svg", str(s1)]) == 0
        assert main(args + ["--out", str(f2), "--svg", str(s2)]) == 0
        capsys.readouterr()
        assert f1.read_bytes() == f2.read_bytes()
        assert s1.read_bytes() == s2.read_bytes()

    def test_sub_case_cell_value(self, tmp_path, capsys):
        out_csv = tmp_path / "iii.csv"
        code, _ = run_cli(
            capsys, "scan", "--cluster", "III", "--sub", "(a,alpha2)",
            "--min", "0.1", "--max", "0.2", "--step", "0.1", "--out", str(out_csv),
        )
        assert code == 0
        row = next(
            line for line in out_csv.read_text().splitlines()[1:]
            if float(line.split(",")[0]) == pytest.approx(0.1)
            and float(line.split(",")[1]) == pytest.approx(0.2)
        )
        assert float(row.split(",")[3]) == pytest.approx(0.396, abs=1e-12)

    def test_four_variable_scan_with_fix(self, tmp_path, capsys):
        out_csv = tmp_path / "q.csv"
        code, _ = run_cli(
            capsys, "scan", "--cluster", "Q", "--sub", "(a,b,alpha2,beta2)",
            "--min", "-0.2", "--max", "0.2", "--step", "0.2",
            "--fix", "p=0.05", "--fix", "q=0.05", "--out", str(out_csv),
        )
        assert code == 0
        assert len(out_csv.read_text().splitlines()) == 10

    def test_unknown_cluster_is_usage_error(self, tmp_path, capsys):
        code, _ = run_cli(
            capsys, "scan", "--cluster", "VIII", "--min", "0", "--max", "1",
            "--step", "0.5", "--out", str(tmp_path / "x.csv"),
        )
        assert code == 2


class TestSample:
    def test_pure_records(self, capsys):
        code, out = run_cli(
            capsys, "sample", "--method", "pure", "--seed", "7", "--count", "3", "--json"
        )
        doc = json.loads(out)
        assert code == 0 and len(doc["records"]) == 3
        for record in doc["records"]:
            assert record["scene"]["invariants_block"]["purity"] == pytest.approx(1.0, abs=1e-12)

    def test_rejection_records_physical(self, capsys):
        code, out = run_cli(
            capsys, "sample", "--method", "rejection", "--seed", "1", "--count", "100", "--json"
        )
        doc = json.loads(out)
        assert code == 0
        assert all(r["scene"]["invariants_block"]["physical"] for r in doc["records"])

    def test_repeat_is_byte_identical(self, capsys):
        args = ["sample", "--method", "hilbert_schmidt", "--seed", "3", "--count", "5", "--json"]
        _, out1 = run_cli(capsys, *args)
        _, out2 = run_cli(capsys, *args)
        assert out1 == out2

    def test_invalid_method_rejected(self):
        with pytest.raises(SystemExit) as err:
            main(["sample", "--method", "bures", "--seed", "1", "--count", "1"])
        assert err.value.code == 2


class TestCatalogAndErrata:
    def test_clusters_json(self, capsys):
        code, out = run_cli(capsys, "clusters", "--json")
        doc = json.loads(out)
        assert code == 0
        vi = next(c for c in doc["clusters"] if c["cluster_id"] == "VI")
        assert len(vi["sub_cases"]) == 11

    def test_clusters_text(self, capsys):
        code, out = run_cli(capsys, "clusters")
        assert code == 0 and "I: (x,y)" in out

    def test_errata_json(self, capsys):
        code, out = run_cli(capsys, "errata", "--json")
        doc = json.loads(out)
        assert code == 0
        assert sum(1 for e in doc["entries"] if e["verdict"] == "mismatch") == 5

    def test_errata_text(self, capsys):
        code, out = run_cli(capsys, "errata")
        assert code == 0
        assert "mismatch" in out and "note:" in out


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "qutrit_bloch.cli", "check", "--set", "x=0.9"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 3
        assert proc.stdout.strip() == "unphysical"

    def test_version_flag(self):
        proc = subprocess.run(
            [sys.executable, "-m", "qutrit_bloch.cli", "--version"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "qutrit-bloch" in proc.stdout
