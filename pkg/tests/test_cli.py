"""Command-line interface: reports, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from liemetab.cli import EXIT_BUDGET, EXIT_DISAGREEMENT, EXIT_INPUT, EXIT_OK, main
from liemetab.groupfile import write_group
from liemetab.catalog import catalog_group


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestClassify:
    def test_q8(self, capsys):
        code, out = run(capsys, "classify", "--name", "Q8")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["schema"] == 1
        t1 = doc["theorem1"]
        assert (t1["c1"], t1["c2"], t1["c3"], t1["c4"]) == (False, False, True, True)
        assert t1["verdict"] is True
        assert doc["hamiltonian_2group"] is True

    def test_c2_trivially_true(self, capsys):
        code, out = run(capsys, "classify", "--name", "C2")
        doc = json.loads(out)
        assert doc["theorem1"]["c1"] and doc["theorem1"]["verdict"]

    def test_from_file(self, capsys, tmp_path):
        path = tmp_path / "s4.group"
        write_group(catalog_group("S4"), path)
        code, out = run(capsys, "classify", "--file", str(path))
        doc = json.loads(out)
        assert code == EXIT_OK
        t1 = doc["theorem1"]
        assert not any((t1["c1"], t1["c2"], t1["c3"], t1["c4"]))

    def test_requires_exactly_one_source(self, capsys):
        code, _ = run(capsys, "classify", "--name", "Q8", "--file", "x.group")
        assert code == EXIT_INPUT
        code, _ = run(capsys, "classify")
        assert code == EXIT_INPUT

    def test_unknown_name(self, capsys):
        code, _ = run(capsys, "classify", "--name", "nope")
        assert code == EXIT_INPUT

    def test_bad_file(self, capsys, tmp_path):
        path = tmp_path / "bad.group"
        path.write_text("{not json")
        code, _ = run(capsys, "classify", "--file", str(path))
        assert code == EXIT_INPUT


class TestBrute:
    def test_d8_lie_metabelian(self, capsys):
        code, out = run(capsys, "brute", "--name", "D8")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["brute"]["lie_metabelian"] is True
        assert doc["brute"]["check_commutative"] is True

    def test_sd16_reports_witness(self, capsys):
        code, out = run(capsys, "brute", "--name", "SD16")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["brute"]["lie_metabelian"] is False
        assert len(doc["brute"]["witness"]) == 4

    def test_elementary_abelian_no_brackets(self, capsys):
        code, out = run(capsys, "brute", "--name", "C2^3")
        doc = json.loads(out)
        assert doc["brute"]["lie_metabelian"] is True
        assert doc["brute"]["bracket_count"] == 0

    def test_budget_exit_code(self, capsys):
        code, _ = run(capsys, "brute", "--name", "S4", "--budget", "8")
        assert code == EXIT_BUDGET


class TestValidate:
    def test_up_to_16_all_agree(self, capsys):
        code, out = run(capsys, "validate", "--max-order", "16")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["all_agree"] is True
        assert all(rep["agreement"] for rep in doc["reports"])

    def test_empty_catalog_exits_zero(self, capsys):
        code, out = run(capsys, "validate", "--max-order", "0")
        doc = json.loads(out)
        assert code == EXIT_OK and doc["reports"] == []

    def test_byte_identical_runs(self, capsys):
        _, out1 = run(capsys, "validate", "--max-order", "16", "--seed", "0")
        _, out2 = run(capsys, "validate", "--max-order", "16", "--seed", "0")
        assert out1 == out2


class TestAudit:
    def test_eq2_on_q8_passes(self, capsys):
        code, out = run(capsys, "audit", "--name", "Q8", "--identity", "eq2")
        doc = json.loads(out)
        assert code == EXIT_OK
        (entry,) = doc["audits"]
        assert entry["identity"] == "eq2+eq3" and entry["status"] == "passed"

    def test_eq2_on_d8_skipped(self, capsys):
        code, out = run(capsys, "audit", "--name", "D8", "--identity", "eq2")
        doc = json.loads(out)
        assert code == EXIT_OK
        (entry,) = doc["audits"]
        assert entry["status"] == "skipped"

    def test_expansions_on_s3(self, capsys):
        code, out = run(capsys, "audit", "--name", "S3", "--identity", "expansions")
        doc = json.loads(out)
        assert code == EXIT_OK
        statuses = {e["identity"]: e for e in doc["audits"]}
        assert statuses["expansions"]["status"] == "passed"
        assert statuses["expansions"]["tuples_checked"] >= 27
        assert statuses["involution-triple-expansion"]["status"] == "passed"

    def test_all_identities_on_q8(self, capsys):
        code, out = run(capsys, "audit", "--name", "Q8")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert {e["identity"] for e in doc["audits"]} == {
            "eq1", "expansions", "involution-triple-expansion", "eq2+eq3", "cond3", "lemmas",
        }
        assert all(e["status"] == "passed" for e in doc["audits"])

    def test_table_format(self, capsys):
        code, out = run(capsys, "--format", "table", "audit", "--name", "Q8")
        assert code == EXIT_OK
        assert "audit lemmas: passed" in out


class TestExportAndList:
    def test_export_round_trip(self, capsys, tmp_path):
        from liemetab.groupfile import load_group

        out_dir = tmp_path / "groups"
        code, out = run(capsys, "export", "--out", str(out_dir))
        doc = json.loads(out)
        assert code == EXIT_OK
        assert len(doc["files"]) >= 18
        for fname in doc["files"]:
            G = load_group(out_dir / fname)
            assert G.order >= 1

    def test_list(self, capsys):
        code, out = run(capsys, "list", "--max-order", "8")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert any(row["name"] == "Q8" for row in doc["groups"])


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "liemetab.cli", "classify", "--name", "Q8"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["group"] == "Q8"
