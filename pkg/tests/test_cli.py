"""Command-line front end: exit codes, report schema, output formats."""
import csv
import io
import json

import pytest

from absorb.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_holds_exit_0(capsys):
    code, out, _ = run_cli(
        capsys, "check", "--module", "cyc(Zn(12),12)", "--sub", "gen[6]",
        "--prop", "gsdf", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["holds"] is True
    assert doc["command"] == "check"
    assert doc["witness"] is None
    assert "elapsed_ms" in doc and "tool_version" in doc


def test_check_fails_exit_1_with_witness(capsys):
    code, out, _ = run_cli(
        capsys, "check", "--module", "cyc(Zn(8),8)", "--sub", "zero",
        "--prop", "sdf", "--format", "json",
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["holds"] is False
    w = doc["witness"]
    assert (w["u"], w["v"], w["x"]) == (3, 1, 1)
    assert w["rendered"]


def test_check_full_submodule_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "check", "--module", "self(Zn(12))", "--sub", "full", "--prop", "gsdf"
    )
    assert code == 2
    assert "error" in err


def test_check_bad_spec_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "check", "--module", "cyc(Zn(12),5)", "--sub", "zero", "--prop", "gsdf"
    )
    assert code == 2
    assert "error" in err
    code, _, err = run_cli(
        capsys, "check", "--module", "self(Zn(12)", "--sub", "zero", "--prop", "gsdf"
    )
    assert code == 2


def test_check_usage_error_exit_2(capsys):
    code, _, _ = run_cli(capsys, "check", "--sub", "full")
    assert code == 2  # missing --prop (argparse usage error)


def test_variant_nonzero_only_for_sdfprimary(capsys):
    code, _, err = run_cli(
        capsys, "check", "--ring", "Zn(12)", "--sub", "gen[4]",
        "--prop", "gsdf", "--variant-nonzero",
    )
    assert code == 2
    code, out, _ = run_cli(
        capsys, "check", "--ring", "Zn(12)", "--sub", "gen[4]",
        "--prop", "sdfprimary", "--variant-nonzero", "--format", "json",
    )
    assert code in (0, 1)
    assert json.loads(out)["property"] == "sdfprimary"


def test_enumerate_z12_gsdf_column(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--ring", "Zn(12)", "--props", "gsdf", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    rows = {row[0]: row[2] for row in doc["table"]["rows"]}
    assert rows == {"<0>": False, "<6>": True, "<4>": True, "<3>": True, "<2>": True}


def test_enumerate_z7(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--ring", "Zn(7)", "--props", "gsdf", "--format", "json"
    )
    doc = json.loads(out)
    assert doc["count"] == 1
    assert doc["table"]["rows"][0][2] is True


def test_enumerate_no_filters_bare_lattice(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--ring", "Zn(12)", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["table"]["columns"] == ["submodule", "order"]
    orders = [row[1] for row in doc["table"]["rows"]]
    assert orders == sorted(orders)  # inclusion-compatible ordering by size


def test_verify_pass_exit_0(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "unit2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["suite"] == "unit2" and doc["holds"] is True and doc["violations"] == []


def test_verify_unknown_suite_exit_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "unknown-suite")
    assert code == 2


def test_classify_csv(capsys):
    code, out, _ = run_cli(capsys, "classify", "--max", "24", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "factorization", "gsdf", "predicted", "match"]
    assert len(rows) == 24  # header + n = 2..24
    assert rows[1][:2] == ["2", "2"]
    by_n = {r[0]: r for r in rows[1:]}
    assert by_n["12"][2] == "False" and by_n["12"][4] == "True"
    assert by_n["21"][1] == "3*7"


def test_classify_json_schema(capsys):
    code, out, _ = run_cli(capsys, "classify", "--max", "10", "--format", "json")
    doc = json.loads(out)
    assert doc["command"] == "classify" and doc["mismatches"] == 0
    assert len(doc["table"]["rows"]) == 9


def test_classify_bad_max_exit_2(capsys):
    code, _, _ = run_cli(capsys, "classify", "--max", "1")
    assert code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "check", "--ring", "Zn(12)", "--sub", "gen[6]", "--prop", "gsdf",
        "--format", "json", "--out", str(target),
    )
    assert code == 0 and out == ""
    doc = json.loads(target.read_text())
    assert doc["holds"] is True


def test_json_is_stable_across_runs(capsys):
    def once():
        _, out, _ = run_cli(
            capsys, "check", "--ring", "Zn(12)", "--sub", "gen[6]", "--prop",
            "gsdf", "--format", "json",
        )
        doc = json.loads(out)
        doc.pop("elapsed_ms")
        return doc

    assert once() == once()
