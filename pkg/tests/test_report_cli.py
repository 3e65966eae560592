import json
import subprocess
import sys

import pytest

from hgw.cli import main
from hgw.dsl import build_group
from hgw.report import TableDocument, emit_enum_table, model_report, run_fixture_paper24


def test_markdown_rendering_alignment():
    doc = TableDocument("enum-table", [{"a": 1, "b": "xy"}, {"a": 22, "b": "z"}],
                        "md", ["a", "b"])
    text = doc.render()
    lines = text.splitlines()
    assert lines[0].startswith("| a") and len({len(l) for l in lines}) == 1


def test_csv_quoting():
    doc = TableDocument("enum-table",
                        [{"a": 'he said "hi", twice', "b": 3}], "csv", ["a", "b"])
    text = doc.render()
    assert '"he said ""hi"", twice"' in text


def test_json_round_trip():
    group = build_group("C6")
    doc = emit_enum_table(group, "json")
    parsed = json.loads(doc.render())
    assert parsed == doc.rows


def test_fixture_report_document():
    doc = run_fixture_paper24("json")
    rows = json.loads(doc.render())
    assert all(row["status"] == "pass" for row in rows)


def test_model_report_small():
    doc = model_report(11, 4, ("rank",), "json")
    rows = json.loads(doc.render())
    assert rows and all(r["status"] == "pass" for r in rows)


def test_byte_identical_rendering_across_runs_and_threads():
    group = build_group("C6")
    a = emit_enum_table(group, "md", threads=1).render()
    b = emit_enum_table(group, "md", threads=3).render()
    c = emit_enum_table(group, "md", threads=1).render()
    assert a == b == c


def test_cli_enum_json_in_process(tmp_path, capsys):
    out = tmp_path / "enum.json"
    code = main(["enum", "--group", "C6", "--json", "--out", str(out)])
    assert code == 0
    rows = json.loads(out.read_text())
    assert len(rows) == 3
    assert {r["N_class"] for r in rows} == {"C6", "D3"}
    assert all(set(r) == {"index", "N_class", "order", "provenance", "generator_cycles"}
               for r in rows)


def test_cli_correspond_csv_in_process(tmp_path):
    out = tmp_path / "rows.csv"
    code = main(["correspond", "--group", "D3", "--format", "csv", "--out", str(out)])
    assert code == 0
    text = out.read_text()
    assert text.splitlines()[0] == "count,N_class,P_class,J_class,J_normal,core_order,status"


def test_cli_correspond_json_schema(tmp_path):
    out = tmp_path / "rows.json"
    assert main(["correspond", "--group", "D3", "--json", "--out", str(out)]) == 0
    rows = json.loads(out.read_text())
    assert rows
    for row in rows:
        assert set(row) == {"count", "N_class", "P_class", "J_class",
                            "J_normal", "core_order"}


def test_cli_usage_errors():
    with pytest.raises(SystemExit) as err:
        main(["enum"])  # missing --group
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["enum", "--group", "NOPE"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["nonsense"])
    assert err.value.code == 2


def test_cli_verify_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "hgw.cli", "verify", "--fixture", "paper24"],
        capture_output=True, text=True, timeout=300)
    assert result.returncode == 0
    assert "fail" not in result.stdout


def test_cli_model_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "hgw.cli", "model", "--p", "11", "--n", "4",
         "--checks", "fix", "--json"],
        capture_output=True, text=True, timeout=300)
    assert result.returncode == 0
    rows = json.loads(result.stdout)
    assert rows and all(r["status"] == "pass" for r in rows)
