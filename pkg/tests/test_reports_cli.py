import json

import pytest
from click.testing import CliRunner

from adichh import cli
from adichh.reports import (Table, emit, emit_json, emit_markdown, parse_json,
                            report_for)


def _sample_report():
    return report_for("torsion", {"ring": "QQ[x]"},
                      [Table("t", {"d=0": 1, "d=1": None})],
                      ["cell d=1 unstable"], "inconclusive", seed=7)


def test_json_roundtrip_byte_identical():
    r = _sample_report()
    text = emit_json(r)
    assert emit_json(parse_json(text)) == text


def test_markdown_renders_verdict_and_flags():
    md = emit_markdown(_sample_report())
    assert "? inconclusive" in md
    assert "| d=1 | - | unstable |" in md
    assert "cell d=1 unstable" in md


def test_pass_report_has_check_row():
    md = emit_markdown(report_for("padic", {}, [], [], "pass"))
    assert "✓ pass" in md


def test_emit_rejects_unknown_format():
    from adichh.reports import ReportError
    with pytest.raises(ReportError):
        emit(_sample_report(), "yaml")


def test_invalid_verdict_rejected():
    from adichh.reports import ReportError
    with pytest.raises(ReportError):
        report_for("gb", {}, [], [], "maybe")


# -- CLI --------------------------------------------------------------------

def _write_job(tmp_path, job):
    p = tmp_path / "job.json"
    p.write_text(json.dumps(job))
    return str(p)


def test_cli_torsion_job(tmp_path):
    job = {"command": "torsion", "field": "QQ",
           "ring": {"variables": ["x"]}, "a": ["x"],
           "module": {"twists": [0], "relations": [["x^2"]]},
           "parameters": {"degrees": [0, 3]}}
    res = CliRunner().invoke(cli.main, ["torsion", "--job",
                                        _write_job(tmp_path, job)])
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert out["verdict"] == "pass"
    assert out["extra"]["exponent"] == 2
    assert out["tables"][0]["cells"] == {"d=0": 1, "d=1": 1, "d=2": 0,
                                         "d=3": 0}


def test_cli_gb_job(tmp_path):
    job = {"field": "QQ", "ring": {"variables": ["x"]},
           "generators": ["x^2-1", "x^3-1"]}
    res = CliRunner().invoke(cli.main, ["gb", "--job",
                                        _write_job(tmp_path, job)])
    assert res.exit_code == 0
    assert json.loads(res.output)["extra"]["basis"] == ["x - 1"]


def test_cli_nonprime_field_is_input_error(tmp_path):
    job = {"field": "Fp(4)", "ring": {"variables": ["x"]}, "a": ["x"],
           "module": {"twists": [0]}}
    res = CliRunner().invoke(cli.main, ["torsion", "--job",
                                        _write_job(tmp_path, job)])
    assert res.exit_code == 1
    assert "p must be prime" in res.output


def test_cli_schema_violation_has_pointer(tmp_path):
    job = {"ring": {"variables": ["x"]}, "a": ["x"],
           "module": {"twists": [0]}, "parameters": {"N": 99}}
    res = CliRunner().invoke(cli.main, ["complete", "--job",
                                        _write_job(tmp_path, job)])
    assert res.exit_code == 1
    assert "/parameters/N" in res.output


def test_cli_too_many_variables(tmp_path):
    job = {"ring": {"variables": ["a", "b", "c", "d", "e"]}, "a": ["a"],
           "module": {"twists": [0]}}
    res = CliRunner().invoke(cli.main, ["torsion", "--job",
                                        _write_job(tmp_path, job)])
    assert res.exit_code == 1


def test_cli_verify_padic_exit_zero():
    res = CliRunner().invoke(cli.main, ["verify", "padic"])
    assert res.exit_code == 0
    assert json.loads(res.output)["verdict"] == "pass"


def test_cli_verify_wpr_markdown():
    res = CliRunner().invoke(cli.main, ["--format", "markdown", "verify",
                                        "wpr-example", "-J", "4"])
    assert res.exit_code == 0
    assert "✓ pass" in res.output


def test_cli_verify_main_theorem_single_case(tmp_path):
    job = {"field": "QQ", "a": ["x"], "module": "free",
           "parameters": {"n_vars": 1, "i": 1, "N": 6}}
    res = CliRunner().invoke(cli.main, ["verify", "main-theorem", "--job",
                                        _write_job(tmp_path, job)])
    assert res.exit_code == 0
    assert json.loads(res.output)["verdict"] == "pass"


def test_cli_batch_jobs(tmp_path):
    sub = {"command": "complete", "field": "QQ",
           "ring": {"variables": ["x"]}, "a": ["x"],
           "module": {"twists": [0]},
           "parameters": {"N": 2, "degrees": [0, 3]}}
    job = {"jobs": [sub, sub]}
    res = CliRunner().invoke(cli.main, ["--workers", "2", "complete", "--job",
                                        _write_job(tmp_path, job)])
    assert res.exit_code == 0
    assert res.output.count('"check_id": "complete"') == 2


def test_cli_hochschild_completed(tmp_path):
    job = {"field": "QQ", "module": "diagonal",
           "parameters": {"n_vars": 1, "i": 1, "N": 4}}
    res = CliRunner().invoke(cli.main, ["hochschild", "--job",
                                        _write_job(tmp_path, job)])
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert out["verdict"] == "pass"
    cells = out["tables"][1]["cells"]
    assert cells == {"d=-1": 1, "d=0": 1, "d=1": 1, "d=2": 1}
