"""CLI tests; the client dispatches to the in-process service."""

import json

from click.testing import CliRunner

from unicas.cli import main

runner = CliRunner()


def test_tables_text():
    result = runner.invoke(main, ["tables", "1"])
    assert result.exit_code == 0
    assert "E8" in result.output
    assert "-2     12    20       30" in result.output


def test_tables_csv():
    result = runner.invoke(main, ["tables", "6", "--format", "csv"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0].startswith("algebra,diagram,profile")
    assert lines[1] == 'so(2n),"[2,1,1]","A=[1,3];B=[1,2]",16*n - 16,8*n - 8'


def test_tables_json():
    result = runner.invoke(main, ["tables", "2", "--format", "json"])
    assert result.exit_code == 0
    body = json.loads(result.output)
    assert body["table_id"] == 2


def test_tables_usage_error():
    result = runner.invoke(main, ["tables", "7"])
    assert result.exit_code == 2


def test_casimir_kn():
    result = runner.invoke(main, ["casimir", "so(10)", "--kn", "1,0"])
    assert result.exit_code == 0
    assert "casimir_ck: 32" in result.output


def test_casimir_diagram():
    result = runner.invoke(main, ["casimir", "sp(6)", "--diagram", "[3,1]"])
    assert result.exit_code == 0
    assert "casimir_ck: 16" in result.output
    assert "casimir_fundamental_trace: 64" in result.output


def test_casimir_rejects_bad_algebra():
    result = runner.invoke(main, ["casimir", "H9", "--kn", "1,0"])
    assert result.exit_code == 2


def test_casimir_needs_an_input():
    result = runner.invoke(main, ["casimir", "A3"])
    assert result.exit_code == 2


def test_dims_point():
    result = runner.invoke(main, ["dims", "--point", "-2,2,3"])
    assert result.exit_code == 0
    assert "beta: 0" in result.output  # the zero-dimensional summand
    assert "s2_trace_residual: 0" in result.output


def test_verify_passes_and_prints_summary():
    result = runner.invoke(main, ["verify", "casimir", "--scope", "G2,F4"])
    assert result.exit_code == 0
    assert "4 pass, 0 fail, 0 skipped" in result.output


def test_verify_json_deterministic():
    args = ["verify", "duality", "--profiles", "10", "--seed", "3", "--format", "json"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == second.exit_code == 0
    assert first.output == second.output


def test_verify_text_lines_are_json():
    result = runner.invoke(main, ["verify", "casimir", "--scope", "E6"])
    lines = result.output.strip().splitlines()
    assert lines[-1].startswith("==")
    for line in lines[:-1]:
        record = json.loads(line)
        assert record["status"] == "pass"


def test_duality_series_cli():
    result = runner.invoke(main, ["duality", "--diagram", "[2,2]", "--order", "5"])
    assert result.exit_code == 0
    assert "all_zero: True" in result.output


def test_duality_nonrectangular_needs_flag():
    result = runner.invoke(main, ["duality", "--diagram", "[2,1]"])
    assert result.exit_code == 2
    result = runner.invoke(main, ["duality", "--diagram", "[2,1]", "--experimental"])
    assert result.exit_code == 0


def test_series_cli():
    result = runner.invoke(
        main, ["series", "so", "--diagram", "[2,1,1]", "--order", "4", "--format", "json"]
    )
    assert result.exit_code == 0
    body = json.loads(result.output)
    assert body["c2_series"] == "16*n - 16"
    assert body["c2_closed"] == "16*n - 16"


def test_series_requires_diagram():
    result = runner.invoke(main, ["series", "so"])
    assert result.exit_code == 2


def test_unknown_suite_is_usage_error():
    result = runner.invoke(main, ["verify", "everything"])
    assert result.exit_code == 2
