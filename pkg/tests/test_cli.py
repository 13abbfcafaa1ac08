"""Tests for the command line front end"""
import json

from qcong.main import cli


def test_verify_wolstenholme(runner, tmp_path):
    output = tmp_path / "wolst.json"
    result = runner.invoke(
        cli, ["verify", "--statements", "WOLSTQ", "--primes", "3..19", "--format", "json", "--output", str(output)]
    )
    assert result.exit_code == 0
    data = json.loads(output.read_text())
    assert len(data["records"]) == 7
    assert data["summary"]["all_hold"]


def test_verify_table_to_stdout(runner):
    result = runner.invoke(cli, ["verify", "--statements", "L21A", "--primes", "5,7", "--no-oracle"])
    assert result.exit_code == 0
    assert "L21A" in result.output
    assert "holds" in result.output


def test_verify_mutate_exits_one(runner, tmp_path):
    output = tmp_path / "mutated.csv"
    result = runner.invoke(
        cli, ["verify", "--statements", "LEHMERQ", "--primes", "3..31", "--mutate", "--format", "csv",
              "--output", str(output)]
    )
    assert result.exit_code == 1
    rows = output.read_text().splitlines()[1:]
    assert len(rows) == 10
    assert all(",violated," in row for row in rows)


def test_verify_without_primes_is_usage_error(runner):
    result = runner.invoke(cli, ["verify", "--primes", "4..4"])
    assert result.exit_code == 2


def test_verify_bad_range_is_usage_error(runner):
    result = runner.invoke(cli, ["verify", "--primes", "7..3"])
    assert result.exit_code == 2


def test_verify_unknown_statement(runner):
    result = runner.invoke(cli, ["verify", "--statements", "NOPE", "--primes", "5"])
    assert result.exit_code == 2


def test_eval_qbinom(runner):
    result = runner.invoke(cli, ["eval", "qbinom", "4", "2", "1"])
    assert result.exit_code == 0
    assert result.output.strip() == "1 1 2 1 1"


def test_eval_qint_at_point(runner):
    result = runner.invoke(cli, ["eval", "qint", "3", "--at", "2"])
    assert result.output.strip() == "7"


def test_eval_qfermat(runner):
    assert runner.invoke(cli, ["eval", "qfermat", "3", "2"]).output.strip() == "0 1"
    assert runner.invoke(cli, ["eval", "qfermat", "3", "2", "--pretty"]).output.strip() == "q"
    assert runner.invoke(cli, ["eval", "qfermat", "5", "2", "--at", "1"]).output.strip() == "3"


def test_eval_domain_error(runner):
    result = runner.invoke(cli, ["eval", "qfermat", "3", "3"])
    assert result.exit_code == 2


def test_eval_qpoch(runner):
    result = runner.invoke(cli, ["eval", "qpoch", "--", "-1", "0", "1", "2"])
    assert result.exit_code == 0
    assert result.output.strip() == "2 2"


def test_report_round_trip(runner, tmp_path):
    source = tmp_path / "run.json"
    runner.invoke(cli, ["verify", "--statements", "FLTQ", "--primes", "5,7", "--format", "json",
                        "--output", str(source)])
    records = len(json.loads(source.read_text())["records"])

    csv_result = runner.invoke(cli, ["report", str(source), "--format", "csv"])
    assert csv_result.exit_code == 0
    assert len(csv_result.output.strip().splitlines()) == records + 1

    table_result = runner.invoke(cli, ["report", str(source)])
    assert table_result.exit_code == 0
    assert sum(line.startswith("FLTQ") for line in table_result.output.splitlines()) == records


def test_report_truncated_json(runner, tmp_path):
    source = tmp_path / "broken.json"
    source.write_text('{"version": 1, "config": {')
    result = runner.invoke(cli, ["report", str(source)])
    assert result.exit_code == 2


def test_catalog_lists_every_statement(runner):
    result = runner.invoke(cli, ["catalog"])
    assert result.exit_code == 0
    for statement_id in ("FLTQ", "GRANVILLEQ", "L54", "QBT", "SKULA"):
        assert statement_id in result.output


def test_verify_unwritable_output(runner, tmp_path):
    output = tmp_path / "missing_dir" / "out.json"
    result = runner.invoke(
        cli, ["verify", "--statements", "FLTQ", "--primes", "5", "--format", "json", "--output", str(output)]
    )
    assert result.exit_code == 2
    assert not output.exists()


def test_verify_zero_normalize_factor_is_usage_error(runner):
    result = runner.invoke(cli, ["verify", "--statements", "FLTQ", "--primes", "5", "--normalize-factor", "0"])
    assert result.exit_code == 2


def test_verify_l22_on_composites(runner):
    result = runner.invoke(cli, ["verify", "--statements", "L22", "--primes", "4..6", "--format", "csv"])
    assert result.exit_code == 0
    rows = result.output.strip().splitlines()[1:]
    assert len(rows) == 15
    assert all(",holds," in row for row in rows)
