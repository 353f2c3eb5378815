import json

import pytest
from click.testing import CliRunner

from cyclomackey import cli


def run(*args):
    return CliRunner().invoke(cli.main, list(args))


def test_help_lists_commands():
    res = run("--help")
    assert res.exit_code == 0
    for name in cli.COMMANDS:
        assert name in res.output


def test_double_cosets_json():
    res = run("double-cosets", "--n", "2", "--r", "2", "--a", "1:[1]", "--b", "1:[1]")
    assert res.exit_code == 0, res.output
    data = json.loads(res.output)
    assert data["schema"] == "cyclomackey.report/1"
    assert data["summary"]["failed"] == 0
    reps = data["data"][0]["representatives"]
    assert len(reps) >= 1 and {"u", "psi"} <= set(reps[0])


def test_reports_are_byte_identical():
    a = run("all", "--n", "2", "--r", "2")
    b = run("all", "--n", "2", "--r", "2")
    assert a.exit_code == 0
    assert a.output == b.output


def test_text_format_and_out(tmp_path):
    out = tmp_path / "r.txt"
    res = run("cosets", "--n", "2", "--r", "3", "--format", "text", "--out", str(out))
    assert res.exit_code == 0
    text = out.read_text()
    assert text.startswith("# cosets") and "PASS" in text


@pytest.mark.parametrize("cmd", sorted(cli.COMMANDS))
def test_every_command_small(cmd):
    res = run(cmd, "--n", "2", "--r", "2", "--spec", "3,5,7")
    assert res.exit_code == 0, res.output


@pytest.mark.parametrize("args", [
    ("cosets", "--n", "0"),
    ("cosets", "--n", "2", "--a", "bogus"),
    ("cosets", "--n", "2", "--a", "1:[2]"),
    ("verify-hecke", "--n", "2", "--r", "2", "--spec", "3,5"),
    ("verify-hecke", "--n", "2", "--r", "2", "--spec", "0,5,7"),
    ("nope",),
])
def test_usage_errors(args):
    assert run(*args).exit_code == 2


def test_cap_exit_code():
    res = run("verify-braid", "--n", "3", "--r", "2", "--cap", "2")
    assert res.exit_code == 3
    assert json.loads(res.output)["summary"]["capped"] > 0


def test_failure_exit_code(monkeypatch):
    from cyclomackey.checks import Check

    def broken(cfg):
        return cli.Report("verify-group", cfg, [Check("x", "y", "z", "fail", "")])

    monkeypatch.setitem(cli.COMMANDS, "verify-group", broken)
    assert run("verify-group", "--n", "2").exit_code == 1
    cfg = cli.RunConfig(2, 2)
    code, _ = cli.run_command("verify-group", cfg)
    assert code == 1
