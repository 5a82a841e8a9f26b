import json
from pathlib import Path

import pytest

from descartes_lab.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from descartes_lab.utils.settings import get_settings


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def test_classify_prints_the_classification(capsys):
    code = main(["classify", "-d", "9", "-s", "S(3,4,3)", "-a", "0,7"])
    payload = json.loads(capsys.readouterr().out)

    assert code == EXIT_OK
    assert payload["status"] == "NonRealizable"
    assert payload["trace"]["L"] == "0/1"
    assert payload["schema"] == "descartes-lab/1"


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "-d", "9", "-s", "S(3,4,3)", "-a", "0,6"],
        ["classify", "-d", "5", "-s", "S(3,4,3)", "-a", "0,7"],
        ["classify", "-d", "3", "-s", "+x-+", "-a", "0,1"],
        ["catalog", "--format", "csv"],
        ["catalog", "-d", "99"],
    ],
)
def test_usage_errors_exit_with_two(argv, capsys):
    assert main(argv) == EXIT_USAGE
    assert capsys.readouterr().err


def test_missing_arguments_are_argparse_errors():
    with pytest.raises(SystemExit) as excinfo:
        main(["classify", "-d", "3"])
    assert excinfo.value.code == 2


def test_witness_command(capsys):
    assert main(["witness", "-d", "2", "-s", "+-+", "-a", "0,0"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["coeffs"] == "2/1,-2/1,1/1"

    assert main(["witness", "-d", "9", "-s", "S(3,4,3)", "-a", "0,7"]) == EXIT_FAILED


def test_catalog_csv_to_stdout(capsys):
    assert main(["catalog", "-d", "2", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()

    assert lines[0].startswith("degree,pattern,blocks,pos,neg,status")
    assert len(lines) == 7


def test_catalog_round_trip_through_reverify(tmp_path: Path):
    out = tmp_path / "d3.json"

    assert main(["catalog", "-d", "3", "--witness", "--out", str(out)]) == EXIT_OK
    assert main(["catalog", "--reverify", str(out)]) == EXIT_OK

    payload = json.loads(out.read_text(encoding="utf-8"))
    row = next(r for r in payload["rows"] if "witness" in r)
    row["witness"] = "1/1,-1/1,1/1,-1/1"
    out.write_text(json.dumps(payload), encoding="utf-8")

    assert main(["catalog", "--reverify", str(out)]) == EXIT_FAILED
    assert main(["catalog", "--reverify", str(tmp_path / "absent.json")]) == EXIT_FAILED


def test_verify_lemmas(capsys):
    assert main(["verify", "lemmas"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["passed"] is True


def test_invalid_environment_is_a_usage_error(monkeypatch, capsys):
    monkeypatch.setenv("DESCARTES_LAB_THREADS", "0")

    assert main(["verify", "lemmas"]) == EXIT_USAGE
    assert "Invalid configuration" in capsys.readouterr().err
