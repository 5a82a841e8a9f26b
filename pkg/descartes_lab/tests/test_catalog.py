import json
from pathlib import Path

import pytest

from descartes_lab.criteria.classify import Status
from descartes_lab.reports.catalog import CSV_COLUMNS, build_catalog, reverify_rows, write_catalog


def test_degree_two_catalog_is_fully_decided():
    catalog = build_catalog(2)

    assert len(catalog.rows) == 6
    assert all(row.status is not Status.UNKNOWN for row in catalog.rows)
    assert [(row.pattern.text, row.ap.as_list()) for row in catalog.rows][:2] == [
        ("+++", [0, 0]),
        ("+++", [0, 2]),
    ]
    assert catalog.counts() == {"Realizable": 6}


def test_degree_four_has_the_smallest_nonrealizable_couple():
    rows = {(row.pattern.text, row.ap.pos, row.ap.neg): row for row in build_catalog(4).rows}

    assert rows[("+---+", 0, 2)].status is Status.NONREALIZABLE


def test_degree_nine_three_block_catalog():
    catalog = build_catalog(9, blocks_only=True)
    top = {row.to_dict()["blocks"]: row for row in catalog.rows if row.ap.as_list() == [0, 7]}

    assert len(top) == 36
    for name in ("S(3,4,3)", "S(2,4,4)", "S(4,4,2)"):
        assert top[name].status is Status.NONREALIZABLE
    assert top["S(3,4,3)"].to_dict()["trace"]["eqE"] is False


def test_csv_rendering_and_unknown_format():
    catalog = build_catalog(2)
    lines = catalog.render("csv").splitlines()

    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 7
    with pytest.raises(ValueError):
        catalog.render("yaml")


def test_catalog_is_deterministic_across_threads():
    serial = build_catalog(4, threads=1).to_json()
    threaded = build_catalog(4, threads=4).to_json()

    assert serial == threaded


def test_written_witnesses_reverify(tmp_path: Path):
    path = write_catalog(build_catalog(3, with_witness=True), tmp_path / "d3.json")
    payload = json.loads(path.read_text(encoding="utf-8"))

    assert all("witness" in row for row in payload["rows"] if row["status"] == "Realizable")
    assert reverify_rows(payload) == []

    tampered = next(row for row in payload["rows"] if row["pattern"] == "+--+")
    tampered["witness"] = "1/1,1/1,1/1,1/1"
    failures = reverify_rows(payload)
    assert len(failures) == 1
    assert failures[0].startswith("+--+ ")
