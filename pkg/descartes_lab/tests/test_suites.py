import pytest

from descartes_lab.prop3.fixtures import all_cases
from descartes_lab.reports.suites import (
    SUITES,
    run_inequalities,
    run_lemmas,
    run_prop3,
    run_suite,
    run_thm2_sweep,
    thm2_triples,
)


def test_lemma_suite_passes():
    report = run_lemmas()

    assert report.passed, report.failures
    assert report.total == 6


def test_prop3_suite_covers_every_case():
    report = run_prop3(threads=4)

    assert report.total == len(all_cases())
    assert report.passed, report.failures


def test_inequality_battery_is_seeded():
    first = run_inequalities(seed=5, trials=700)
    second = run_inequalities(seed=5, trials=700)

    assert first.passed, first.failures
    assert first.to_dict() == second.to_dict()
    assert sum(r["passed"] for r in first.results) == 700


def test_sweep_triples_follow_positive_L():
    triples = thm2_triples(8)

    assert (5, 1, 3) in triples
    assert (9, 3, 4) not in thm2_triples(9)


def test_small_sweep_passes():
    report = run_thm2_sweep(max_degree=8, threads=2)

    assert report.passed, report.failures
    assert report.total == len(thm2_triples(8))


def test_unknown_suite_is_rejected():
    assert "lemmas" in SUITES
    with pytest.raises(ValueError):
        run_suite("everything")


def test_sweep_reaches_degree_thirty():
    report = run_thm2_sweep(max_degree=30, threads=4)

    assert report.total == len(thm2_triples(30))
    assert max(r["d"] for r in report.results) == 30
    assert report.passed, report.failures
