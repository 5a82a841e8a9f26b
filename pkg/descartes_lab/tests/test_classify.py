from fractions import Fraction

import pytest

from descartes_lab.algebra.ratpoly import RatPoly, from_roots
from descartes_lab.criteria.classify import (
    Reason,
    Status,
    classify,
    decide_top_pair,
    nonrealizable_reasons,
)
from descartes_lab.reports.catalog import build_catalog
from descartes_lab.signs.patterns import AdmissiblePair, SignPattern, ThreeBlockPattern, enumerate_three_block
from descartes_lab.utils.errors import InadmissiblePairError
from descartes_lab.witness.base import Witness


def _classify(text: str, pos: int, neg: int, **kwargs):
    return classify(SignPattern.from_text(text), AdmissiblePair(pos, neg), **kwargs)


@pytest.mark.parametrize(
    "text, neg",
    [("S(3,4,3)", 7), ("S(2,4,4)", 7), ("S(4,4,2)", 7), ("S(2,4,5)", 8), ("S(5,4,2)", 8)],
)
def test_degree_nine_and_ten_facts(text, neg):
    result = _classify(text, 0, neg)

    assert result.status is Status.NONREALIZABLE
    assert result.reason is Reason.PROP3_FACT
    assert result.trace is not None
    assert result.trace.L_value <= 0


def test_smallest_nonrealizable_couple():
    result = _classify("S(1,3,1)", 0, 2)

    assert result.status is Status.NONREALIZABLE
    assert result.reason is Reason.PAPER_FACT


def test_n_equal_three_is_always_realizable():
    result = _classify("S(5,3,5)", 0, 10)

    assert result.status is Status.REALIZABLE
    assert result.reason is Reason.THM1_PART2


def test_realizable_couple_gets_a_certified_witness():
    result = _classify("S(2,4,6)", 0, 9, with_witness=True)

    assert result.status is Status.REALIZABLE
    assert result.reason is Reason.THM1_PART3
    assert result.witness is not None
    assert result.witness.verify()
    assert result.to_dict()["witness"] == result.witness.poly.to_text()


def test_kappa_criterion_fires_at_four():
    reasons = nonrealizable_reasons(ThreeBlockPattern(1, 4, 6))

    assert Reason.KAPPA_GE_4 in reasons
    assert Reason.THM1_PART4 in reasons


def test_lower_pairs_follow_by_downward_closure():
    result = _classify("S(2,4,6)", 0, 7)

    assert result.status is Status.REALIZABLE
    assert result.reason is Reason.DOWNWARD_CLOSURE


def test_trivial_families():
    assert _classify("+--+", 2, 1).reason is Reason.PROP1
    assert _classify("+---", 1, 0).reason is Reason.PROP1
    assert _classify("+++", 0, 0).reason is Reason.EXAMPLE_1


def test_duality_decides_through_p_of_minus_x():
    result = _classify("+-+-+", 0, 0)

    assert result.status is Status.REALIZABLE
    assert result.reason is Reason.DUALITY
    assert "+++++" in result.detail


def test_positive_roots_on_three_blocks_are_not_covered():
    result = _classify("S(2,3,2)", 2, 4)

    assert result.status is Status.REALIZABLE
    assert result.reason is Reason.PROP1

    result = _classify("S(2,4,2)", 2, 1)
    assert result.status is Status.UNKNOWN
    assert result.reason is Reason.NOT_COVERED


def test_search_fallback_never_marks_nonrealizable():
    calls = []

    def empty_search(sigma, ap):
        calls.append((sigma, ap))
        return None

    result = _classify("S(2,4,2)", 2, 1, search=empty_search)

    assert calls
    assert result.status is Status.UNKNOWN
    assert result.reason is Reason.ORACLE_EXHAUSTED


def test_search_fallback_records_found_witness():
    sigma = SignPattern.from_text("+--++")
    poly = from_roots([], [1, 2]) * RatPoly.from_coeffs([Fraction(6, 5), 2, 1])

    def fake_search(pattern, ap):
        return Witness(poly, pattern, ap, "search")

    result = classify(sigma, AdmissiblePair(2, 0), search=fake_search)

    assert result.status is Status.REALIZABLE
    assert result.reason is Reason.WITNESS_FOUND
    assert result.to_dict()["construction"] == "search"


def test_search_result_is_rechecked():
    sigma = SignPattern.from_text("+--++")

    def wrong_search(pattern, ap):
        return Witness(from_roots([], [1, 2, 3, 4]), pattern, ap, "search")

    result = classify(sigma, AdmissiblePair(2, 0), search=wrong_search)

    assert result.status is Status.UNKNOWN
    assert result.witness is None


def test_inadmissible_pair_raises():
    with pytest.raises(InadmissiblePairError):
        _classify("S(3,4,3)", 0, 6)


def test_top_pair_decision_for_unknown_region():
    status, reason = decide_top_pair(ThreeBlockPattern(3, 4, 3))

    assert status is Status.NONREALIZABLE
    assert reason is Reason.PROP3_FACT


def test_criteria_never_disagree_up_to_degree_forty():
    decided = 0
    for d in range(3, 41):
        for blocks in enumerate_three_block(d):
            status, _ = decide_top_pair(blocks)
            decided += status is not Status.UNKNOWN

    assert decided > 0


def test_realizable_couples_are_closed_downward():
    catalog = build_catalog(9, blocks_only=True)
    by_pattern: dict[str, dict[int, Status]] = {}
    for row in catalog.rows:
        if row.ap.pos == 0:
            by_pattern.setdefault(row.pattern.text, {})[row.ap.neg] = row.status

    checked = 0
    for statuses in by_pattern.values():
        for neg, status in statuses.items():
            if status is Status.REALIZABLE:
                checked += 1
                assert all(statuses[lower] is Status.REALIZABLE for lower in statuses if lower < neg)
    assert checked > 0
