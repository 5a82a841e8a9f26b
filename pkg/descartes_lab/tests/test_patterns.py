import pytest

from descartes_lab.algebra.ratpoly import RatPoly
from descartes_lab.signs.patterns import (
    AdmissiblePair,
    SignPattern,
    ThreeBlockPattern,
    admissible_pairs,
    enumerate_patterns,
    enumerate_three_block,
    is_admissible,
    parse_pattern,
    pattern_of,
    require_admissible,
)
from descartes_lab.utils.errors import InadmissiblePairError, NotASignPatternError, RejectedInputError


def test_three_block_shorthand_expands():
    sigma = SignPattern.from_text("S(3,4,3)")

    assert sigma.text == "+++----+++"
    assert sigma.degree == 9
    assert sigma.three_block() == ThreeBlockPattern(3, 4, 3)


def test_changes_and_preservations():
    assert SignPattern.from_text("+--+").changes_preservations() == (2, 1)
    assert SignPattern.from_text("++++").changes_preservations() == (0, 3)


def test_admissible_pairs_follow_descartes_parity():
    assert admissible_pairs(SignPattern.from_text("+-+")) == [AdmissiblePair(2, 0), AdmissiblePair(0, 0)]
    assert admissible_pairs(SignPattern.from_text("++-")) == [AdmissiblePair(1, 1)]
    assert not is_admissible(SignPattern.from_text("+-+"), AdmissiblePair(1, 0))


def test_inadmissible_pair_is_rejected():
    with pytest.raises(InadmissiblePairError):
        require_admissible(SignPattern.from_text("S(3,4,3)"), AdmissiblePair(1, 7))


def test_dual_and_reversed_patterns():
    sigma = SignPattern.from_text("++-")

    assert SignPattern.from_text("+-+").dual().text == "+++"
    assert sigma.reversed().text == "+--"
    assert AdmissiblePair(1, 2).dual() == AdmissiblePair(2, 1)
    assert ThreeBlockPattern(2, 4, 4).reversed() == ThreeBlockPattern(4, 4, 2)


def test_three_block_recognition():
    assert SignPattern.from_text("+--++").three_block() == ThreeBlockPattern(1, 2, 2)
    assert SignPattern.from_text("+-+-").three_block() is None


def test_pattern_of_requires_nonzero_coefficients():
    assert pattern_of(RatPoly.from_coeffs([12, -2, -2, 1])).text == "+--+"
    with pytest.raises(NotASignPatternError):
        pattern_of(RatPoly.from_coeffs([1, 0, 1]))


def test_parse_pattern_checks_degree():
    assert parse_pattern("S(1,3,1)", 4).degree == 4
    with pytest.raises(RejectedInputError):
        parse_pattern("S(1,3,1)", 5)
    with pytest.raises(RejectedInputError):
        SignPattern.from_text("+x-")
    with pytest.raises(RejectedInputError):
        SignPattern.from_text("-+")


def test_enumeration_order_and_sizes():
    assert [sigma.text for sigma in enumerate_patterns(2)] == ["+++", "++-", "+-+", "+--"]
    assert len(list(enumerate_patterns(5))) == 32

    blocks = list(enumerate_three_block(9))
    assert len(blocks) == 36
    assert [b.pattern.text for b in blocks] == sorted(b.pattern.text for b in blocks)


def test_admissible_pair_text():
    assert AdmissiblePair.from_text("0,7") == AdmissiblePair(0, 7)
    with pytest.raises(RejectedInputError):
        AdmissiblePair.from_text("seven")
    with pytest.raises(RejectedInputError):
        AdmissiblePair(-1, 0)
