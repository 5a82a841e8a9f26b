from fractions import Fraction

import pytest
import sympy

from descartes_lab.algebra.intervals import exact_sqrt, sqrt_enclosure, surd_sign
from descartes_lab.algebra.ratpoly import (
    RatPoly,
    binomial_poly,
    elementary_symmetric,
    from_roots,
    from_text,
    multiplicity_of_root,
    reverse,
    scale_x,
    square_free_part,
)
from descartes_lab.algebra.sturm import count_pos_neg, count_real_roots, isolate_real_roots
from descartes_lab.utils.errors import RejectedInputError, RootAtEndpointError, ZeroConstantTermError

X = sympy.Symbol("x")


def _sympy_counts(poly: RatPoly) -> tuple[int, int]:
    expr = sum(sympy.Rational(c.numerator, c.denominator) * X**j for j, c in enumerate(poly.coeffs))
    square_free = sympy.Poly(sympy.sqf_part(expr), X)
    return square_free.count_roots(0, None), square_free.count_roots(None, 0)


def test_text_codec_keeps_exact_coefficients():
    poly = from_text("12/1,-2/1,-2/1,1/1")

    assert poly.degree == 3
    assert poly.to_text() == "12/1,-2/1,-2/1,1/1"
    assert from_text(" 1/3 , -5/7 ").coeffs == (Fraction(1, 3), Fraction(-5, 7))


def test_text_codec_rejects_garbage():
    with pytest.raises(RejectedInputError):
        from_text("1/2,abc")
    with pytest.raises(RejectedInputError):
        from_text("")


@pytest.mark.parametrize(
    "poly",
    [
        from_text("12/1,-2/1,-2/1,1/1"),
        from_roots([1, 2, 3], [Fraction(1, 2)]),
        from_roots([Fraction(1, 3), 5], [2, 7, Fraction(9, 4)]),
        from_roots([1, 1, 1], [2, 2]),
        binomial_poly(8) * RatPoly.from_coeffs([Fraction(39, 25), Fraction(-249, 100), 1]),
    ],
)
def test_count_pos_neg_agrees_with_sympy(poly):
    assert count_pos_neg(poly) == _sympy_counts(poly)


def test_count_pos_neg_counts_distinct_roots():
    poly = from_roots([1, 1, 1], [2, 2])

    assert count_pos_neg(poly) == (1, 1)


def test_count_pos_neg_rejects_root_at_zero():
    with pytest.raises(ZeroConstantTermError):
        count_pos_neg(RatPoly.from_coeffs([0, 1, 1]))


def test_sturm_endpoint_on_a_root_asks_for_a_nudge():
    with pytest.raises(RootAtEndpointError):
        count_real_roots(from_roots([], [1]), 1, 2)


def test_isolation_separates_every_real_root():
    poly = from_roots([1, 3], [2])
    intervals = isolate_real_roots(poly)

    assert len(intervals) == 3
    for lo, hi in intervals:
        assert count_real_roots(poly, lo, hi) == 1


def test_reverse_and_scale_preserve_counts():
    poly = from_roots([2, 5], [3])

    assert count_pos_neg(reverse(poly)) == (1, 2)
    assert count_pos_neg(scale_x(poly, Fraction(7, 3))) == (1, 2)
    with pytest.raises(RejectedInputError):
        scale_x(poly, 0)


@pytest.mark.parametrize(
    "poly",
    [from_roots([2, 5], [3]), from_text("3/1,-1/2,0/1,7/1,-2/1"), binomial_poly(6)],
)
def test_reverse_is_an_involution(poly):
    assert reverse(reverse(poly)) == poly


@pytest.mark.parametrize("chi", [Fraction(1, 9), Fraction(7, 3), 40])
def test_scale_keeps_the_sign_pattern(chi):
    poly = from_text("3/1,-1/2,-5/1,7/1,-2/1,1/1")
    scaled = scale_x(poly, chi)

    assert [c > 0 for c in scaled.coeffs] == [c > 0 for c in poly.coeffs]
    assert scaled.degree == poly.degree


def test_sturm_counts_add_over_a_split_interval():
    poly = from_roots([1, 3, Fraction(7, 2)], [Fraction(1, 3), 2, 9])
    total = count_real_roots(poly, -10, 10)

    assert total == 6
    for mid in (Fraction(-5, 2), Fraction(-1, 2), Fraction(1, 2), 5):
        assert count_real_roots(poly, -10, mid) + count_real_roots(poly, mid, 10) == total


def test_square_free_part_and_multiplicity():
    poly = from_roots([1, 1, 1], [2])

    assert square_free_part(poly) == from_roots([1], [2])
    assert multiplicity_of_root(binomial_poly(5), -1) == 5


def test_elementary_symmetric_values():
    assert elementary_symmetric([1, 2, 3]) == [6, 11, 6]


def test_sqrt_enclosure_is_rigorous():
    enclosure = sqrt_enclosure(2, Fraction(1, 1000))

    assert enclosure.lo**2 <= 2 <= enclosure.hi**2
    assert enclosure.width <= Fraction(1, 1000)
    assert sqrt_enclosure(Fraction(9, 4)).is_exact()
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert exact_sqrt(2) is None


def test_surd_sign_is_exact():
    assert surd_sign(-1, 1, 2) == 1
    assert surd_sign(0, 1, 2, -1, 2) == 0
    # sqrt(2) + sqrt(3) - 3 is about 0.146
    assert surd_sign(-3, 1, 2, 1, 3) == 1
    assert surd_sign(-4, 1, 2, 1, 3) == -1
