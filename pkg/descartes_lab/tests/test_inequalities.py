from fractions import Fraction

import pytest

from descartes_lab.algebra.ratpoly import RatPoly, binomial_poly, from_roots
from descartes_lab.prop3.inequalities import (
    check_e1e2,
    check_e_inequality,
    check_induction_step,
    check_newton_e,
    check_newton_quadratic,
    newton_inequalities,
)
from descartes_lab.utils.errors import RejectedInputError


def test_e_inequality_on_equal_values():
    assert check_e_inequality([1, 1, 1, 1])
    assert check_e_inequality([Fraction(1, 3), 2, 5, 7, 11])


def test_e1e2_reaches_equality_at_equal_values():
    assert check_e1e2([1, 2, 3])
    assert check_e1e2([1, 1, 1])


def test_e1e2_takes_exactly_three_values():
    # twelve ones give 792 < 9 * 220
    with pytest.raises(RejectedInputError):
        check_e1e2([1] * 12)
    with pytest.raises(RejectedInputError):
        check_e1e2([1, 2])


def test_newton_inequalities_for_real_rooted_polynomials():
    assert newton_inequalities(binomial_poly(4))
    assert newton_inequalities(from_roots([1, 2, 5, Fraction(7, 3)]))
    assert not newton_inequalities(RatPoly.from_coeffs([1, 0, 1]))


def test_newton_quadratic_is_strict_for_distinct_negative_roots():
    assert check_newton_quadratic(binomial_poly(4))
    assert check_newton_quadratic(from_roots([1, 2, 3]))


def test_newton_e():
    assert check_newton_e([1, 1])
    assert check_newton_e([1, 2, 3, 4])


def test_induction_step():
    assert check_induction_step(1, [1, 2])
    assert check_induction_step(Fraction(1, 10), [3])
    with pytest.raises(RejectedInputError):
        check_induction_step(0, [1, 2])


def test_too_few_or_nonpositive_values_are_rejected():
    with pytest.raises(RejectedInputError):
        check_e_inequality([1, 2, 3])
    with pytest.raises(RejectedInputError):
        check_e1e2([1, 2])
    with pytest.raises(RejectedInputError):
        check_newton_e([1, -1])
