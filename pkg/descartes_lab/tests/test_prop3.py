import random
from fractions import Fraction

import pytest
import sympy

from descartes_lab.algebra.certificates import verify_certificate
from descartes_lab.algebra.mpoly import resultant_in, shift_vars
from descartes_lab.prop3.cases import SHIFTED_VARIABLES, Prop3Case, build_case, coefficient_pair, p_coefficients
from descartes_lab.prop3.fixtures import all_cases, all_ones_cases, lemma_cases, sigma_343_cases
from descartes_lab.prop3.verifier import check_b_reduction, verify_case, verify_cases
from descartes_lab.utils.errors import RejectedInputError

X, A, V, W = sympy.symbols("x a v w")


def _sympy(poly):
    return sympy.expand(sympy.sympify(poly.to_text().replace("^", "**")))


def _sympy_coefficient(blocks, j):
    s1, s2, s3 = blocks
    product = (X + 1) ** s1 * (X + V) ** s2 * (X + W) ** s3 * (X - A) ** 2
    return sympy.Poly(sympy.expand(product), X).coeff_monomial(X**j)


def test_target_patterns_of_the_coefficient_pairs():
    assert Prop3Case(9, (5, 1, 1), 3, 6).target_pattern.text == "S(3,4,3)"
    assert Prop3Case(9, (5, 1, 1), 4, 7).target_pattern.text == "S(2,4,4)"
    assert Prop3Case(10, (6, 1, 1), 5, 8).target_pattern.text == "S(2,4,5)"


def test_malformed_cases_are_rejected():
    with pytest.raises(RejectedInputError):
        Prop3Case(9, (5, 1, 1), 3, 7)
    with pytest.raises(RejectedInputError):
        Prop3Case(9, (5, 1, 2), 3, 6)


def test_coefficients_match_direct_expansion():
    case = Prop3Case(9, (4, 2, 1), 3, 6)
    coeffs = p_coefficients(case)

    assert len(coeffs) == 10
    for j in (0, 3, 6, 9):
        assert sympy.expand(_sympy(coeffs[j]) - _sympy_coefficient(case.blocks, j)) == 0
    assert [q.index for q in build_case(case)] == list(range(2, 8))


def test_pair_resultant_matches_sympy():
    case = Prop3Case(9, (5, 1, 1), 3, 6)
    p_mu, p_nu = coefficient_pair(case)
    ours = resultant_in(p_mu.poly(case.variables), p_nu.poly(case.variables), "a")
    theirs = sympy.resultant(
        _sympy_coefficient(case.blocks, 3), _sympy_coefficient(case.blocks, 6), A
    )

    assert sympy.expand(_sympy(ours) - theirs) == 0


def test_lemma_resultant_is_a_square():
    case = lemma_cases()[0]
    p_mu, p_nu = coefficient_pair(case)
    theirs = sympy.resultant(
        _sympy(p_mu.poly(case.variables)),
        _sympy(p_nu.poly(case.variables)),
        A,
    )

    assert sympy.factor(theirs - 7056 * (W - 1) ** 2 * (W + 1) ** 2) == 0


def test_b_reduction_holds_everywhere():
    assert all(check_b_reduction(case) for case in all_cases())


@pytest.mark.parametrize("case", lemma_cases() + all_ones_cases(), ids=lambda c: f"{c.d}{c.label}{c.mu}")
def test_two_root_and_all_ones_cases_pass(case):
    report = verify_case(case)

    assert report.passed, report.details
    assert report.to_dict()["pass"] is True


def test_reversed_cases_point_at_their_source():
    reports = verify_cases([c for c in sigma_343_cases() if c.reversal_of is not None])

    assert reports
    for report in reports:
        assert report.covered_by.startswith("reversal of (")
        assert report.checks.resultant_certificate is None
        assert report.checks.b_reduction


def test_threaded_verification_keeps_order():
    cases = lemma_cases()

    serial = [r.to_dict() for r in verify_cases(cases)]
    threaded = [r.to_dict() for r in verify_cases(cases, threads=3)]

    assert serial == threaded


def test_certified_resultant_is_nonnegative_on_a_grid():
    rng = random.Random(3)
    case = next(c for c in sigma_343_cases() if c.certificate is not None)
    p_mu, p_nu = coefficient_pair(case)
    resultant = resultant_in(p_mu.poly(case.variables), p_nu.poly(case.variables), "a")
    shifted = shift_vars(resultant, SHIFTED_VARIABLES)

    assert verify_certificate(shifted, case.certificate).valid
    for _ in range(200):
        point = {name: Fraction(rng.randint(0, 400), rng.randint(1, 40)) for name in ("V", "W")}
        assert shifted.evaluate(point) >= 0
