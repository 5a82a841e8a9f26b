from fractions import Fraction

import pytest
import sympy

from descartes_lab.algebra.certificates import (
    QuadraticFormCertificate,
    QuadraticFormPiece,
    TypePPiece,
    verify_certificate,
)
from descartes_lab.algebra.mpoly import (
    IntMPoly,
    check_all_coeffs_positive,
    check_type_p,
    from_text,
    resultant_in,
    shift_vars,
)
from descartes_lab.algebra.ratpoly import RatPoly
from descartes_lab.prop3.verifier import quadratic_resultant
from descartes_lab.utils.errors import VariableMismatchError


def _to_sympy(poly: IntMPoly):
    return sympy.expand(sympy.sympify(poly.to_text().replace("^", "**")))


def test_text_round_trip_of_multivariate_polynomial():
    poly = from_text("3*a^2*v-2*a+7", ("a", "v"))

    assert poly.evaluate({"a": 2, "v": 1}) == 3 * 4 - 4 + 7
    assert from_text(poly.to_text(), ("a", "v")) == poly


def test_unknown_variable_is_rejected():
    with pytest.raises(VariableMismatchError):
        from_text("1*z", ("a",))


def test_resultant_agrees_with_sympy():
    variables = ("a", "v", "w")
    p = from_text("1*a^2*v-3*a*w+2*v+1", variables)
    q = from_text("2*a^2+1*a*v*w-1*w^2", variables)

    ours = resultant_in(p, q, "a")
    theirs = sympy.resultant(_to_sympy(p), _to_sympy(q), sympy.Symbol("a"))

    assert ours.variables == ("v", "w")
    assert sympy.expand(_to_sympy(ours) - theirs) == 0


def test_quadratic_resultant_matches_sylvester_determinant():
    variables = ("a",)
    first = (Fraction(2), Fraction(-3), Fraction(1))
    second = (Fraction(-1), Fraction(5), Fraction(4))
    p = from_text("1*a^2-3*a+2", variables)
    q = from_text("4*a^2+5*a-1", variables)

    assert resultant_in(p, q, "a").evaluate({}) == quadratic_resultant(first, second)


def test_shift_vars_substitutes_one_plus_fresh_variable():
    poly = from_text("1*v^2*w", ("v", "w"))
    shifted = shift_vars(poly, {"v": "V", "w": "W"})

    assert shifted == from_text("1*V^2*W+1*V^2+2*V*W+2*V+1*W+1", ("V", "W"))
    assert check_all_coeffs_positive(shifted)
    with pytest.raises(VariableMismatchError):
        shift_vars(from_text("1*v*V", ("v", "V")), {"v": "V"})


def test_type_p_check():
    assert check_type_p(RatPoly.from_coeffs([1, 1, 1]))
    assert not check_type_p(RatPoly.from_coeffs([2, -3, 1]))
    assert not check_type_p(RatPoly.from_coeffs([1, 1, -1]))


def test_certificate_with_nonnegative_remainder_is_valid():
    target = from_text("2*V^2-1*V*W+2*W^2+3*V", ("V", "W"))
    check = verify_certificate(target, QuadraticFormCertificate((QuadraticFormPiece(2, -1, 2),)))

    assert check.valid
    assert check.remainder == from_text("3*V", ("V", "W"))
    assert check.residual.is_zero()


def test_certificate_failures_are_reported():
    target = from_text("1*V^2-1*V*W+1*W^2", ("V", "W"))

    indefinite = verify_certificate(target, QuadraticFormCertificate((QuadraticFormPiece(1, -3, 1),)))
    overshoot = verify_certificate(target, QuadraticFormCertificate((QuadraticFormPiece(2, -1, 2),)))

    assert not indefinite.valid
    assert any("not positive definite" in failure for failure in indefinite.failures)
    assert not overshoot.valid
    assert overshoot.residual == from_text("1*V^2+1*W^2", ("V", "W"))


def test_type_p_piece_expands_as_binary_form():
    piece = TypePPiece({2: 1, 1: 1, 0: 1})

    assert piece.is_type_p()
    assert piece.expand(("V", "W")) == from_text("1*V^2+1*V*W+1*W^2", ("V", "W"))


@pytest.mark.parametrize(
    "p_text, q_text",
    [
        ("1*a^2*v-3*a*w+2*v+1", "2*a^2+1*a*v*w-1*w^2"),
        ("2*a*v-1*w", "1*a^3+1*a*w-5*v"),
    ],
)
def test_swapping_resultant_arguments_changes_only_the_sign(p_text, q_text):
    variables = ("a", "v", "w")
    p, q = from_text(p_text, variables), from_text(q_text, variables)
    sign = (-1) ** (p.degree_in("a") * q.degree_in("a"))

    assert resultant_in(q, p, "a") == resultant_in(p, q, "a") * sign


def test_shift_vars_respects_sums_and_products():
    variables = ("v", "w")
    mapping = {"v": "V", "w": "W"}
    p = from_text("3*v^2*w-2*v+5", variables)
    q = from_text("1*v*w^3+4*w-1", variables)

    assert shift_vars(p + q, mapping) == shift_vars(p, mapping) + shift_vars(q, mapping)
    assert shift_vars(p * q, mapping) == shift_vars(p, mapping) * shift_vars(q, mapping)
    assert shift_vars(IntMPoly.constant(variables, 7), mapping) == IntMPoly.constant(("V", "W"), 7)
