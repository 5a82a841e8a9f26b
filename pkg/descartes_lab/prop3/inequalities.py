"""Exact evaluation of the symmetric-function inequalities used alongside the case analysis."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from descartes_lab.algebra.ratpoly import Number, RatPoly, elementary_symmetric
from descartes_lab.utils.errors import RejectedInputError


def _positive(values: Sequence[Number], at_least: int) -> list[Fraction]:
    values = [Fraction(v) for v in values]
    if len(values) < at_least:
        raise RejectedInputError(f"Need at least {at_least} values, got {len(values)}")
    if any(v <= 0 for v in values):
        raise RejectedInputError("Values must be positive")
    return values


def _symmetric(values: Sequence[Fraction]) -> list[Fraction]:
    # e[0] = 1 so that e[k] is the k-th elementary symmetric function
    return [Fraction(1)] + elementary_symmetric(values)


def newton_inequalities(poly: RatPoly) -> bool:
    """``(r_k / C(n,k))^2 >= (r_{k-1} / C(n,k-1)) (r_{k+1} / C(n,k+1))`` for 1 <= k <= n-1."""

    n = poly.degree
    normalized = [poly.coeff(k) / comb(n, k) for k in range(n + 1)]
    return all(normalized[k] ** 2 >= normalized[k - 1] * normalized[k + 1] for k in range(1, n))


def check_newton_quadratic(poly: RatPoly) -> bool:
    """``r_k^2 > r_{k-1} r_{k+1}`` for every interior k.

    For R with only negative roots this makes every ``p_{k+1} = a^2 r_{k+1} - 2a r_k + r_{k-1}``
    of ``R (x-a)^2`` a quadratic with two distinct positive roots.
    """

    n = poly.degree
    return all(poly.coeff(k) ** 2 > poly.coeff(k - 1) * poly.coeff(k + 1) for k in range(1, n))


def check_e_inequality(values: Sequence[Number]) -> bool:
    """``e1^2 e2 + 4 e4 > 4 e1 e3`` for at least four positive values."""

    e = _symmetric(_positive(values, 4))
    return e[1] ** 2 * e[2] + 4 * e[4] > 4 * e[1] * e[3]


def check_e1e2(values: Sequence[Number]) -> bool:
    """``e1 e2 >= 9 e3`` for exactly three positive values.

    The constant 9 is sharp only for three values; k values give 3k/(k-2).
    """

    values = _positive(values, 3)
    if len(values) != 3:
        raise RejectedInputError(f"e1 e2 >= 9 e3 takes exactly 3 values, got {len(values)}")
    e = _symmetric(values)
    return e[1] * e[2] >= 9 * e[3]


def check_induction_step(a: Number, values: Sequence[Number]) -> bool:
    """``a^3 e1 + 2 a^2 e1^2 + a e1^3 > 3 a^2 e2 + 2 a e1 e2`` for a > 0."""

    a = Fraction(a)
    if a <= 0:
        raise RejectedInputError("a must be positive")
    e = _symmetric(_positive(values, 1))
    e1 = e[1]
    e2 = e[2] if len(e) > 2 else Fraction(0)
    return a**3 * e1 + 2 * a**2 * e1**2 + a * e1**3 > 3 * a**2 * e2 + 2 * a * e1 * e2


def check_newton_e(values: Sequence[Number]) -> bool:
    """``e1^2 >= 2k/(k-1) e2`` for k >= 2 positive values."""

    values = _positive(values, 2)
    k = len(values)
    e = _symmetric(values)
    return e[1] ** 2 >= Fraction(2 * k, k - 1) * e[2]
