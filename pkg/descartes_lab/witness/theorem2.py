"""Explicit witnesses ``(x+1)^(d-2) (x^2 - z x + y)`` for three-block patterns.

With ``C(j) = binom(d-2, j)`` the coefficient of ``x^(d-j)`` is
``p_j = C(j) - C(j-1) z + C(j-2) y``. Writing ``f_j(y) = (C(j) + C(j-2) y) / C(j-1)``,
``p_j < 0`` exactly when ``z > f_j(y)``. A pair (y, z) realizes Sigma_{m,n,q} when

* ``f_j(y) < z`` for the block j = m .. m+n-1,
* ``z < f_i(y)`` for every other i <= d-1 (``p_d = y`` is always positive),
* ``z < 2 sqrt(y)`` so that the quadratic factor has no real root.

The first and third conditions together confine sqrt(y) to
``(Q-(j-1), Q+(j-1))`` for each block j; the first two are linear in y.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from descartes_lab.algebra.intervals import sqrt_enclosure
from descartes_lab.algebra.ratpoly import RatPoly, binomial_poly
from descartes_lab.criteria.bounds import SurdValue, L_value, compare_surds, q_value
from descartes_lab.signs.patterns import ThreeBlockPattern, pattern_of
from descartes_lab.utils.errors import NotASignPatternError, RejectedInputError, SearchBudgetExhausted

logger = logging.getLogger(__name__)


def _c(d: int, j: int) -> int:
    return comb(d - 2, j) if 0 <= j <= d - 2 else 0


def coefficient(d: int, j: int, y: Fraction, z: Fraction) -> Fraction:
    """``p_j`` of ``(x+1)^(d-2) (x^2 - z x + y)`` in the descending convention."""

    return _c(d, j) - _c(d, j - 1) * z + _c(d, j - 2) * y


def _f(d: int, j: int, y: Fraction) -> Fraction:
    return (_c(d, j) + _c(d, j - 2) * y) / _c(d, j - 1)


def _block(d: int, m: int, n: int) -> tuple[range, list[int]]:
    block = range(m, m + n)
    others = [i for i in range(1, d) if i < m or i >= m + n]
    return block, others


def linear_y_window(d: int, m: int, n: int) -> Optional[tuple[Fraction, Optional[Fraction]]]:
    """Open interval of y > 0 on which every block ``f_j`` stays below every other ``f_i``.

    Returns None when the linear constraints are inconsistent.
    """

    block, others = _block(d, m, n)
    lower: Fraction = Fraction(0)
    upper: Optional[Fraction] = None
    for j in block:
        for i in others:
            slope = _c(d, j - 2) * _c(d, i - 1) - _c(d, i - 2) * _c(d, j - 1)
            rhs = _c(d, i) * _c(d, j - 1) - _c(d, j) * _c(d, i - 1)
            if slope == 0:
                if rhs <= 0:
                    return None
            elif slope > 0:
                bound = Fraction(rhs, slope)
                upper = bound if upper is None else min(upper, bound)
            else:
                lower = max(lower, Fraction(rhs, slope))
    if upper is not None and upper <= lower:
        return None
    return lower, upper


def sqrt_y_window(d: int, m: int, n: int) -> tuple[SurdValue, SurdValue]:
    """Exact bounds (Q-, Q+) on sqrt(y) from all block indices."""

    ks = range(m - 1, m + n - 1)
    lower = q_value(d, ks[0], -1)
    upper = q_value(d, ks[0], 1)
    for k in ks[1:]:
        candidate = q_value(d, k, -1)
        if compare_surds(candidate, lower) > 0:
            lower = candidate
        candidate = q_value(d, k, 1)
        if compare_surds(candidate, upper) < 0:
            upper = candidate
    return lower, upper


@dataclass(frozen=True)
class Theorem2Parameters:
    y: Fraction
    z: Fraction
    y_window: tuple[Fraction, Optional[Fraction]]
    z_window: tuple[Fraction, Fraction]


def _choose(d: int, m: int, n: int, width: Fraction) -> Optional[Theorem2Parameters]:
    linear = linear_y_window(d, m, n)
    if linear is None:
        return None
    q_lo, q_hi = sqrt_y_window(d, m, n)
    lo_enc = q_lo.enclosure(width)
    lo = max(linear[0], lo_enc.hi**2 if lo_enc.hi > 0 else Fraction(0))
    hi = linear[1]
    if not q_hi.infinite:
        hi_enc = q_hi.enclosure(width)
        bound = hi_enc.lo**2 if hi_enc.lo > 0 else Fraction(0)
        hi = bound if hi is None else min(hi, bound)
    if hi is not None and hi <= lo:
        return None
    y = (lo + hi) / 2 if hi is not None else 2 * lo + 1

    block, others = _block(d, m, n)
    z_lo = max(_f(d, j, y) for j in block)
    z_hi = 2 * sqrt_enclosure(y, width).lo
    for i in others:
        z_hi = min(z_hi, _f(d, i, y))
    if z_hi <= z_lo:
        return None
    return Theorem2Parameters(y=y, z=(z_lo + z_hi) / 2, y_window=(lo, hi), z_window=(z_lo, z_hi))


def check_theorem2_parameters(d: int, m: int, n: int, y: Fraction, z: Fraction) -> bool:
    """Exact check that ``(x+1)^(d-2)(x^2 - z x + y)`` has pattern Sigma_{m,n,q} and z^2 < 4y."""

    y, z = Fraction(y), Fraction(z)
    if z * z >= 4 * y:
        return False
    target = ThreeBlockPattern(m, n, d + 1 - m - n).pattern
    try:
        return pattern_of(quadratic_witness(d, y, z)) == target
    except NotASignPatternError:
        return False


def quadratic_witness(d: int, y: Fraction, z: Fraction) -> RatPoly:
    return binomial_poly(d - 2, 1) * RatPoly((Fraction(y), -Fraction(z), Fraction(1)))


def theorem2_parameters(
    d: int,
    m: int,
    n: int,
    *,
    width: Fraction = Fraction(1, 10**6),
    budget: int = 64,
) -> Theorem2Parameters:
    if L_value(d, m, n) <= 0:
        raise RejectedInputError(f"L({d},{m},{n}) is not positive")
    for step in range(budget):
        params = _choose(d, m, n, width)
        if params is not None and check_theorem2_parameters(d, m, n, params.y, params.z):
            logger.debug("Theorem-2 parameters for (%d,%d,%d): y=%s z=%s", d, m, n, params.y, params.z)
            return params
        width /= 4
    raise SearchBudgetExhausted(f"(y, z) for d={d}, m={m}, n={n}", budget)


def theorem2_construct(d: int, m: int, n: int, **kwargs: object) -> RatPoly:
    """``(x+1)^(d-2)(x^2 - z x + y)`` realizing Sigma_{m,n,d+1-m-n}; requires L(d,m,n) > 0."""

    params = theorem2_parameters(d, m, n, **kwargs)  # type: ignore[arg-type]
    return quadratic_witness(d, params.y, params.z)
