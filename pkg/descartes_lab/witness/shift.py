"""Moving along the family P + t and splitting a repeated root at -1."""

from __future__ import annotations

import logging
from fractions import Fraction

from descartes_lab.algebra.ratpoly import RatPoly, multiplicity_of_root, square_free_part
from descartes_lab.algebra.sturm import count_pos_neg, count_real_roots, isolate_real_roots, refine_root
from descartes_lab.signs.patterns import pattern_of
from descartes_lab.utils.errors import NotASignPatternError, RejectedInputError, SearchBudgetExhausted

logger = logging.getLogger(__name__)


def perturb_to_distinct(poly: RatPoly, budget: int = 64) -> tuple[RatPoly, Fraction]:
    """Replace ``(x+1)^r`` in ``poly`` by ``prod (x + 1 + i*eta)`` for the first eta
    (halving from 1/(2d)) that keeps the sign pattern."""

    r = multiplicity_of_root(poly, -1)
    if r == 0:
        raise RejectedInputError("Polynomial has no root at -1 to perturb")
    rest = poly // (RatPoly.linear(1) ** r)
    if rest.degree > 0 and count_real_roots(rest) != 0:
        raise RejectedInputError("The cofactor of (x+1)^r must have no real roots")
    pattern = pattern_of(poly)
    eta = Fraction(1, 2 * poly.degree)
    for step in range(budget):
        candidate = rest
        for i in range(r):
            candidate = candidate * RatPoly.linear(1 + i * eta)
        try:
            same = pattern_of(candidate) == pattern
        except NotASignPatternError:
            same = False
        if same and count_pos_neg(candidate) == (0, r):
            logger.debug("Split (x+1)^%d with eta=%s after %d halvings", r, eta, step)
            return candidate, eta
        eta /= 2
    raise SearchBudgetExhausted(f"eta splitting (x+1)^{r}", budget)


def _critical_levels(poly: RatPoly, width: Fraction) -> list[Fraction]:
    """Approximate values of ``poly`` at its critical points on the negative axis."""

    derivative = square_free_part(poly.derivative())
    levels = []
    for interval in isolate_real_roots(derivative, None, 0):
        lo, hi = refine_root(derivative, interval, width)
        levels.append(poly.eval((lo + hi) / 2))
    return levels


def shift_to_ap(poly: RatPoly, k: int, *, budget: int = 16) -> tuple[RatPoly, Fraction]:
    """``P + sign(a0) * t`` with ``2k`` fewer negative roots and the same positive count.

    Thresholds are the critical levels on the negative axis lying on the far side
    of zero from the constant term. Candidate ``t`` values sit between consecutive
    approximate thresholds and are re-certified with Sturm counts.
    """

    if k < 0:
        raise RejectedInputError("k must be nonnegative")
    if poly.constant_term == 0:
        raise RejectedInputError("Constant term must be nonzero")
    pos, neg = count_pos_neg(poly)
    if k == 0:
        return poly, Fraction(0)
    if neg - 2 * k < 0:
        raise RejectedInputError(f"Cannot remove {2 * k} of {neg} negative roots")
    sign = 1 if poly.constant_term > 0 else -1
    target = (pos, neg - 2 * k)
    width = Fraction(1, 2**10)
    for step in range(budget):
        levels = _critical_levels(poly, width)
        thresholds = sorted({-sign * level for level in levels if level * sign < 0})
        if not thresholds:
            raise RejectedInputError("No critical level on the negative axis can be crossed")
        gaps = list(zip(thresholds, thresholds[1:])) + [(thresholds[-1], 2 * thresholds[-1] + 1)]
        for lower, upper in gaps:
            t = (lower + upper) / 2
            shifted = poly + sign * t
            if count_pos_neg(shifted) == target:
                logger.debug("Shift by t=%s certified after %d refinements", t, step)
                return shifted, t
        width /= 16
    raise SearchBudgetExhausted(f"shift removing {2 * k} negative roots", budget)
