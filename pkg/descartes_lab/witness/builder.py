"""Dispatch from a couple (sign pattern, admissible pair) to a certified witness."""

from __future__ import annotations

import logging
from fractions import Fraction

from descartes_lab.algebra.ratpoly import RatPoly, from_roots, reverse
from descartes_lab.algebra.sturm import count_pos_neg
from descartes_lab.criteria.bounds import L_value
from descartes_lab.signs.patterns import AdmissiblePair, SignPattern, ThreeBlockPattern, require_admissible
from descartes_lab.utils.errors import RejectedInputError, SearchBudgetExhausted
from descartes_lab.witness.base import Witness
from descartes_lab.witness.closure import closure_applies, three_block_closure
from descartes_lab.witness.concat import prop1_chain
from descartes_lab.witness.shift import perturb_to_distinct, shift_to_ap
from descartes_lab.witness.theorem2 import quadratic_witness, theorem2_parameters

logger = logging.getLogger(__name__)

JITTER_ATTEMPTS = 8


def realize_c0_c1(sigma: SignPattern, ap: AdmissiblePair, budget: int = 64) -> Witness:
    require_admissible(sigma, ap)
    d = sigma.degree
    if sigma.changes == 1:
        base = prop1_chain(sigma, budget)
        k = (base.ap.neg - ap.neg) // 2
        construction = "shift" if k else "concat"
        start, jitter = base.poly, Fraction(0)
        for attempt in range(JITTER_ATTEMPTS):
            try:
                poly, t = shift_to_ap(start, k)
            except SearchBudgetExhausted:
                start, jitter = _nudge_linear(base.poly, base.ap, jitter, budget)
                logger.debug("Retrying shift for %s with jitter %s (attempt %d)", sigma.text, jitter, attempt)
                continue
            parameters = {**base.parameters, "t": t, "jitter": jitter}
            return _certified(Witness(poly, sigma, ap, construction, parameters))
        raise SearchBudgetExhausted(f"distinct critical levels for {sigma.text}", JITTER_ATTEMPTS)
    if sigma.changes != 0:
        raise RejectedInputError(f"{sigma.text} has more than one sign change")

    k = (d - ap.neg) // 2
    jitter = Fraction(0)
    for attempt in range(JITTER_ATTEMPTS):
        roots = [i * (1 + i * jitter) for i in range(1, d + 1)]
        try:
            poly, t = shift_to_ap(from_roots(roots), k)
        except SearchBudgetExhausted:
            # equal critical levels; break the symmetry of the roots
            jitter = Fraction(1, 4 * d) if jitter == 0 else jitter / 2
            logger.debug("Retrying all-plus witness for d=%d with jitter %s (attempt %d)", d, jitter, attempt)
            continue
        return _certified(Witness(poly, sigma, ap, "shift", {"t": t, "jitter": jitter}))
    raise SearchBudgetExhausted(f"distinct critical levels for {sigma.text}", JITTER_ATTEMPTS)


def _nudge_linear(
    poly: RatPoly, ap: AdmissiblePair, jitter: Fraction, budget: int
) -> tuple[RatPoly, Fraction]:
    """Scale the linear coefficient by ``1 + jitter`` with a smaller jitter than last time.

    The sign pattern is kept; the distinct root counts are re-certified.
    """

    jitter = Fraction(1, 4 * poly.degree) if jitter == 0 else jitter / 2
    for _ in range(budget):
        candidate = poly + RatPoly.x() * (poly.coeff(1) * jitter)
        if count_pos_neg(candidate) == (ap.pos, ap.neg):
            return candidate, jitter
        jitter /= 2
    raise SearchBudgetExhausted(f"root-preserving jitter for degree {poly.degree}", budget)


def theorem2_witness(blocks: ThreeBlockPattern, budget: int = 64) -> Witness:
    """(0, d-2) from the quadratic-factor scheme, using the reversed pattern if needed."""

    d, m, n, q = blocks.degree, blocks.m, blocks.n, blocks.q
    flip = L_value(d, m, n) <= 0
    if flip and L_value(d, q, n) <= 0:
        raise RejectedInputError(f"L is not positive for {blocks.text} or its reverse")
    source = blocks.reversed() if flip else blocks
    params = theorem2_parameters(d, source.m, source.n)
    poly, eta = perturb_to_distinct(quadratic_witness(d, params.y, params.z), budget)
    if flip:
        poly = reverse(poly).monic()
    ap = AdmissiblePair(0, d - 2)
    parameters = {"y": params.y, "z": params.z, "eta": eta, "reversed": flip}
    return _certified(Witness(poly, blocks.pattern, ap, "thm2", parameters))


def three_block_witness(blocks: ThreeBlockPattern, ap: AdmissiblePair, budget: int = 64) -> Witness:
    d = blocks.degree
    if ap.pos != 0 or (d - ap.neg) % 2 or ap.neg > d - 2:
        raise RejectedInputError(f"{ap} is not of the form (0, d-2k) for {blocks.text}")
    if closure_applies(blocks.m, blocks.n, blocks.q):
        base = three_block_closure(blocks.m, blocks.n, blocks.q, budget)
    else:
        base = theorem2_witness(blocks, budget)
    k = (d - 2 - ap.neg) // 2
    if k == 0:
        return base
    poly, t = shift_to_ap(base.poly, k)
    return _certified(Witness(poly, blocks.pattern, ap, "shift", {**base.parameters, "t": t}))


def _dual_poly(poly: RatPoly) -> RatPoly:
    return poly.compose_neg() * (-1) ** poly.degree


def witness_for(sigma: SignPattern, ap: AdmissiblePair, *, budget: int = 64) -> Witness:
    """A certified witness for the couple, or RejectedInputError when no construction applies.

    ``budget`` caps every epsilon and eta halving along the way.
    """

    require_admissible(sigma, ap)
    c, p = sigma.changes_preservations()
    if (ap.pos, ap.neg) == (c, p):
        return _certified(prop1_chain(sigma, budget))
    if c <= 1:
        return realize_c0_c1(sigma, ap, budget)
    blocks = sigma.three_block()
    if blocks is not None and ap.pos == 0:
        return three_block_witness(blocks, ap, budget)
    dual = sigma.dual()
    if dual.changes <= 2 and c > 2:
        inner = witness_for(dual, ap.dual(), budget=budget)
        poly = _dual_poly(inner.poly)
        return _certified(Witness(poly, sigma, ap, inner.construction, {**inner.parameters, "dual": True}))
    raise RejectedInputError(f"No construction known for {sigma.text} with {ap}")


def _certified(witness: Witness) -> Witness:
    if not witness.verify():
        raise RejectedInputError(
            f"Construction {witness.construction} did not certify {witness.pattern.text} with {witness.ap}"
        )
    return witness
