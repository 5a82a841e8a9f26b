"""Witnesses built purely by chained concatenation with x +- 1."""

from __future__ import annotations

import logging
from fractions import Fraction

from descartes_lab.algebra.ratpoly import RatPoly
from descartes_lab.signs.patterns import AdmissiblePair, SignPattern
from descartes_lab.witness.base import Witness, find_epsilon

logger = logging.getLogger(__name__)


def prop1_chain(sigma: SignPattern, budget: int = 64) -> Witness:
    """Realize ``sigma`` with (c, p): every sign change adds a positive root, every
    preservation a negative one."""

    signs = sigma.signs
    poly = RatPoly.linear(signs[1])
    pos, neg = (0, 1) if signs[1] > 0 else (1, 0)
    epsilons: list[Fraction] = []
    for i in range(2, len(signs)):
        step = signs[i] * signs[i - 1]
        if step > 0:
            neg += 1
        else:
            pos += 1
        target = SignPattern(signs[: i + 1])
        epsilon, poly = find_epsilon(poly, RatPoly.linear(step), target, AdmissiblePair(pos, neg), budget)
        epsilons.append(epsilon)
    logger.debug("Concatenation chain for %s used epsilons %s", sigma, epsilons)
    return Witness(
        poly=poly,
        pattern=sigma,
        ap=AdmissiblePair(pos, neg),
        construction="concat",
        parameters={"epsilon": [f"{e.numerator}/{e.denominator}" for e in epsilons]},
    )
