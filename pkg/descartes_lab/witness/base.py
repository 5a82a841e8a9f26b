"""Certified witnesses and the concatenation step they are built from."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from descartes_lab.algebra.ratpoly import RatPoly, format_fraction, scale_x
from descartes_lab.algebra.sturm import count_pos_neg
from descartes_lab.signs.patterns import AdmissiblePair, SignPattern, pattern_of
from descartes_lab.utils.errors import DescartesLabError, SearchBudgetExhausted

logger = logging.getLogger(__name__)

SCHEMA = "descartes-lab/1"


def certify(poly: RatPoly, pattern: SignPattern, ap: AdmissiblePair) -> bool:
    """Exact check that ``poly`` has sign pattern ``pattern`` and distinct-root counts ``ap``."""

    try:
        if pattern_of(poly) != pattern:
            return False
        return count_pos_neg(poly) == (ap.pos, ap.neg)
    except DescartesLabError:
        return False


@dataclass(frozen=True)
class Witness:
    poly: RatPoly
    pattern: SignPattern
    ap: AdmissiblePair
    construction: str
    parameters: dict[str, Any] = field(default_factory=dict)

    def verify(self) -> bool:
        return certify(self.poly, self.pattern, self.ap)

    def to_dict(self) -> dict[str, Any]:
        params = {
            key: format_fraction(value) if isinstance(value, Fraction) else value
            for key, value in self.parameters.items()
        }
        return {
            "schema": SCHEMA,
            "pattern": self.pattern.text,
            "ap": self.ap.as_list(),
            "coeffs": self.poly.to_text(),
            "construction": self.construction,
            "parameters": params,
        }


def concatenate(p1: RatPoly, p2: RatPoly, epsilon: Fraction) -> RatPoly:
    """``epsilon^d2 * P1(x) * P2(x / epsilon)``: the roots of P2 shrink by ``epsilon``."""

    return p1 * scale_x(p2, 1 / Fraction(epsilon))


def find_epsilon(
    p1: RatPoly,
    p2: RatPoly,
    target: SignPattern,
    target_ap: AdmissiblePair,
    budget: int = 64,
) -> tuple[Fraction, RatPoly]:
    """Halve epsilon from 1 until the concatenation is certified for the target couple."""

    epsilon = Fraction(1)
    for step in range(budget):
        candidate = concatenate(p1, p2, epsilon)
        if certify(candidate, target, target_ap):
            logger.debug("Concatenation certified for %s at epsilon=%s (step %d)", target, epsilon, step)
            return epsilon, candidate
        epsilon /= 2
    raise SearchBudgetExhausted(f"epsilon for {target.text} with {target_ap}", budget)


def witness_or_none(builder: Any, *args: Any, **kwargs: Any) -> Optional[Witness]:
    """Run a construction and swallow the domain errors that mean 'no construction applies'."""

    try:
        return builder(*args, **kwargs)
    except DescartesLabError as exc:
        logger.debug("Construction %s declined: %s", getattr(builder, "__name__", builder), exc)
        return None
