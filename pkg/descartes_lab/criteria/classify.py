"""Decide (sign pattern, admissible pair) couples from the known criteria.

Nonrealizability is only ever concluded from a stated theorem or fact; a search
that comes back empty leaves the couple Unknown.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Optional

from descartes_lab.criteria.bounds import DEFAULT_WIDTH, CriterionTrace, L_value, kappa_value, trace_for
from descartes_lab.signs.patterns import (
    AdmissiblePair,
    SignPattern,
    ThreeBlockPattern,
    require_admissible,
)
from descartes_lab.utils.errors import CriterionConflictError
from descartes_lab.witness.base import SCHEMA, Witness, witness_or_none
from descartes_lab.witness.builder import witness_for

logger = logging.getLogger(__name__)


class Status(str, Enum):
    REALIZABLE = "Realizable"
    NONREALIZABLE = "NonRealizable"
    UNKNOWN = "Unknown"


class Reason(str, Enum):
    EQ2_L_POSITIVE = "Eq2-L-positive"
    KAPPA_GE_4 = "Kappa-ge-4"
    THM1_PART1 = "Thm1-part(1)"
    THM1_PART2 = "Thm1-part(2)"
    THM1_PART3 = "Thm1-part(3)"
    THM1_PART4 = "Thm1-part(4)"
    PROP1 = "Prop1"
    PROP3_FACT = "Prop3-fact"
    PAPER_FACT = "Paper-fact"
    WITNESS_FOUND = "Witness-found"
    ORACLE_EXHAUSTED = "Oracle-exhausted-unknown"
    EXAMPLE_1 = "Example-1"
    DOWNWARD_CLOSURE = "Downward-closure"
    DUALITY = "Duality"
    NOT_COVERED = "Not-covered"


# (degree, m, n, q) of three-block patterns known not to realize (0, d-2)
PROP3_FACTS = frozenset({(9, 3, 4, 3), (9, 2, 4, 4), (9, 4, 4, 2), (10, 2, 4, 5), (10, 5, 4, 2)})


@dataclass
class Classification:
    pattern: SignPattern
    ap: AdmissiblePair
    status: Status
    reason: Reason
    trace: Optional[CriterionTrace] = None
    witness: Optional[Witness] = None
    detail: Optional[str] = None

    @property
    def degree(self) -> int:
        return self.pattern.degree

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "schema": SCHEMA,
            "degree": self.degree,
            "pattern": self.pattern.text,
            "ap": self.ap.as_list(),
            "status": self.status.value,
            "reason": self.reason.value,
        }
        blocks = self.pattern.three_block()
        if blocks is not None:
            payload["blocks"] = blocks.text
        if self.witness is not None:
            payload["witness"] = self.witness.poly.to_text()
            payload["construction"] = self.witness.construction
        if self.trace is not None:
            payload["trace"] = self.trace.to_dict()
        if self.detail:
            payload["detail"] = self.detail
        return payload


def realizable_reasons(blocks: ThreeBlockPattern) -> list[Reason]:
    """Sufficient conditions for (Sigma_{m,n,q}, (0, d-2)), applied to the pattern and its reverse."""

    m, n, q, d = blocks.m, blocks.n, blocks.q, blocks.degree
    reasons = []
    if n in (1, 2):
        reasons.append(Reason.THM1_PART1)
    if n == 3 and d >= 5:
        reasons.append(Reason.THM1_PART2)
    if n == 4 and ((m >= 3 and q >= 3 and d >= 10) or (m == 2 and q >= 6) or (q == 2 and m >= 6)):
        reasons.append(Reason.THM1_PART3)
    if L_value(d, m, n) > 0 or L_value(d, q, n) > 0:
        reasons.append(Reason.EQ2_L_POSITIVE)
    return reasons


def nonrealizable_reasons(blocks: ThreeBlockPattern) -> list[Reason]:
    m, n, q, d = blocks.m, blocks.n, blocks.q, blocks.degree
    reasons = []
    if (d == 4 and (m, n, q) == (1, 3, 1)) or (5 <= d <= 8 and n == 4):
        reasons.append(Reason.PAPER_FACT)
    if (d, m, n, q) in PROP3_FACTS:
        reasons.append(Reason.PROP3_FACT)
    if (m == 1 or q == 1) and n >= 4:
        reasons.append(Reason.THM1_PART4)
    if m + q < d and kappa_value(d, m, q) >= 4:
        reasons.append(Reason.KAPPA_GE_4)
    return reasons


def decide_top_pair(blocks: ThreeBlockPattern) -> tuple[Status, Optional[Reason]]:
    """Status of (Sigma_{m,n,q}, (0, d-2)); raises when criteria disagree."""

    yes = realizable_reasons(blocks)
    no = nonrealizable_reasons(blocks)
    if yes and no:
        raise CriterionConflictError([r.value for r in yes], [r.value for r in no])
    if no:
        return Status.NONREALIZABLE, no[0]
    if yes:
        return Status.REALIZABLE, yes[0]
    return Status.UNKNOWN, None


WitnessBuilder = Callable[[SignPattern, AdmissiblePair], Witness]
Searcher = Callable[[SignPattern, AdmissiblePair], Optional[Witness]]


def classify(
    sigma: SignPattern,
    ap: AdmissiblePair,
    *,
    with_witness: bool = False,
    search: Optional[Searcher] = None,
    builder: Optional[WitnessBuilder] = None,
    width: Fraction = DEFAULT_WIDTH,
) -> Classification:
    """Classify one couple; ``search`` is consulted only for couples no criterion decides."""

    require_admissible(sigma, ap)
    result = _classify(sigma, ap, width)
    if result.status is Status.REALIZABLE and with_witness:
        result.witness = witness_or_none(builder or witness_for, sigma, ap)
    if result.status is Status.UNKNOWN and search is not None:
        found = search(sigma, ap)
        if found is not None and found.verify():
            result.status, result.reason, result.witness = Status.REALIZABLE, Reason.WITNESS_FOUND, found
        else:
            result.reason = Reason.ORACLE_EXHAUSTED
    logger.debug("Classified %s %s as %s (%s)", sigma, ap, result.status.value, result.reason.value)
    return result


def _classify(sigma: SignPattern, ap: AdmissiblePair, width: Fraction) -> Classification:
    c, p = sigma.changes_preservations()
    d = sigma.degree

    def done(status: Status, reason: Reason, **extra: Any) -> Classification:
        return Classification(sigma, ap, status, reason, **extra)

    if (ap.pos, ap.neg) == (c, p):
        return done(Status.REALIZABLE, Reason.PROP1)
    if c == 1:
        return done(Status.REALIZABLE, Reason.PROP1)
    if c == 0:
        return done(Status.REALIZABLE, Reason.EXAMPLE_1)

    blocks = sigma.three_block()
    if blocks is not None:
        if ap.pos != 0:
            return done(Status.UNKNOWN, Reason.NOT_COVERED)
        trace = trace_for(d, blocks.m, blocks.n, width)
        status, reason = decide_top_pair(blocks)
        if ap.neg == d - 2:
            if reason is None:
                return done(Status.UNKNOWN, Reason.NOT_COVERED, trace=trace)
            return done(status, reason, trace=trace)
        if status is Status.REALIZABLE:
            return done(Status.REALIZABLE, Reason.DOWNWARD_CLOSURE, trace=trace, detail=f"(0,{d - 2}) by {reason.value}")
        return done(Status.UNKNOWN, Reason.NOT_COVERED, trace=trace)

    dual = sigma.dual()
    if p <= 2:
        inner = _classify(dual, ap.dual(), width)
        detail = f"via {dual.text} with {ap.dual()}: {inner.reason.value}"
        if inner.status is Status.UNKNOWN:
            return done(Status.UNKNOWN, Reason.NOT_COVERED, trace=inner.trace, detail=detail)
        return done(inner.status, Reason.DUALITY, trace=inner.trace, detail=detail)
    return done(Status.UNKNOWN, Reason.NOT_COVERED)
