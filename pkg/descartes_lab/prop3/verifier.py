"""Mechanical checks behind each case of the degree 9 and 10 nonrealizability facts.

For a case to pass, the two coefficients ``p_mu`` and ``p_nu`` (quadratics in a)
must never be negative together. The report records the checkable pieces:

* both leading coefficients are polynomials in v, w with positive coefficients;
* their resultant in a, after v = 1 + V and w = 1 + W, is certified positive on
  the open quadrant, so the two quadratics never share a root there;
* at a sample point the roots satisfy ``y1 < y2 < y3 < y4``.

Carrying the ordering from the sample point to the whole quadrant is a
continuity argument that the report states but does not perform.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from descartes_lab.algebra.certificates import verify_certificate
from descartes_lab.algebra.intervals import Enclosure, sqrt_enclosure, surd_sign
from descartes_lab.algebra.mpoly import (
    IntMPoly,
    check_all_coeffs_positive,
    from_text,
    resultant_in,
    shift_vars,
)
from descartes_lab.algebra.ratpoly import Number, square_free_part
from descartes_lab.algebra.sturm import count_real_roots
from descartes_lab.prop3.cases import (
    SHIFTED_VARIABLES,
    Prop3Case,
    QuadraticInA,
    coefficient_pair,
    p_coefficients,
    r_coefficients,
)
from descartes_lab.prop3.fixtures import LEMMA_RESULTANTS, LEMMA_SAMPLES, LEMMA_TANGENCIES, SAMPLE_POINT
from descartes_lab.utils.errors import RejectedInputError

logger = logging.getLogger(__name__)


class CaseChecks(BaseModel):
    leading_positive: bool
    resultant_certificate: Optional[bool] = None
    sample_ordering: bool
    b_reduction: bool


class CaseReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    d: int
    blocks: list[int]
    pair: list[int]
    kind: str
    pattern: str
    checks: CaseChecks
    passed: bool = Field(alias="pass")
    details: list[str] = Field(default_factory=list)
    covered_by: Optional[str] = None

    def to_dict(self) -> dict:
        return self.model_dump(by_alias=True)


def _at(poly: IntMPoly, sample: Mapping[str, Number]) -> Fraction:
    return poly.evaluate({name: sample[name] for name in poly.variables})


def _numeric(q: QuadraticInA, sample: Mapping[str, Number]) -> tuple[Fraction, Fraction, Fraction]:
    return _at(q.c0, sample), _at(q.c1, sample), _at(q.c2, sample)


def _discriminant(c0: Fraction, c1: Fraction, c2: Fraction) -> Fraction:
    return c1 * c1 - 4 * c2 * c0


def quadratic_resultant(first: Sequence[Fraction], second: Sequence[Fraction]) -> Fraction:
    """Sylvester resultant of two quadratics given as ascending (c0, c1, c2)."""

    a0, a1, a2 = first
    b0, b1, b2 = second
    return (a2 * b0 - a0 * b2) ** 2 - (a2 * b1 - a1 * b2) * (a1 * b0 - a0 * b1)


def root_enclosures(
    q: QuadraticInA, sample: Mapping[str, Number], width: Number = Fraction(1, 10**6)
) -> tuple[Enclosure, Enclosure]:
    """Rational enclosures of the two roots of ``q`` at ``sample``, smaller first."""

    c0, c1, c2 = _numeric(q, sample)
    disc = _discriminant(c0, c1, c2)
    if c2 <= 0 or disc <= 0:
        raise RejectedInputError(f"p_{q.index} has no two distinct real roots at {dict(sample)}")
    root = sqrt_enclosure(disc, width).scale(1 / (2 * c2))
    centre = -c1 / (2 * c2)
    return root.scale(-1).shift(centre), root.shift(centre)


def check_root_ordering(p_mu: QuadraticInA, p_nu: QuadraticInA, sample: Mapping[str, Number]) -> bool:
    """Exact test of ``y1 < y2 <= y3 < y4`` at ``sample``; equality needs a vanishing resultant."""

    first, second = _numeric(p_mu, sample), _numeric(p_nu, sample)
    for q, (c0, c1, c2) in ((p_mu, first), (p_nu, second)):
        if c2 <= 0:
            raise RejectedInputError(f"Leading coefficient of p_{q.index} is not positive at {dict(sample)}")
        if _discriminant(c0, c1, c2) <= 0:
            raise RejectedInputError(f"Discriminant of p_{q.index} is not positive at {dict(sample)}")
    (m0, m1, m2), (n0, n1, n2) = first, second
    # y3 - y2 = (-n1/2n2 + m1/2m2) - sqrt(Dn)/2n2 - sqrt(Dm)/2m2
    sign = surd_sign(
        -n1 / (2 * n2) + m1 / (2 * m2),
        -1 / (2 * n2),
        _discriminant(n0, n1, n2),
        -1 / (2 * m2),
        _discriminant(m0, m1, m2),
    )
    if sign > 0:
        return True
    if sign == 0:
        return quadratic_resultant(first, second) == 0
    return False


def check_b_reduction(case: Prop3Case) -> bool:
    """``R((x-a)^2 + b) = R(x-a)^2 + bR`` coefficientwise with every ``r_j`` positive."""

    with_b = p_coefficients(case, with_b=True)
    variables = with_b[0].variables
    without_b = [c.with_variables(variables) for c in p_coefficients(case)]
    r = r_coefficients(case.blocks, variables)
    b = IntMPoly.var(variables, "b")
    extra = [b * c for c in r] + [IntMPoly.zero(variables)] * 2
    if not len(with_b) == len(without_b) == len(extra):
        return False
    if any(full - base != added for full, base, added in zip(with_b, without_b, extra)):
        return False
    return all(check_all_coeffs_positive(c) for c in r)


def _resultant(case: Prop3Case, p_mu: QuadraticInA, p_nu: QuadraticInA) -> IntMPoly:
    variables = case.variables
    return resultant_in(p_mu.poly(variables), p_nu.poly(variables), "a")


def _three_root_certificate(case: Prop3Case, resultant: IntMPoly, details: list[str]) -> bool:
    shifted = shift_vars(resultant, SHIFTED_VARIABLES)
    if case.certificate is None:
        ok = check_all_coeffs_positive(shifted)
        negative = [c for c in shifted.coefficients() if c <= 0]
        details.append(
            "shifted resultant has all coefficients positive"
            if ok
            else f"shifted resultant has {len(negative)} non-positive coefficients"
        )
        return ok
    check = verify_certificate(shifted, case.certificate)
    if check:
        details.append(f"certificate with {len(case.certificate.pieces)} pieces leaves a nonnegative remainder")
    else:
        details.extend(check.failures)
        details.append(f"residual: {check.residual}")
    return check.valid


def _lemma_resultant(case: Prop3Case, resultant: IntMPoly, details: list[str]) -> bool:
    key = (case.d, case.blocks, (case.mu, case.nu))
    expected = from_text(LEMMA_RESULTANTS[key], resultant.variables)
    if resultant != expected:
        details.append(f"resultant {resultant} differs from {expected}")
        return False
    univariate = resultant.to_ratpoly()
    tangencies = LEMMA_TANGENCIES[key]
    positive = count_real_roots(square_free_part(univariate), 0, None)
    if positive != len(tangencies) or any(univariate.eval(t) != 0 for t in tangencies):
        details.append(f"resultant has {positive} positive roots, expected tangencies at {list(tangencies)}")
        return False
    details.append(f"resultant {resultant} vanishes for w > 0 only at {list(tangencies)}")
    return True


def _samples(case: Prop3Case) -> list[dict[str, Number]]:
    if case.kind == "three-root":
        return [dict(SAMPLE_POINT)]
    if case.kind == "lemma":
        return [{"w": w} for w in LEMMA_SAMPLES]
    return [{}]


def verify_case(case: Prop3Case) -> CaseReport:
    p_mu, p_nu = coefficient_pair(case)
    details: list[str] = []

    leading = check_all_coeffs_positive(p_mu.leading) and check_all_coeffs_positive(p_nu.leading)

    resultant_ok: Optional[bool] = None
    covered_by = None
    if case.reversal_of is not None:
        covered_by = "reversal of (" + ",".join(str(s) for s in case.reversal_of) + ")"
    elif case.kind == "three-root":
        resultant_ok = _three_root_certificate(case, _resultant(case, p_mu, p_nu), details)
    elif case.kind == "lemma":
        resultant_ok = _lemma_resultant(case, _resultant(case, p_mu, p_nu), details)
    else:
        details.append(f"resultant at v = w = 1 equals {_resultant(case, p_mu, p_nu)}")

    ordering = True
    for sample in _samples(case):
        try:
            ok = check_root_ordering(p_mu, p_nu, sample)
        except RejectedInputError as exc:
            details.append(str(exc))
            ok = False
        if ok:
            roots = root_enclosures(p_mu, sample) + root_enclosures(p_nu, sample)
            details.append(
                f"at {sample or 'v = w = 1'}: roots " + ", ".join(y.as_decimal() for y in roots)
            )
        else:
            details.append(f"root ordering fails at {sample or 'v = w = 1'}")
        ordering = ordering and ok

    b_reduction = check_b_reduction(case)
    checks = CaseChecks(
        leading_positive=leading,
        resultant_certificate=resultant_ok,
        sample_ordering=ordering,
        b_reduction=b_reduction,
    )
    passed = leading and ordering and b_reduction and resultant_ok is not False
    report = CaseReport(
        d=case.d,
        blocks=list(case.blocks),
        pair=[case.mu, case.nu],
        kind=case.kind,
        pattern=case.target_pattern.text,
        checks=checks,
        passed=passed,
        details=details,
        covered_by=covered_by,
    )
    if passed:
        logger.debug("Case %s for %s passed", case.label, case.target_pattern)
    else:
        logger.warning("Case %s for %s failed: %s", case.label, case.target_pattern, "; ".join(details))
    return report


def verify_cases(cases: Sequence[Prop3Case], threads: int = 1) -> list[CaseReport]:
    """Reports in the order of ``cases``."""

    if threads <= 1:
        return [verify_case(case) for case in cases]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(verify_case, cases))
