"""Named verification batteries run by ``verify`` and the ``verify_suite`` tool."""

from __future__ import annotations

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Callable

from pydantic import BaseModel, Field

from descartes_lab.algebra.ratpoly import from_roots, reverse, scale_x
from descartes_lab.algebra.sturm import count_pos_neg
from descartes_lab.criteria.bounds import L_value, kappa_alt_form, kappa_value
from descartes_lab.prop3.fixtures import all_cases, all_ones_cases, lemma_cases
from descartes_lab.prop3.inequalities import (
    check_e1e2,
    check_e_inequality,
    check_induction_step,
    check_newton_e,
    check_newton_quadratic,
    newton_inequalities,
)
from descartes_lab.prop3.verifier import verify_cases
from descartes_lab.signs.patterns import AdmissiblePair, ThreeBlockPattern, pattern_of
from descartes_lab.utils.errors import DescartesLabError
from descartes_lab.witness.base import certify
from descartes_lab.witness.builder import theorem2_witness
from descartes_lab.witness.shift import shift_to_ap

logger = logging.getLogger(__name__)

SUITES = ("prop3", "thm2-sweep", "inequalities", "lemmas")


class SuiteReport(BaseModel):
    suite: str
    passed: bool
    total: int
    failures: list[str] = Field(default_factory=list)
    results: list[dict[str, Any]] = Field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return self.model_dump()


def _report_cases(suite: str, cases: list, threads: int) -> SuiteReport:
    reports = verify_cases(cases, threads=threads)
    failures = [f"d={r.d} {r.pattern} blocks {tuple(r.blocks)}" for r in reports if not r.passed]
    return SuiteReport(
        suite=suite,
        passed=not failures,
        total=len(reports),
        failures=failures,
        results=[r.to_dict() for r in reports],
    )


def run_prop3(threads: int = 1) -> SuiteReport:
    return _report_cases("prop3", all_cases(), threads)


def run_lemmas(threads: int = 1) -> SuiteReport:
    return _report_cases("lemmas", lemma_cases() + all_ones_cases(), threads)


def thm2_triples(max_degree: int) -> list[tuple[int, int, int]]:
    """Every (d, m, n) with q >= 1 and L(d, m, n) > 0 for 4 <= d <= max_degree."""

    return [
        (d, m, n)
        for d in range(4, max_degree + 1)
        for m in range(1, d)
        for n in range(1, d + 1 - m)
        if L_value(d, m, n) > 0
    ]


def _sweep_one(triple: tuple[int, int, int]) -> dict[str, Any]:
    d, m, n = triple
    blocks = ThreeBlockPattern(m, n, d + 1 - m - n)
    result: dict[str, Any] = {"d": d, "m": m, "n": n, "pattern": blocks.text}
    try:
        witness = theorem2_witness(blocks)
        result["top"] = witness.verify()
        poly, _ = shift_to_ap(witness.poly, 1)
        result["shifted"] = certify(poly, blocks.pattern, AdmissiblePair(0, d - 4))
    except DescartesLabError as exc:
        result["error"] = str(exc)
        result["top"] = False
    result["passed"] = bool(result.get("top")) and result.get("shifted", True)
    return result


def run_thm2_sweep(max_degree: int = 30, threads: int = 1) -> SuiteReport:
    triples = thm2_triples(max_degree)
    logger.info("Sweeping %d triples with L > 0 up to degree %d", len(triples), max_degree)
    if threads <= 1:
        results = [_sweep_one(t) for t in triples]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_sweep_one, triples))
    failures = [f"d={r['d']} {r['pattern']}" for r in results if not r["passed"]]
    return SuiteReport(
        suite="thm2-sweep",
        passed=not failures,
        total=len(results),
        failures=failures,
        results=results,
    )


def _rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 1000), rng.randint(1, 100))


def run_inequalities(seed: int = 0, trials: int = 10000) -> SuiteReport:
    """Randomized exact battery; each trial draws fresh positive rationals."""

    rng = random.Random(seed)
    checks: dict[str, Callable[[], bool]] = {
        "e-inequality": lambda: check_e_inequality([_rational(rng) for _ in range(rng.randint(4, 12))]),
        "e1e2": lambda: check_e1e2([_rational(rng) for _ in range(3)]),
        "newton-e": lambda: check_newton_e([_rational(rng) for _ in range(rng.randint(2, 12))]),
        "induction-step": lambda: check_induction_step(
            _rational(rng), [_rational(rng) for _ in range(rng.randint(1, 12))]
        ),
        "newton": lambda: _newton_trial(rng),
        "kappa-alt-form": lambda: _kappa_trial(rng),
        "reverse-scale": lambda: _reverse_scale_trial(rng),
    }
    counts = {name: 0 for name in checks}
    failures: list[str] = []
    names = list(checks)
    for trial in range(trials):
        name = names[trial % len(names)]
        if checks[name]():
            counts[name] += 1
        else:
            failures.append(f"{name} failed on trial {trial}")
    return SuiteReport(
        suite="inequalities",
        passed=not failures,
        total=trials,
        failures=failures,
        results=[{"check": name, "passed": count} for name, count in counts.items()],
    )


def _distinct_roots(rng: random.Random, count: int) -> list[Fraction]:
    roots: set[Fraction] = set()
    while len(roots) < count:
        roots.add(_rational(rng))
    return sorted(roots)


def _newton_trial(rng: random.Random) -> bool:
    poly = from_roots(_distinct_roots(rng, rng.randint(2, 10)))
    return newton_inequalities(poly) and check_newton_quadratic(poly)


def _kappa_trial(rng: random.Random) -> bool:
    d = rng.randint(4, 60)
    m = rng.randint(1, d - 2)
    n = rng.randint(2, d - m)
    q = d + 1 - m - n
    return (kappa_value(d, m, q) >= 4) == (kappa_alt_form(d, m, n) <= 0)


def _reverse_scale_trial(rng: random.Random) -> bool:
    neg = _distinct_roots(rng, rng.randint(0, 4))
    pos = _distinct_roots(rng, rng.randint(0, 4))
    if not neg and not pos:
        neg = [Fraction(1)]
    poly = from_roots(neg, pos)
    counts = (len(pos), len(neg))
    chi = _rational(rng)
    try:
        same_pattern = pattern_of(reverse(poly)).signs == tuple(
            s * pattern_of(poly).signs[-1] for s in reversed(pattern_of(poly).signs)
        )
    except DescartesLabError:
        # a vanishing coefficient has no sign pattern; counts still have to agree
        same_pattern = True
    return (
        same_pattern
        and count_pos_neg(reverse(poly)) == counts
        and count_pos_neg(scale_x(poly, chi)) == counts
    )


def run_suite(name: str, *, threads: int = 1, seed: int = 0, max_degree: int = 30, trials: int = 10000) -> SuiteReport:
    if name == "prop3":
        return run_prop3(threads)
    if name == "lemmas":
        return run_lemmas(threads)
    if name == "thm2-sweep":
        return run_thm2_sweep(max_degree, threads)
    if name == "inequalities":
        return run_inequalities(seed, trials)
    raise ValueError(f"Unknown suite: {name}")
