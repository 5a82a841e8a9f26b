"""Three-block witnesses for (0, d-2) grown from small seeds.

Appending ``x + 1`` by concatenation adds a plus to the last block and a negative
root; reversion swaps the outer blocks. From a seed realizing Sigma_{m0,n,q0}
every Sigma_{m,n,q} with m >= m0 and q >= q0 follows.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from descartes_lab.algebra.ratpoly import RatPoly, RootSpec, expand_from_spec, reverse
from descartes_lab.signs.patterns import AdmissiblePair, ThreeBlockPattern
from descartes_lab.witness.base import Witness, certify, find_epsilon
from descartes_lab.witness.shift import perturb_to_distinct
from descartes_lab.witness.theorem2 import quadratic_witness, theorem2_construct
from descartes_lab.utils.errors import RejectedInputError

logger = logging.getLogger(__name__)

SEED_WITNESSES: dict[str, Callable[[], RatPoly]] = {
    "S(1,1,1)": lambda: expand_from_spec(RootSpec((), (), ((2, 2),))),
    "S(1,2,1)": lambda: expand_from_spec(RootSpec((2,), (), ((4, 6),))),
    "S(3,4,4)": lambda: quadratic_witness(10, Fraction(39, 25), Fraction(249, 100)),
    "S(2,4,6)": lambda: quadratic_witness(11, Fraction(11, 2), Fraction(469, 100)),
}


def seed_witness(name: str) -> RatPoly:
    """The explicit polynomials quoted for the first three parts of the small-n theorem."""

    try:
        return SEED_WITNESSES[name]()
    except KeyError as exc:
        raise RejectedInputError(f"Unknown witness {name!r}; known: {sorted(SEED_WITNESSES)}") from exc


@dataclass(frozen=True)
class Seed:
    blocks: ThreeBlockPattern
    poly: RatPoly
    source: str


@lru_cache(maxsize=None)
def _seeds(n: int) -> tuple[Seed, ...]:
    if n == 1:
        base = [Seed(ThreeBlockPattern(1, 1, 1), seed_witness("S(1,1,1)"), "S(1,1,1)")]
    elif n == 2:
        base = [Seed(ThreeBlockPattern(1, 2, 1), seed_witness("S(1,2,1)"), "S(1,2,1)")]
    elif n == 3:
        poly = perturb_to_distinct(theorem2_construct(5, 1, 3))[0]
        base = [Seed(ThreeBlockPattern(1, 3, 2), poly, "thm2(5,1,3)")]
    elif n == 4:
        base = [
            Seed(ThreeBlockPattern(3, 4, 4), perturb_to_distinct(seed_witness("S(3,4,4)"))[0], "S(3,4,4)"),
            Seed(ThreeBlockPattern(2, 4, 6), perturb_to_distinct(seed_witness("S(2,4,6)"))[0], "S(2,4,6)"),
        ]
    else:
        return ()
    reversed_seeds = [
        Seed(seed.blocks.reversed(), reverse(seed.poly).monic(), f"reverse {seed.source}")
        for seed in base
        if seed.blocks.reversed() != seed.blocks
    ]
    return tuple(base + reversed_seeds)


def closure_applies(m: int, n: int, q: int) -> bool:
    d = m + n + q - 1
    if n in (1, 2):
        return True
    if n == 3:
        return d >= 5
    if n == 4:
        return (m >= 3 and q >= 3 and d >= 10) or (m == 2 and q >= 6) or (q == 2 and m >= 6)
    return False


def _grow(poly: RatPoly, blocks: ThreeBlockPattern, extra: int, budget: int = 64) -> tuple[RatPoly, ThreeBlockPattern]:
    """Append ``extra`` pluses to the last block, one concatenation at a time."""

    for _ in range(extra):
        blocks = ThreeBlockPattern(blocks.m, blocks.n, blocks.q + 1)
        ap = AdmissiblePair(0, blocks.degree - 2)
        _, poly = find_epsilon(poly, RatPoly.linear(1), blocks.pattern, ap, budget)
    return poly, blocks


def three_block_closure(m: int, n: int, q: int, budget: int = 64) -> Witness:
    target = ThreeBlockPattern(m, n, q)
    if not closure_applies(m, n, q):
        raise RejectedInputError(f"No seed covers {target.text}")
    seed = next(
        (s for s in _seeds(n) if s.blocks.m <= m and s.blocks.q <= q),
        None,
    )
    if seed is None:
        raise RejectedInputError(f"No seed covers {target.text}")
    poly, blocks = _grow(seed.poly, seed.blocks, q - seed.blocks.q, budget)
    poly, blocks = reverse(poly).monic(), blocks.reversed()
    poly, blocks = _grow(poly, blocks, m - seed.blocks.m, budget)
    poly, blocks = reverse(poly).monic(), blocks.reversed()
    ap = AdmissiblePair(0, target.degree - 2)
    if blocks != target or not certify(poly, target.pattern, ap):
        raise RejectedInputError(f"Closure from {seed.source} failed to certify {target.text}")
    logger.debug("Closure witness for %s grown from %s", target, seed.source)
    return Witness(poly, target.pattern, ap, "concat", {"seed": seed.source})
