"""Independent witness search by root placement.

Both searches enumerate ``RootSpec`` candidates in a fixed order, expand them
and keep the first one whose sign pattern and Sturm-certified root counts
match. Coming back empty says nothing about realizability.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, islice, product
from math import comb
from typing import Callable, Iterable, Iterator, Optional

from descartes_lab.algebra.intervals import sqrt_enclosure
from descartes_lab.algebra.ratpoly import RatPoly, RootSpec, expand_from_spec
from descartes_lab.signs.patterns import AdmissiblePair, SignPattern, pattern_of, require_admissible
from descartes_lab.utils.errors import NotASignPatternError
from descartes_lab.witness.base import Witness, certify

logger = logging.getLogger(__name__)

CHUNK_SIZE = 256

Candidate = tuple[int, RootSpec]


@dataclass(frozen=True)
class GridSpec:
    """Root moduli for real roots and (z, y) pairs for quadratic factors ``x^2 - z x + y``."""

    roots: tuple[Fraction, ...]
    pairs: tuple[tuple[Fraction, Fraction], ...]

    @classmethod
    def default(cls) -> GridSpec:
        return cls.build(step=Fraction(1, 2), top=Fraction(5), y_top=Fraction(10))

    @classmethod
    def build(cls, *, step: Fraction, top: Fraction, y_top: Fraction) -> GridSpec:
        step, top, y_top = Fraction(step), Fraction(top), Fraction(y_top)
        roots = tuple(step * k for k in range(1, int(top / step) + 1))
        ys = [step * k for k in range(1, int(y_top / step) + 1)]
        zs = [sign * r for r in roots for sign in (1, -1)]
        pairs = tuple((z, y) for z in zs for y in ys if z * z < 4 * y)
        return cls(roots, pairs)

    def size(self, ap: AdmissiblePair, degree: int) -> int:
        complex_count = (degree - ap.pos - ap.neg) // 2
        n = len(self.pairs)
        return comb(len(self.roots), ap.neg) * comb(len(self.roots), ap.pos) * comb(n + complex_count - 1, complex_count)


def _matches(spec: RootSpec, sigma: SignPattern, ap: AdmissiblePair) -> Optional[RatPoly]:
    poly = expand_from_spec(spec)
    try:
        if pattern_of(poly) != sigma:
            return None
    except NotASignPatternError:
        return None
    return poly if certify(poly, sigma, ap) else None


def _scan(sigma: SignPattern, ap: AdmissiblePair, chunk: list[Candidate]) -> Optional[tuple[int, RootSpec, RatPoly]]:
    for index, spec in chunk:
        poly = _matches(spec, sigma, ap)
        if poly is not None:
            return index, spec, poly
    return None


def _chunks(candidates: Iterable[Candidate], size: int) -> Iterator[list[Candidate]]:
    iterator = iter(candidates)
    while True:
        chunk = list(islice(iterator, size))
        if not chunk:
            return
        yield chunk


def _run(
    sigma: SignPattern,
    ap: AdmissiblePair,
    specs: Iterable[RootSpec],
    budget: int,
    workers: int,
    method: str,
    extra: dict,
) -> Optional[Witness]:
    require_admissible(sigma, ap)
    if budget <= 0:
        return None
    candidates = enumerate(islice(specs, budget))
    chunks = _chunks(candidates, CHUNK_SIZE)
    workers = max(1, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        while True:
            wave = list(islice(chunks, workers))
            if not wave:
                break
            # map keeps submission order, so the first hit has the smallest index
            for hit in pool.map(lambda chunk: _scan(sigma, ap, chunk), wave):
                if hit is not None:
                    index, spec, poly = hit
                    logger.info("%s search found a witness for %s %s at candidate %d", method, sigma, ap, index)
                    parameters = {
                        "method": method,
                        "index": index,
                        "neg_roots": [str(u) for u in spec.neg_roots],
                        "pos_roots": [str(r) for r in spec.pos_roots],
                        "complex_pairs": [[str(z), str(y)] for z, y in spec.complex_pairs],
                        **extra,
                    }
                    return Witness(poly, sigma, ap, "search", parameters)
    logger.info("%s search exhausted %d candidates for %s %s", method, budget, sigma, ap)
    return None


def grid_specs(sigma: SignPattern, ap: AdmissiblePair, grid: GridSpec) -> Iterator[RootSpec]:
    """Candidates in product order: negative roots, then positive roots, then quadratic factors."""

    complex_count = (sigma.degree - ap.pos - ap.neg) // 2
    for neg, pos, pairs in product(
        combinations(grid.roots, ap.neg),
        combinations(grid.roots, ap.pos),
        combinations_with_replacement(grid.pairs, complex_count),
    ):
        yield RootSpec(neg, pos, pairs)


def grid_search(
    sigma: SignPattern,
    ap: AdmissiblePair,
    grid: Optional[GridSpec] = None,
    budget: int = 20000,
    workers: int = 1,
) -> Optional[Witness]:
    grid = grid or GridSpec.default()
    return _run(sigma, ap, grid_specs(sigma, ap, grid), budget, workers, "grid", {})


def _distinct(draw: Callable[[], Fraction], count: int) -> tuple[Fraction, ...]:
    values: list[Fraction] = []
    while len(values) < count:
        value = draw()
        if value not in values:
            values.append(value)
    return tuple(values)


def _uniform_spec(rng: random.Random, degree: int, ap: AdmissiblePair) -> RootSpec:
    def modulus() -> Fraction:
        return Fraction(rng.randint(1, 80), rng.choice((4, 8, 16)))

    pairs = []
    for _ in range((degree - ap.pos - ap.neg) // 2):
        z = modulus() * rng.choice((1, -1))
        pairs.append((z, z * z / 4 + Fraction(rng.randint(1, 64), 16)))
    return RootSpec(_distinct(modulus, ap.neg), _distinct(modulus, ap.pos), tuple(pairs))


def _clustered_spec(rng: random.Random, degree: int, ap: AdmissiblePair) -> RootSpec:
    """Real roots packed near 1 and a first quadratic factor close to a double root."""

    reach = max(8, 2 * max(ap.neg, ap.pos))
    # offsets stay within [-reach, reach], so every root lies in [1/2, 3/2]
    spread = min(Fraction(1, 2 ** rng.randint(4, 30)), Fraction(1, 2 * reach))

    def near_one() -> Fraction:
        return 1 + spread * rng.randint(-reach, reach)

    complex_count = (degree - ap.pos - ap.neg) // 2
    pairs = []
    for i in range(complex_count):
        y = Fraction(rng.randint(1, degree * degree), 4) if i == 0 else Fraction(rng.randint(1, 64), 4)
        rho = Fraction(1, 2 ** rng.randint(1, 24))
        z = 2 * sqrt_enclosure(y, Fraction(1, 2**32)).lo * (1 - rho)
        pairs.append((z, y))
    return RootSpec(_distinct(near_one, ap.neg), _distinct(near_one, ap.pos), tuple(pairs))


def random_specs(sigma: SignPattern, ap: AdmissiblePair, seed: int) -> Iterator[RootSpec]:
    """Alternating uniform and clustered draws from ``random.Random(seed)``."""

    rng = random.Random(seed)
    trial = 0
    while True:
        maker = _uniform_spec if trial % 2 == 0 else _clustered_spec
        yield maker(rng, sigma.degree, ap)
        trial += 1


def random_search(
    sigma: SignPattern,
    ap: AdmissiblePair,
    seed: int = 0,
    budget: int = 20000,
    workers: int = 1,
) -> Optional[Witness]:
    return _run(sigma, ap, random_specs(sigma, ap, seed), budget, workers, "random", {"seed": seed})


def make_searcher(
    method: str = "random", *, seed: int = 0, budget: int = 20000, workers: int = 1
) -> Callable[[SignPattern, AdmissiblePair], Optional[Witness]]:
    """A search callable suitable for ``classify(..., search=...)``."""

    if method == "grid":
        return lambda sigma, ap: grid_search(sigma, ap, budget=budget, workers=workers)
    if method == "random":
        return lambda sigma, ap: random_search(sigma, ap, seed=seed, budget=budget, workers=workers)
    raise ValueError(f"Unknown search method: {method}")
