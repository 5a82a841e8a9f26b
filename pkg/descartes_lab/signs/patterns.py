"""Sign patterns, three-block patterns and admissible pairs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from descartes_lab.algebra.ratpoly import RatPoly
from descartes_lab.utils.errors import (
    InadmissiblePairError,
    NotASignPatternError,
    RejectedInputError,
)

_BLOCK_FORM = re.compile(r"^S\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)$", re.IGNORECASE)


@dataclass(frozen=True, order=True)
class SignPattern:
    """Coefficient signs from the leading one down to the constant term (+1 / -1)."""

    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.signs) < 2:
            raise RejectedInputError("A sign pattern needs at least two signs")
        if any(s not in (1, -1) for s in self.signs):
            raise RejectedInputError(f"Signs must be +1 or -1, got {self.signs}")
        if self.signs[0] != 1:
            raise RejectedInputError("A sign pattern starts with +")

    @classmethod
    def from_text(cls, text: str) -> SignPattern:
        cleaned = text.strip()
        match = _BLOCK_FORM.match(cleaned)
        if match:
            return ThreeBlockPattern(*(int(g) for g in match.groups())).pattern
        if not cleaned or set(cleaned) - {"+", "-"}:
            raise RejectedInputError(f"Pattern '{text}' is neither a +/- string nor S(m,n,q)")
        return cls(tuple(1 if ch == "+" else -1 for ch in cleaned))

    @property
    def degree(self) -> int:
        return len(self.signs) - 1

    @property
    def text(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def __str__(self) -> str:
        return self.text

    @property
    def changes(self) -> int:
        return sum(1 for a, b in zip(self.signs, self.signs[1:]) if a != b)

    @property
    def preservations(self) -> int:
        return self.degree - self.changes

    def changes_preservations(self) -> tuple[int, int]:
        return self.changes, self.preservations

    @property
    def constant_sign(self) -> int:
        return self.signs[-1]

    def reversed(self) -> SignPattern:
        """Pattern of the reverted polynomial, normalized to start with +."""

        flipped = self.signs[::-1]
        return SignPattern(tuple(s * flipped[0] for s in flipped))

    def dual(self) -> SignPattern:
        """Pattern of (-1)^d P(-x): every odd position from the leading one flips."""

        return SignPattern(tuple(s if i % 2 == 0 else -s for i, s in enumerate(self.signs)))

    def three_block(self) -> Optional[ThreeBlockPattern]:
        if self.changes != 2 or self.constant_sign != 1:
            return None
        m = self.signs.index(-1)
        n = self.signs[m:].index(1)
        return ThreeBlockPattern(m, n, len(self.signs) - m - n)


@dataclass(frozen=True, order=True)
class ThreeBlockPattern:
    """m pluses, then n minuses, then q pluses."""

    m: int
    n: int
    q: int

    def __post_init__(self) -> None:
        if min(self.m, self.n, self.q) < 1:
            raise RejectedInputError(f"Block sizes must be positive, got ({self.m},{self.n},{self.q})")

    @property
    def degree(self) -> int:
        return self.m + self.n + self.q - 1

    @property
    def pattern(self) -> SignPattern:
        return SignPattern((1,) * self.m + (-1,) * self.n + (1,) * self.q)

    def reversed(self) -> ThreeBlockPattern:
        return ThreeBlockPattern(self.q, self.n, self.m)

    @property
    def text(self) -> str:
        return f"S({self.m},{self.n},{self.q})"

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True, order=True)
class AdmissiblePair:
    pos: int
    neg: int

    def __post_init__(self) -> None:
        if self.pos < 0 or self.neg < 0:
            raise RejectedInputError("Root counts are nonnegative")

    @classmethod
    def from_text(cls, text: str) -> AdmissiblePair:
        try:
            pos, neg = (int(part) for part in text.split(","))
        except ValueError as exc:
            raise RejectedInputError(f"Admissible pair must look like 'pos,neg', got {text!r}") from exc
        return cls(pos, neg)

    def dual(self) -> AdmissiblePair:
        return AdmissiblePair(self.neg, self.pos)

    def as_list(self) -> list[int]:
        return [self.pos, self.neg]

    def __str__(self) -> str:
        return f"({self.pos},{self.neg})"


def changes_preservations(sigma: SignPattern) -> tuple[int, int]:
    return sigma.changes_preservations()


def is_admissible(sigma: SignPattern, ap: AdmissiblePair) -> bool:
    c, p = sigma.changes_preservations()
    parity = 1 if ap.pos % 2 == 0 else -1
    return (
        ap.pos <= c
        and ap.neg <= p
        and (c - ap.pos) % 2 == 0
        and (p - ap.neg) % 2 == 0
        and parity == sigma.constant_sign
    )


def require_admissible(sigma: SignPattern, ap: AdmissiblePair) -> None:
    if not is_admissible(sigma, ap):
        raise InadmissiblePairError(f"{ap} is not admissible for {sigma.text}")


def admissible_pairs(sigma: SignPattern) -> list[AdmissiblePair]:
    """Every pair allowed by Descartes' rule for ``sigma``, largest first."""

    c, p = sigma.changes_preservations()
    return [AdmissiblePair(pos, neg) for pos in range(c, -1, -2) for neg in range(p, -1, -2)]


def pattern_of(poly: RatPoly) -> SignPattern:
    if poly.degree < 1:
        raise NotASignPatternError("degree must be at least 1")
    lead = poly.leading
    signs = []
    for j in range(poly.degree, -1, -1):
        c = poly.coeff(j)
        if c == 0:
            raise NotASignPatternError(f"coefficient of x^{j} is zero")
        signs.append(1 if (c > 0) == (lead > 0) else -1)
    return SignPattern(tuple(signs))


def parse_pattern(text: str, degree: Optional[int] = None) -> SignPattern:
    sigma = SignPattern.from_text(text)
    if degree is not None and sigma.degree != degree:
        raise RejectedInputError(f"Pattern {sigma.text} has degree {sigma.degree}, expected {degree}")
    return sigma


def enumerate_patterns(degree: int) -> Iterator[SignPattern]:
    """All 2^degree patterns in lexicographic text order ('+' before '-')."""

    for tail in product("+-", repeat=degree):
        yield SignPattern.from_text("+" + "".join(tail))


def enumerate_three_block(degree: int) -> Iterator[ThreeBlockPattern]:
    """Every Sigma_{m,n,q} of the given degree, in the same text order as enumerate_patterns."""

    blocks = [
        ThreeBlockPattern(m, n, degree + 1 - m - n)
        for m in range(1, degree)
        for n in range(1, degree + 1 - m)
    ]
    return iter(sorted(blocks, key=lambda b: b.pattern.text))
