from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from descartes_lab.algebra.ratpoly import Number
from descartes_lab.utils.errors import RejectedInputError


@dataclass(frozen=True)
class Enclosure:
    """Closed rational interval [lo, hi] known to contain a real number."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise RejectedInputError(f"Empty enclosure [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value: Number) -> Enclosure:
        value = Fraction(value)
        return cls(value, value)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_exact(self) -> bool:
        return self.lo == self.hi

    def scale(self, factor: Number) -> Enclosure:
        factor = Fraction(factor)
        low, high = self.lo * factor, self.hi * factor
        return Enclosure(min(low, high), max(low, high))

    def shift(self, offset: Number) -> Enclosure:
        return Enclosure(self.lo + offset, self.hi + offset)

    def square(self) -> Enclosure:
        if self.lo >= 0:
            return Enclosure(self.lo**2, self.hi**2)
        if self.hi <= 0:
            return Enclosure(self.hi**2, self.lo**2)
        return Enclosure(Fraction(0), max(self.lo**2, self.hi**2))

    def strictly_below(self, other: Enclosure) -> bool:
        return self.hi < other.lo

    def disjoint_from(self, other: Enclosure) -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def contains(self, value: Number) -> bool:
        return self.lo <= value <= self.hi

    def as_decimal(self, digits: int = 6) -> str:
        return f"{float(self.midpoint):.{digits}f}"


def exact_sqrt(value: Number) -> Fraction | None:
    """The rational square root of ``value`` when it exists."""

    value = Fraction(value)
    if value < 0:
        return None
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def sqrt_enclosure(value: Number, width: Number = Fraction(1, 10**6)) -> Enclosure:
    """Rigorous enclosure of sqrt(value); degenerate when value is a rational square."""

    value = Fraction(value)
    width = Fraction(width)
    if value < 0:
        raise RejectedInputError("Square root of a negative number")
    root = exact_sqrt(value)
    if root is not None:
        return Enclosure(root, root)
    # sqrt(n/d) = sqrt(n*d)/d, so a scale 2^k with 1/(d 2^k) <= width suffices
    n, d = value.numerator, value.denominator
    k = 0
    while Fraction(1, d * 2**k) > width:
        k += 1
    floor_root = isqrt(n * d * 4**k)
    scale = d * 2**k
    return Enclosure(Fraction(floor_root, scale), Fraction(floor_root + 1, scale))


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def _sign_one_surd(u: Fraction, p: Fraction, x: Fraction) -> int:
    """Sign of u + p*sqrt(x) for x >= 0."""

    if p == 0 or x == 0:
        return _sign(u)
    sp = _sign(p)
    if u == 0 or _sign(u) == sp:
        return sp
    diff = u * u - p * p * x
    if diff > 0:
        return _sign(u)
    if diff < 0:
        return sp
    return 0


def surd_sign(u: Number, p: Number = 0, x: Number = 0, q: Number = 0, y: Number = 0) -> int:
    """Exact sign of ``u + p*sqrt(x) + q*sqrt(y)`` for rationals with x, y >= 0."""

    u, p, x, q, y = (Fraction(v) for v in (u, p, x, q, y))
    if x < 0 or y < 0:
        raise RejectedInputError("Surd radicands must be nonnegative")
    first = _sign_one_surd(u, p, x)
    if q == 0 or y == 0:
        return first
    second = _sign(q)
    if first == 0:
        return second
    if first == second:
        return first
    # opposite signs: compare (u + p sqrt x)^2 with q^2 y
    magnitude = _sign_one_surd(u * u + p * p * x - q * q * y, 2 * u * p, x)
    if magnitude > 0:
        return first
    if magnitude < 0:
        return second
    return 0
