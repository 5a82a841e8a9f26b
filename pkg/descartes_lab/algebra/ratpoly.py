"""Univariate polynomials with exact rational coefficients.

Coefficients are stored in ascending order: ``coeffs[j]`` multiplies ``x**j``.
The descending convention ``P = x^d + sum p_j x^(d-j)`` is available through
:meth:`RatPoly.descending`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

from descartes_lab.utils.errors import RejectedInputError, ZeroConstantTermError

Number = Union[int, Fraction]


def _to_fraction(value: Number | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise RejectedInputError(f"Coefficient {value!r} is not an exact rational")


@dataclass(frozen=True)
class RatPoly:
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        values = [_to_fraction(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Number | str]) -> RatPoly:
        return cls(tuple(_to_fraction(c) for c in coeffs))

    @classmethod
    def from_descending(cls, coeffs: Iterable[Number | str]) -> RatPoly:
        return cls.from_coeffs(list(coeffs)[::-1])

    @classmethod
    def constant(cls, value: Number) -> RatPoly:
        return cls((_to_fraction(value),))

    @classmethod
    def x(cls) -> RatPoly:
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def linear(cls, root_shift: Number) -> RatPoly:
        """The monic factor ``x + root_shift``."""

        return cls((_to_fraction(root_shift), Fraction(1)))

    # ------------------------------------------------------------------ basics
    @property
    def degree(self) -> int:
        return max(len(self.coeffs) - 1, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coeff(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def descending(self, j: int) -> Fraction:
        """Coefficient ``p_j`` of ``x^(d-j)``."""

        return self.coeff(self.degree - j)

    def __call__(self, x: Number) -> Fraction:
        return self.eval(x)

    def eval(self, x: Number) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def sign_at(self, x: Number) -> int:
        value = self.eval(x)
        return (value > 0) - (value < 0)

    # -------------------------------------------------------------- arithmetic
    def __neg__(self) -> RatPoly:
        return RatPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: RatPoly | Number) -> RatPoly:
        other = _lift(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(tuple(self.coeff(j) + other.coeff(j) for j in range(size)))

    __radd__ = __add__

    def __sub__(self, other: RatPoly | Number) -> RatPoly:
        return self + (-_lift(other))

    def __rsub__(self, other: Number) -> RatPoly:
        return _lift(other) - self

    def __mul__(self, other: RatPoly | Number) -> RatPoly:
        if not isinstance(other, RatPoly):
            factor = _to_fraction(other)
            return RatPoly(tuple(c * factor for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RatPoly:
        if exponent < 0:
            raise RejectedInputError("Negative powers are not polynomials")
        result = RatPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod(self, divisor: RatPoly) -> tuple[RatPoly, RatPoly]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [Fraction(0)] * max(len(remainder) - len(divisor.coeffs) + 1, 0)
        lead = divisor.leading
        shift_max = len(divisor.coeffs) - 1
        while len(remainder) - 1 >= shift_max and remainder:
            shift = len(remainder) - 1 - shift_max
            factor = remainder[-1] / lead
            quotient[shift] = factor
            for j, c in enumerate(divisor.coeffs):
                remainder[shift + j] -= factor * c
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return RatPoly(tuple(quotient)), RatPoly(tuple(remainder))

    def __floordiv__(self, divisor: RatPoly) -> RatPoly:
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: RatPoly) -> RatPoly:
        return self.divmod(divisor)[1]

    def derivative(self) -> RatPoly:
        return RatPoly(tuple(j * c for j, c in enumerate(self.coeffs) if j > 0))

    def monic(self) -> RatPoly:
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    def compose_neg(self) -> RatPoly:
        """``P(-x)``."""

        return RatPoly(tuple(c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs)))

    # ------------------------------------------------------------ transforms
    def reverse(self) -> RatPoly:
        return reverse(self)

    def scale_x(self, chi: Number) -> RatPoly:
        return scale_x(self, chi)

    def to_text(self) -> str:
        return to_text(self)

    def __str__(self) -> str:
        return self.to_text()


def _lift(value: RatPoly | Number) -> RatPoly:
    return value if isinstance(value, RatPoly) else RatPoly.constant(value)


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class RootSpec:
    """Root placement: ``-u`` for every ``u`` in neg_roots, ``r`` for r in pos_roots,
    and a factor ``x^2 - z x + y`` for every ``(z, y)`` in complex_pairs."""

    neg_roots: tuple[Fraction, ...] = ()
    pos_roots: tuple[Fraction, ...] = ()
    complex_pairs: tuple[tuple[Fraction, Fraction], ...] = ()
    distinct: bool = True

    def __post_init__(self) -> None:
        neg = tuple(_to_fraction(u) for u in self.neg_roots)
        pos = tuple(_to_fraction(r) for r in self.pos_roots)
        pairs = tuple((_to_fraction(z), _to_fraction(y)) for z, y in self.complex_pairs)
        object.__setattr__(self, "neg_roots", neg)
        object.__setattr__(self, "pos_roots", pos)
        object.__setattr__(self, "complex_pairs", pairs)
        if any(u <= 0 for u in neg) or any(r <= 0 for r in pos):
            raise RejectedInputError("Root moduli must be positive rationals")
        for z, y in pairs:
            if z * z >= 4 * y:
                raise RejectedInputError(f"Complex pair (z={z}, y={y}) has z^2 >= 4y")
        if self.distinct and (len(set(neg)) != len(neg) or len(set(pos)) != len(pos)):
            raise RejectedInputError("Roots are required to be distinct within their sign class")

    @property
    def degree(self) -> int:
        return len(self.neg_roots) + len(self.pos_roots) + 2 * len(self.complex_pairs)


def expand_from_spec(spec: RootSpec) -> RatPoly:
    """Monic product of all linear and quadratic factors described by ``spec``."""

    result = RatPoly.constant(1)
    for u in spec.neg_roots:
        result = result * RatPoly.linear(u)
    for r in spec.pos_roots:
        result = result * RatPoly.linear(-r)
    for z, y in spec.complex_pairs:
        result = result * RatPoly((y, -z, Fraction(1)))
    return result


def from_roots(neg_roots: Sequence[Number] = (), pos_roots: Sequence[Number] = ()) -> RatPoly:
    return expand_from_spec(RootSpec(tuple(neg_roots), tuple(pos_roots), (), distinct=False))


def reverse(poly: RatPoly) -> RatPoly:
    """``x^d P(1/x)``: the coefficient sequence read backwards."""

    if poly.constant_term == 0:
        raise ZeroConstantTermError("Cannot reverse a polynomial with zero constant term")
    return RatPoly(tuple(reversed(poly.coeffs)))


def scale_x(poly: RatPoly, chi: Number) -> RatPoly:
    """``chi^(-d) P(chi x)``; every root ``r`` becomes ``r / chi``."""

    chi = _to_fraction(chi)
    if chi <= 0:
        raise RejectedInputError("Scaling factor must be positive")
    d = poly.degree
    return RatPoly(tuple(c * chi ** (j - d) for j, c in enumerate(poly.coeffs)))


def elementary_symmetric(values: Sequence[Number]) -> list[Fraction]:
    """``[e_1, ..., e_k]`` of the given values."""

    if not values:
        raise RejectedInputError("Elementary symmetric functions need at least one value")
    e = [Fraction(1)]
    for v in values:
        v = _to_fraction(v)
        e = [Fraction(1)] + [e[i] + v * e[i - 1] for i in range(1, len(e))] + [v * e[-1]]
    return e[1:]


def binomial_poly(degree: int, shift: Number = 1) -> RatPoly:
    """``(x + shift)^degree`` built from binomial coefficients."""

    shift = _to_fraction(shift)
    return RatPoly(tuple(comb(degree, j) * shift ** (degree - j) for j in range(degree + 1)))


def gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def square_free_part(poly: RatPoly) -> RatPoly:
    g = gcd(poly, poly.derivative())
    return (poly // g).monic() if g.degree > 0 else poly.monic()


def is_square_free(poly: RatPoly) -> bool:
    return gcd(poly, poly.derivative()).degree == 0


def multiplicity_of_root(poly: RatPoly, root: Number) -> int:
    factor = RatPoly.linear(-_to_fraction(root))
    count = 0
    current = poly
    while not current.is_zero():
        quotient, remainder = current.divmod(factor)
        if not remainder.is_zero():
            break
        count += 1
        current = quotient
    return count


# ---------------------------------------------------------------- text codec
def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def to_text(poly: RatPoly) -> str:
    if poly.is_zero():
        return "0/1"
    return ",".join(format_fraction(c) for c in poly.coeffs)


def from_text(text: str) -> RatPoly:
    parts = [part.strip() for part in text.split(",") if part.strip()]
    if not parts:
        raise RejectedInputError("Empty polynomial text")
    try:
        return RatPoly.from_coeffs(Fraction(part) for part in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise RejectedInputError(f"Malformed polynomial text {text!r}: {exc}") from exc


__all__ = [
    "RatPoly",
    "RootSpec",
    "binomial_poly",
    "elementary_symmetric",
    "expand_from_spec",
    "format_fraction",
    "from_roots",
    "from_text",
    "gcd",
    "is_square_free",
    "multiplicity_of_root",
    "reverse",
    "scale_x",
    "square_free_part",
    "to_text",
]
