"""Certified real-root counting with Sturm sequences.

The sequence is built from primitive pseudo-remainders over the integers, so
every entry is a positive multiple of the classical rational Sturm remainder
and sign variations are unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence

from descartes_lab.algebra.ratpoly import Number, RatPoly, square_free_part
from descartes_lab.utils.errors import RejectedInputError, RootAtEndpointError, ZeroConstantTermError

Endpoint = Optional[Number]
IntPoly = list[int]


def _sign(value: int | Fraction) -> int:
    return (value > 0) - (value < 0)


def primitive_int(poly: RatPoly) -> IntPoly:
    """Integer coefficients proportional (by a positive factor) to ``poly``."""

    if poly.is_zero():
        return []
    lcm = reduce(lambda acc, c: acc * c.denominator // math.gcd(acc, c.denominator), poly.coeffs, 1)
    ints = [int(c * lcm) for c in poly.coeffs]
    return _primitive(ints)


def _primitive(ints: IntPoly) -> IntPoly:
    while ints and ints[-1] == 0:
        ints.pop()
    content = reduce(math.gcd, ints, 0)
    if content > 1:
        ints = [c // content for c in ints]
    return ints


def _derivative(ints: IntPoly) -> IntPoly:
    return _primitive([j * c for j, c in enumerate(ints) if j > 0])


def _prem_abs(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of ``|lc(b)|^k a`` by ``b``: a positive multiple of ``a mod b``."""

    r = list(a)
    lb = b[-1]
    mult = abs(lb)
    sb = _sign(lb)
    db = len(b) - 1
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [mult * c for c in r]
        factor = lr * sb
        for j, c in enumerate(b):
            r[shift + j] -= factor * c
        while r and r[-1] == 0:
            r.pop()
    return r


def _eval_sign(ints: IntPoly, x: Fraction) -> int:
    """Sign of the polynomial at ``x`` using integer arithmetic only."""

    n, d = x.numerator, x.denominator
    deg = len(ints) - 1
    total = 0
    npow = 1
    dpow = d**deg
    for c in ints:
        total += c * npow * dpow
        npow *= n
        dpow //= d
    return _sign(total)


@dataclass(frozen=True)
class SturmSequence:
    chain: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, poly: RatPoly) -> SturmSequence:
        if poly.is_zero():
            raise RejectedInputError("The zero polynomial has no Sturm sequence")
        first = primitive_int(poly)
        chain = [first]
        if len(first) > 1:
            chain.append(_derivative(first))
            while True:
                rem = _prem_abs(chain[-2], chain[-1])
                if not rem:
                    break
                chain.append(_primitive([-c for c in rem]))
        return cls(tuple(tuple(p) for p in chain))

    def variations_at(self, x: Endpoint, *, at_minus_infinity: bool = False) -> int:
        signs: list[int] = []
        for p in self.chain:
            if x is None:
                s = _sign(p[-1])
                if at_minus_infinity and (len(p) - 1) % 2 == 1:
                    s = -s
            else:
                s = _eval_sign(list(p), Fraction(x))
            if s:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lo: Endpoint = None, hi: Endpoint = None) -> int:
        """Number of distinct real roots in the open interval (lo, hi); None is infinite."""

        base = list(self.chain[0])
        for point in (lo, hi):
            if point is not None and _eval_sign(base, Fraction(point)) == 0:
                raise RootAtEndpointError(point)
        if lo is not None and hi is not None and Fraction(lo) >= Fraction(hi):
            return 0
        return self.variations_at(lo, at_minus_infinity=True) - self.variations_at(hi)


def _normalize_endpoint(value: Endpoint | float) -> Endpoint:
    if isinstance(value, float):
        if math.isinf(value):
            return None
        raise RejectedInputError("Finite endpoints must be exact rationals")
    return value


def count_real_roots(poly: RatPoly, lo: Endpoint | float = None, hi: Endpoint | float = None) -> int:
    """Exact number of distinct real roots of ``poly`` in (lo, hi).

    ``None`` or ``±math.inf`` stand for infinite endpoints.
    """

    return SturmSequence.of(poly).count(_normalize_endpoint(lo), _normalize_endpoint(hi))


def count_pos_neg(poly: RatPoly) -> tuple[int, int]:
    """Distinct positive and negative root counts; multiplicities are not counted."""

    if poly.constant_term == 0:
        raise ZeroConstantTermError("Polynomial has a root at 0")
    seq = SturmSequence.of(poly)
    return seq.count(0, None), seq.count(None, 0)


def cauchy_bound(poly: RatPoly) -> Fraction:
    lead = abs(poly.leading)
    return 1 + max((abs(c) / lead for c in poly.coeffs[:-1]), default=Fraction(0))


def isolate_real_roots(poly: RatPoly, lo: Endpoint = None, hi: Endpoint = None) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals (a, b), each holding exactly one distinct real root.

    Endpoints are never roots; roots are those of ``poly`` inside (lo, hi).
    """

    if poly.degree == 0:
        return []
    sqf = square_free_part(poly)
    seq = SturmSequence.of(sqf)
    bound = cauchy_bound(sqf)
    a = Fraction(-bound) if lo is None else Fraction(lo)
    b = Fraction(bound) if hi is None else Fraction(hi)
    if seq.count(a, b) == 0:
        return []
    found: list[tuple[Fraction, Fraction]] = []
    stack = [(a, b, seq.count(a, b))]
    while stack:
        left, right, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            found.append((left, right))
            continue
        mid = _split_point(sqf, left, right)
        stack.append((mid, right, seq.count(mid, right)))
        stack.append((left, mid, seq.count(left, mid)))
    return sorted(found)


def _split_point(poly: RatPoly, left: Fraction, right: Fraction) -> Fraction:
    width = right - left
    mid = left + width / 2
    if poly.eval(mid) != 0:
        return mid
    for step in range(2, 66):
        candidate = mid + width / 2**step
        if poly.eval(candidate) != 0:
            return candidate
    raise RejectedInputError("Could not find a non-root split point")


def refine_root(poly: RatPoly, interval: tuple[Fraction, Fraction], width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval of a simple root down to ``width``.

    A degenerate interval (c, c) is returned when a midpoint hits the root.
    """

    left, right = interval
    s_left = poly.sign_at(left)
    while right - left > width:
        mid = (left + right) / 2
        s_mid = poly.sign_at(mid)
        if s_mid == 0:
            return mid, mid
        if s_mid == s_left:
            left = mid
        else:
            right = mid
    return left, right


def sign_variations(values: Sequence[int | Fraction]) -> int:
    signs = [_sign(v) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)
