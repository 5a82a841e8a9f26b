"""Closed-form quantities behind the three-block realizability criteria.

Everything here is exact. Square roots enter only through ``Q+-(k)``; those are
compared with :func:`surd_sign` and enclosed with :func:`sqrt_enclosure` for
display.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from descartes_lab.algebra.intervals import Enclosure, sqrt_enclosure, surd_sign
from descartes_lab.utils.errors import RejectedInputError

DEFAULT_WIDTH = Fraction(1, 10**6)


def L_value(d: int, m: int, n: int) -> Fraction:
    """Sufficient-condition polynomial; positive means (Sigma_{m,n,q}, (0, d-2)) is realizable."""

    if m < 1 or n < 1 or m + n > d:
        raise RejectedInputError(f"Need m, n >= 1 and m + n <= d, got d={d}, m={m}, n={n}")
    return Fraction(-d * n * n + 4 * d * m + 4 * d * n - 4 * m * m - 4 * m * n - 4 * d + 4 * m)


def kappa_value(d: int, m: int, q: int) -> Fraction:
    if m < 1 or q < 1 or m + q >= d:
        raise RejectedInputError(f"Need m, q >= 1 and m + q < d, got d={d}, m={m}, q={q}")
    return Fraction(d - m - 1, m) * Fraction(d - q - 1, q)


def kappa_alt_form(d: int, m: int, n: int) -> int:
    """``kappa >= 4`` exactly when this is <= 0 (with q = d + 1 - m - n)."""

    return 3 * d * m - d * n - 3 * m * m - 3 * m * n + 2 * d + 3 * m + n - 2


def a_squared(d: int, k: int) -> Fraction:
    return Fraction(d - 1, (k + 1) * (d - k - 1))


def delta(d: int, k: int) -> int:
    """``C(d-2,k)^2 - C(d-2,k-1) C(d-2,k+1)``."""

    def c(j: int) -> int:
        return comb(d - 2, j) if 0 <= j <= d - 2 else 0

    return c(k) ** 2 - c(k - 1) * c(k + 1)


@dataclass(frozen=True)
class SurdValue:
    """``base + sign * sqrt(radicand)``; ``infinite`` marks Q+(0)."""

    base: Fraction
    sign: int = 0
    radicand: Fraction = Fraction(0)
    infinite: bool = False

    def enclosure(self, width: Fraction = DEFAULT_WIDTH) -> Optional[Enclosure]:
        if self.infinite:
            return None
        if self.sign == 0 or self.radicand == 0:
            return Enclosure.exact(self.base)
        root = sqrt_enclosure(self.radicand, width)
        return root.scale(self.sign).shift(self.base)


def q_value(d: int, k: int, sign: int) -> SurdValue:
    """``Q^{sign}(k) = ((d-k-1)/k)(1 + sign * A(k))`` as an exact surd."""

    if k < 0 or k > d - 2:
        raise RejectedInputError(f"k must lie in 0..{d - 2}, got {k}")
    if k == 0:
        # the defining quadratic degenerates to a linear condition
        if sign > 0:
            return SurdValue(Fraction(0), infinite=True)
        return SurdValue(Fraction(d - 2, 2))
    base = Fraction(d - k - 1, k)
    return SurdValue(base, sign, base * base * a_squared(d, k))


def q_bounds(d: int, k: int, width: Fraction = DEFAULT_WIDTH) -> tuple[Enclosure, Optional[Enclosure]]:
    """Rigorous rational enclosures of ``Q-(k)`` and ``Q+(k)`` (None stands for +infinity)."""

    return q_value(d, k, -1).enclosure(width), q_value(d, k, 1).enclosure(width)


def compare_surds(left: SurdValue, right: SurdValue) -> int:
    """Exact sign of ``left - right``."""

    if left.infinite and right.infinite:
        return 0
    if right.infinite:
        return -1
    if left.infinite:
        return 1
    return surd_sign(left.base - right.base, left.sign, left.radicand, -right.sign, right.radicand)


def compare_q(d: int, k_minus: int, k_plus: int) -> int:
    """Sign of ``Q-(k_minus) - Q+(k_plus)``."""

    return compare_surds(q_value(d, k_minus, -1), q_value(d, k_plus, 1))


def eqE_holds(d: int, m: int, n: int) -> bool:
    """``Q-(m-1) < Q+(m+n-2)``: a feasible sqrt(y) window exists for the Theorem-2 scheme."""

    return compare_q(d, m - 1, m + n - 2) < 0


@dataclass(frozen=True)
class Diagnostics:
    """The auxiliary quantities a, f, B, G and H of the squared form of the window condition."""

    a: Fraction
    f: Fraction
    B_squared: Fraction
    G_squared: Fraction
    H: Fraction

    def B(self, width: Fraction = DEFAULT_WIDTH) -> Enclosure:
        return sqrt_enclosure(self.B_squared, width)

    def G(self, width: Fraction = DEFAULT_WIDTH) -> Enclosure:
        return sqrt_enclosure(self.G_squared, width)

    def squared_condition(self) -> bool:
        """``H < GB``, decided as ``H < 0 or H^2 < G^2 B^2``."""

        return self.H < 0 or self.H * self.H < self.G_squared * self.B_squared


def diagnostics(d: int, m: int, n: int) -> Optional[Diagnostics]:
    if m < 2 or m + n < 3:
        return None
    a = Fraction(d - m, m - 1)
    f = Fraction(d - m - n + 1, m + n - 2)
    b2 = 1 - Fraction((m - 1) * (d - m - 1), m * (d - m))
    g2 = 1 - Fraction((m + n - 2) * (d - m - n), (m + n - 1) * (d - m - n + 1))
    h = ((a - f) ** 2 - a * a * b2 - f * f * g2) / (2 * a * f)
    return Diagnostics(a=a, f=f, B_squared=b2, G_squared=g2, H=h)


@dataclass(frozen=True)
class CriterionTrace:
    L_value: Fraction
    kappa_value: Optional[Fraction]
    qminus: Optional[Enclosure]
    qplus: Optional[Enclosure]
    eqE_holds: bool
    diagnostics: Optional[Diagnostics] = None

    def to_dict(self) -> dict[str, object]:
        def text(value: Optional[Fraction]) -> Optional[str]:
            return None if value is None else f"{value.numerator}/{value.denominator}"

        def interval(value: Optional[Enclosure]) -> Optional[list[str]]:
            return None if value is None else [text(value.lo), text(value.hi)]

        payload: dict[str, object] = {
            "L": text(self.L_value),
            "kappa": text(self.kappa_value),
            "qminus": interval(self.qminus),
            "qplus": interval(self.qplus) if self.qplus is not None else "inf",
            "eqE": self.eqE_holds,
        }
        if self.diagnostics is not None:
            payload["H"] = text(self.diagnostics.H)
        return payload


def trace_for(d: int, m: int, n: int, width: Fraction = DEFAULT_WIDTH) -> CriterionTrace:
    q = d + 1 - m - n
    kappa = kappa_value(d, m, q) if m + q < d else None
    qminus = q_value(d, m - 1, -1).enclosure(width)
    qplus = q_value(d, m + n - 2, 1).enclosure(width)
    return CriterionTrace(
        L_value=L_value(d, m, n),
        kappa_value=kappa,
        qminus=qminus,
        qplus=qplus,
        eqE_holds=eqE_holds(d, m, n),
        diagnostics=diagnostics(d, m, n),
    )
