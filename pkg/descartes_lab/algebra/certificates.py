"""Positivity certificates for polynomials in two nonnegative variables.

A certificate writes a target as ``scale * (sum of pieces) + remainder`` where
every piece is visibly nonnegative on the closed quadrant and the remainder
has nonnegative coefficients. Pieces are transcribed data; this module only
checks them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

from descartes_lab.algebra.mpoly import IntMPoly, check_type_p
from descartes_lab.algebra.ratpoly import RatPoly
from descartes_lab.utils.errors import VariableMismatchError

DEFAULT_VARIABLES = ("V", "W")


def _multiplier(variables: tuple[str, ...], exponents: Mapping[str, int]) -> IntMPoly:
    return IntMPoly.monomial(variables, exponents)


@dataclass(frozen=True)
class QuadraticFormPiece:
    """``multiplier * (alpha X^2e + beta X^e Y^e + gamma Y^2e)`` with X, Y the certificate variables."""

    alpha: int
    beta: int
    gamma: int
    multiplier: Mapping[str, int] = field(default_factory=dict)
    power: int = 1

    def is_definite(self) -> bool:
        return self.alpha > 0 and self.beta * self.beta - 4 * self.alpha * self.gamma < 0

    def expand(self, variables: tuple[str, ...]) -> IntMPoly:
        x, y = (IntMPoly.var(variables, name) ** self.power for name in variables[:2])
        form = x * x * self.alpha + x * y * self.beta + y * y * self.gamma
        return _multiplier(variables, self.multiplier) * form

    def describe(self) -> str:
        prefix = "".join(f"{k}^{e}*" for k, e in sorted(self.multiplier.items()) if e)
        return f"{prefix}QF({self.alpha},{self.beta},{self.gamma};e={self.power})"


@dataclass(frozen=True)
class TypePPiece:
    """``multiplier * sum c_k X^k Y^(deg-k)``: a binary form whose dehomogenization is type P."""

    coefficients: Mapping[int, int]
    multiplier: Mapping[str, int] = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return max(self.coefficients)

    def univariate(self) -> RatPoly:
        return RatPoly.from_coeffs(self.coefficients.get(k, 0) for k in range(self.degree + 1))

    def is_type_p(self) -> bool:
        return check_type_p(self.univariate())

    def expand(self, variables: tuple[str, ...]) -> IntMPoly:
        x_name, y_name = variables[:2]
        form = IntMPoly.zero(variables)
        for k, c in self.coefficients.items():
            form = form + IntMPoly.monomial(variables, {x_name: k, y_name: self.degree - k}, c)
        return _multiplier(variables, self.multiplier) * form

    def describe(self) -> str:
        prefix = "".join(f"{k}^{e}*" for k, e in sorted(self.multiplier.items()) if e)
        body = ",".join(f"{k}:{self.coefficients[k]}" for k in sorted(self.coefficients, reverse=True))
        return f"{prefix}TypeP{{{body}}}"


Piece = Union[QuadraticFormPiece, TypePPiece]


@dataclass(frozen=True)
class QuadraticFormCertificate:
    pieces: tuple[Piece, ...]
    variables: tuple[str, ...] = DEFAULT_VARIABLES
    scale: int = 1
    remainder: Optional[IntMPoly] = None

    def expand_pieces(self) -> IntMPoly:
        total = IntMPoly.zero(self.variables)
        for piece in self.pieces:
            total = total + piece.expand(self.variables)
        return total * self.scale


@dataclass
class CertificateCheck:
    valid: bool
    remainder: IntMPoly
    residual: IntMPoly
    failures: list[str] = field(default_factory=list)
    strict: bool = False

    def __bool__(self) -> bool:
        return self.valid


def verify_certificate(target: IntMPoly, cert: QuadraticFormCertificate) -> CertificateCheck:
    """Check ``target == scale * sum(pieces) + remainder`` with every part nonnegative.

    ``residual`` is zero for a valid certificate. With a declared remainder it is
    ``scale * sum + remainder - target``; otherwise it collects the terms by which
    the pieces overshoot the target.
    """

    if target.variables != cert.variables:
        raise VariableMismatchError(f"Certificate over {cert.variables}, target over {target.variables}")
    failures: list[str] = []
    for piece in cert.pieces:
        if isinstance(piece, QuadraticFormPiece) and not piece.is_definite():
            failures.append(f"{piece.describe()} is not positive definite")
        if isinstance(piece, TypePPiece) and not piece.is_type_p():
            failures.append(f"{piece.describe()} is not of type P")
    if cert.scale <= 0:
        failures.append("scale must be positive")

    summed = cert.expand_pieces()
    if cert.remainder is not None:
        remainder = cert.remainder
        residual = summed + remainder - target
        if not residual.is_zero():
            failures.append(f"pieces plus remainder differ from target by {residual}")
    else:
        remainder = target - summed
        residual = IntMPoly(cert.variables, {e: -c for e, c in remainder.terms.items() if c < 0})
    negative = {e: c for e, c in remainder.terms.items() if c < 0}
    if negative:
        failures.append(f"remainder has negative terms {IntMPoly(cert.variables, negative)}")

    return CertificateCheck(
        valid=not failures,
        remainder=remainder,
        residual=residual,
        failures=failures,
        strict=not failures and bool(cert.pieces),
    )
