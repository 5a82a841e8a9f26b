"""Multivariate polynomials with integer coefficients over a fixed variable tuple."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from descartes_lab.algebra.ratpoly import Number, RatPoly
from descartes_lab.algebra.sturm import count_real_roots
from descartes_lab.utils.errors import (
    ConstantInVariableError,
    RejectedInputError,
    VariableMismatchError,
)

Exponents = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class IntMPoly:
    variables: tuple[str, ...]
    terms: Mapping[Exponents, int]

    def __post_init__(self) -> None:
        if len(set(self.variables)) != len(self.variables):
            raise RejectedInputError(f"Repeated variable in {self.variables}")
        cleaned: dict[Exponents, int] = {}
        for exps, coef in self.terms.items():
            if len(exps) != len(self.variables):
                raise VariableMismatchError(f"Exponent vector {exps} does not match {self.variables}")
            if coef:
                cleaned[tuple(exps)] = int(coef)
        object.__setattr__(self, "terms", cleaned)

    # ------------------------------------------------------------ builders
    @classmethod
    def zero(cls, variables: Iterable[str]) -> IntMPoly:
        return cls(tuple(variables), {})

    @classmethod
    def constant(cls, variables: Iterable[str], value: int) -> IntMPoly:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def var(cls, variables: Iterable[str], name: str) -> IntMPoly:
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatchError(f"{name} is not one of {variables}")
        return cls(variables, {tuple(int(v == name) for v in variables): 1})

    @classmethod
    def monomial(cls, variables: Iterable[str], exponents: Mapping[str, int], coef: int = 1) -> IntMPoly:
        variables = tuple(variables)
        unknown = set(exponents) - set(variables)
        if unknown:
            raise VariableMismatchError(f"{sorted(unknown)} not among {variables}")
        return cls(variables, {tuple(exponents.get(v, 0) for v in variables): coef})

    # ----------------------------------------------------------- structure
    def _check(self, other: IntMPoly) -> None:
        if self.variables != other.variables:
            raise VariableMismatchError(f"Variable sets differ: {self.variables} vs {other.variables}")

    def _lift(self, other: IntMPoly | int) -> IntMPoly:
        if isinstance(other, IntMPoly):
            self._check(other)
            return other
        return IntMPoly.constant(self.variables, other)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntMPoly.constant(self.variables, other)
        if not isinstance(other, IntMPoly):
            return NotImplemented
        return self.variables == other.variables and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError as exc:
            raise VariableMismatchError(f"{name} is not one of {self.variables}") from exc

    def degree_in(self, name: str) -> int:
        i = self.index(name)
        return max((exps[i] for exps in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(exps) for exps in self.terms), default=0)

    def coefficients(self) -> list[int]:
        return [self.terms[k] for k in self._ordered_keys()]

    def _ordered_keys(self) -> list[Exponents]:
        # graded lexicographic, highest first
        return sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)

    # ---------------------------------------------------------- arithmetic
    def __neg__(self) -> IntMPoly:
        return IntMPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: IntMPoly | int) -> IntMPoly:
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return IntMPoly(self.variables, out)

    __radd__ = __add__

    def __sub__(self, other: IntMPoly | int) -> IntMPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other: int) -> IntMPoly:
        return self._lift(other) - self

    def __mul__(self, other: IntMPoly | int) -> IntMPoly:
        if isinstance(other, int):
            return IntMPoly(self.variables, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return IntMPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntMPoly:
        result = IntMPoly.constant(self.variables, 1)
        for _ in range(exponent):
            result = result * self
        return result

    # ------------------------------------------------------ variable moves
    def coeffs_in(self, name: str) -> list[IntMPoly]:
        """Ascending coefficients in ``name``; each lives over the remaining variables."""

        i = self.index(name)
        rest = self.variables[:i] + self.variables[i + 1 :]
        buckets: dict[int, dict[Exponents, int]] = {}
        for exps, c in self.terms.items():
            buckets.setdefault(exps[i], {})[exps[:i] + exps[i + 1 :]] = c
        top = max(buckets, default=0)
        return [IntMPoly(rest, buckets.get(k, {})) for k in range(top + 1)]

    def with_variables(self, variables: Iterable[str]) -> IntMPoly:
        """Embed into a larger variable tuple (or reorder)."""

        variables = tuple(variables)
        missing = [v for v in self.variables if v not in variables]
        if missing:
            raise VariableMismatchError(f"{missing} absent from {variables}")
        positions = [self.variables.index(v) if v in self.variables else None for v in variables]
        return IntMPoly(
            variables,
            {tuple(e[p] if p is not None else 0 for p in positions): c for e, c in self.terms.items()},
        )

    def drop_variable(self, name: str) -> IntMPoly:
        if self.degree_in(name) != 0:
            raise VariableMismatchError(f"{name} still occurs in the polynomial")
        return self.coeffs_in(name)[0]

    def substitute(self, name: str, value: IntMPoly) -> IntMPoly:
        """Replace ``name`` by ``value`` (a polynomial over the same variables)."""

        self._check(value)
        result = IntMPoly.zero(self.variables)
        for coef in reversed(self.coeffs_in(name)):
            result = result * value + coef.with_variables(self.variables)
        return result

    def rename(self, mapping: Mapping[str, str]) -> IntMPoly:
        return IntMPoly(tuple(mapping.get(v, v) for v in self.variables), self.terms)

    # -------------------------------------------------------- evaluations
    def evaluate(self, assignment: Mapping[str, Number]) -> Fraction:
        missing = [v for v in self.variables if v not in assignment]
        if missing:
            raise VariableMismatchError(f"No value for {missing}")
        values = [Fraction(assignment[v]) for v in self.variables]
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = Fraction(c)
            for value, k in zip(values, exps):
                if k:
                    term *= value**k
            total += term
        return total

    def partial(self, assignment: Mapping[str, Number]) -> dict[int, Fraction]:
        """Assign every variable except one; returns ascending coefficients in the free one."""

        free = [v for v in self.variables if v not in assignment]
        if len(free) != 1:
            raise VariableMismatchError(f"Exactly one free variable expected, got {free}")
        out: dict[int, Fraction] = {}
        for k, coef in enumerate(self.coeffs_in(free[0])):
            out[k] = coef.evaluate({v: assignment[v] for v in coef.variables})
        return out

    def to_ratpoly(self) -> RatPoly:
        if len(self.variables) != 1:
            raise VariableMismatchError("Only univariate polynomials convert to RatPoly")
        top = self.degree_in(self.variables[0])
        return RatPoly.from_coeffs(self.terms.get((k,), 0) for k in range(top + 1))

    # ----------------------------------------------------------- text codec
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in self._ordered_keys():
            factors = [str(self.terms[exps])]
            for name, k in zip(self.variables, exps):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            parts.append("*".join(factors))
        return "+".join(parts).replace("+-", "-")

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"IntMPoly({self.variables}, {self.to_text()})"


_TERM = re.compile(r"([+-]?)(\d+)((?:\*[A-Za-z]\w*(?:\^\d+)?)*)")


def from_text(text: str, variables: Iterable[str]) -> IntMPoly:
    variables = tuple(variables)
    cleaned = text.replace(" ", "")
    if cleaned == "0":
        return IntMPoly.zero(variables)
    terms: dict[Exponents, int] = {}
    position = 0
    for match in _TERM.finditer(cleaned):
        if match.start() != position or not match.group(0):
            raise RejectedInputError(f"Malformed term near {cleaned[position:]!r}")
        position = match.end()
        coef = int(match.group(2)) * (-1 if match.group(1) == "-" else 1)
        exps = [0] * len(variables)
        for factor in filter(None, match.group(3).split("*")):
            name, _, power = factor.partition("^")
            if name not in variables:
                raise VariableMismatchError(f"{name} is not one of {variables}")
            exps[variables.index(name)] += int(power or 1)
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coef
    if position != len(cleaned):
        raise RejectedInputError(f"Trailing text {cleaned[position:]!r}")
    return IntMPoly(variables, terms)


# ------------------------------------------------------------------ resultants
def sylvester_matrix(p: IntMPoly, q: IntMPoly, name: str) -> list[list[IntMPoly]]:
    p._check(q)
    pc, qc = p.coeffs_in(name), q.coeffs_in(name)
    m, n = len(pc) - 1, len(qc) - 1
    if m < 1 or n < 1:
        raise ConstantInVariableError(f"Both polynomials must have positive degree in {name}")
    rest = pc[0].variables
    zero = IntMPoly.zero(rest)
    size = m + n
    rows: list[list[IntMPoly]] = []
    for shift in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(pc)):
            row[shift + k] = c
        rows.append(row)
    for shift in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(qc)):
            row[shift + k] = c
        rows.append(row)
    return rows


def determinant(matrix: list[list[IntMPoly]]) -> IntMPoly:
    """Cofactor expansion along the first row, memoized on the used columns."""

    size = len(matrix)
    if size == 0:
        raise RejectedInputError("Empty matrix")
    variables = matrix[0][0].variables
    memo: dict[tuple[int, frozenset[int]], IntMPoly] = {}

    def minor(row: int, free: frozenset[int]) -> IntMPoly:
        if row == size:
            return IntMPoly.constant(variables, 1)
        key = (row, free)
        if key in memo:
            return memo[key]
        total = IntMPoly.zero(variables)
        ordered = sorted(free)
        for position, col in enumerate(ordered):
            entry = matrix[row][col]
            if entry.is_zero():
                continue
            sub = minor(row + 1, free - {col})
            term = entry * sub
            total = total - term if position % 2 else total + term
        memo[key] = total
        return total

    return minor(0, frozenset(range(size)))


def resultant_in(p: IntMPoly, q: IntMPoly, name: str) -> IntMPoly:
    """Determinant of the Sylvester matrix with respect to ``name``.

    The result lives over the remaining variables.
    """

    return determinant(sylvester_matrix(p, q, name))


def shift_vars(poly: IntMPoly, mapping: Mapping[str, str]) -> IntMPoly:
    """Substitute ``old = 1 + new`` for every ``old -> new`` in ``mapping``."""

    clash = set(mapping.values()) & set(poly.variables)
    if clash:
        raise VariableMismatchError(f"Target variables {sorted(clash)} are not fresh")
    renamed = poly.rename(mapping)
    result = renamed
    for new in mapping.values():
        i = renamed.variables.index(new)
        out: dict[Exponents, int] = {}
        for exps, c in result.terms.items():
            k = exps[i]
            for j in range(k + 1):
                key = exps[:i] + (j,) + exps[i + 1 :]
                out[key] = out.get(key, 0) + c * comb(k, j)
        result = IntMPoly(renamed.variables, out)
    return result


def check_all_coeffs_positive(poly: IntMPoly) -> bool:
    return bool(poly.terms) and all(c > 0 for c in poly.terms.values())


def check_type_p(poly: IntMPoly | RatPoly) -> bool:
    """Positive leading coefficient and no real root on [0, inf)."""

    univariate = poly.to_ratpoly() if isinstance(poly, IntMPoly) else poly
    if univariate.is_zero() or univariate.leading <= 0:
        return False
    if univariate.constant_term == 0:
        return False
    return count_real_roots(univariate, 0, None) == 0
