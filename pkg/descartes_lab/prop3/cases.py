"""Symbolic set-up of the cases behind the degree 9 and 10 nonrealizability facts.

Each case fixes ``R = (x+1)^s1 (x+v)^s2 (x+w)^s3`` and looks at
``P = R * (x - a)^2``. Coefficients are indexed in ascending powers of x, so
``p_j = r_{j-2} - 2a r_{j-1} + a^2 r_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from descartes_lab.algebra.certificates import QuadraticFormCertificate
from descartes_lab.algebra.mpoly import IntMPoly
from descartes_lab.signs.patterns import ThreeBlockPattern
from descartes_lab.utils.errors import RejectedInputError

Blocks = tuple[int, int, int]
Coefficients = list[IntMPoly]

BLOCK_VARIABLES = ("v", "w")
SHIFTED_VARIABLES = {"v": "V", "w": "W"}

# (mu, nu) pairs whose simultaneous negativity is ruled out, by degree
PAIRS: dict[int, tuple[tuple[int, int], ...]] = {9: ((3, 6), (4, 7)), 10: ((5, 8),)}


@dataclass(frozen=True)
class Prop3Case:
    """One stratum of the proof.

    ``kind`` is "three-root" for the generic cases with v, w > 1, "lemma" for the
    two-root exceptions, and "all-ones" for R = (x+1)^(d-2). A certificate of
    None means the shifted resultant must have every coefficient positive.
    """

    d: int
    blocks: Blocks
    mu: int
    nu: int
    kind: str = "three-root"
    certificate: Optional[QuadraticFormCertificate] = None
    reversal_of: Optional[Blocks] = None

    def __post_init__(self) -> None:
        if self.d not in PAIRS or (self.mu, self.nu) not in PAIRS[self.d]:
            raise RejectedInputError(f"No coefficient pair ({self.mu},{self.nu}) for degree {self.d}")
        if sum(self.blocks) != self.d - 2 or min(self.blocks) < 0 or self.blocks[0] < 1:
            raise RejectedInputError(f"Blocks {self.blocks} do not describe d-2 = {self.d - 2} linear factors")

    @property
    def target_pattern(self) -> ThreeBlockPattern:
        # negatives at ascending indices mu..nu
        return ThreeBlockPattern(self.d - 3 - self.mu, 4, self.mu)

    @property
    def variables(self) -> tuple[str, ...]:
        present = tuple(name for name, s in zip(BLOCK_VARIABLES, self.blocks[1:]) if s)
        return ("a",) + present

    @property
    def label(self) -> str:
        return "(" + ",".join(str(s) for s in self.blocks) + ")"


@dataclass(frozen=True)
class QuadraticInA:
    """``c2 a^2 + c1 a + c0`` with coefficients polynomial in the block variables."""

    index: int
    c0: IntMPoly
    c1: IntMPoly
    c2: IntMPoly

    @classmethod
    def from_poly(cls, index: int, poly: IntMPoly) -> QuadraticInA:
        coeffs = poly.coeffs_in("a")
        if len(coeffs) > 3:
            raise RejectedInputError(f"p_{index} has degree {len(coeffs) - 1} in a")
        zero = IntMPoly.zero(coeffs[0].variables)
        c0, c1, c2 = (coeffs + [zero] * 3)[:3]
        return cls(index, c0, c1, c2)

    @property
    def leading(self) -> IntMPoly:
        return self.c2

    def poly(self, variables: tuple[str, ...]) -> IntMPoly:
        a = IntMPoly.var(variables, "a")
        return self.c2.with_variables(variables) * a * a + self.c1.with_variables(variables) * a + self.c0.with_variables(variables)


def _multiply(left: Coefficients, right: Coefficients, variables: tuple[str, ...]) -> Coefficients:
    out = [IntMPoly.zero(variables) for _ in range(len(left) + len(right) - 1)]
    for i, lc in enumerate(left):
        for j, rc in enumerate(right):
            out[i + j] = out[i + j] + lc * rc
    return out


def r_coefficients(blocks: Blocks, variables: tuple[str, ...]) -> Coefficients:
    """Ascending coefficients of R over ``variables``."""

    one = IntMPoly.constant(variables, 1)
    coeffs: Coefficients = [one]
    for shift, power in zip(("1",) + BLOCK_VARIABLES, blocks):
        if not power:
            continue
        root = one if shift == "1" else IntMPoly.var(variables, shift)
        for _ in range(power):
            coeffs = _multiply(coeffs, [root, one], variables)
    return coeffs


def p_coefficients(case: Prop3Case, *, with_b: bool = False) -> Coefficients:
    """Ascending coefficients of ``R * ((x-a)^2 + b)``; b only appears when ``with_b``."""

    variables = case.variables + (("b",) if with_b else ())
    a = IntMPoly.var(variables, "a")
    constant = a * a
    if with_b:
        constant = constant + IntMPoly.var(variables, "b")
    quadratic = [constant, a * -2, IntMPoly.constant(variables, 1)]
    return _multiply(r_coefficients(case.blocks, variables), quadratic, variables)


def build_case(case: Prop3Case) -> list[QuadraticInA]:
    """``p_2 .. p_{d-2}`` as quadratics in a."""

    coeffs = p_coefficients(case)
    return [QuadraticInA.from_poly(j, coeffs[j]) for j in range(2, case.d - 1)]


def coefficient_pair(case: Prop3Case) -> tuple[QuadraticInA, QuadraticInA]:
    by_index = {q.index: q for q in build_case(case)}
    return by_index[case.mu], by_index[case.nu]
