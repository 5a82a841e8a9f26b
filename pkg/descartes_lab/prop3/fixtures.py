"""Transcribed case lists, positivity certificates and resultant values.

Certificates are written over (V, W) with v = 1 + V and w = 1 + W. The monomials
they do not mention are expected to carry positive coefficients; the verifier
checks that claim rather than assuming it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional

from descartes_lab.algebra.certificates import QuadraticFormCertificate, QuadraticFormPiece, TypePPiece
from descartes_lab.prop3.cases import Blocks, Prop3Case


def qf(alpha: int, beta: int, gamma: int, multiplier: Optional[Mapping[str, int]] = None, power: int = 1) -> QuadraticFormPiece:
    return QuadraticFormPiece(alpha, beta, gamma, dict(multiplier or {}), power)


def type_p(coefficients: Mapping[int, int], multiplier: Optional[Mapping[str, int]] = None) -> TypePPiece:
    return TypePPiece(dict(coefficients), dict(multiplier or {}))


def certificate(*pieces: QuadraticFormPiece | TypePPiece, scale: int = 1) -> QuadraticFormCertificate:
    return QuadraticFormCertificate(tuple(pieces), scale=scale)


V = {"V": 1}

SIGMA_244_BLOCKS: tuple[Blocks, ...] = (
    (5, 1, 1), (4, 2, 1), (3, 3, 1), (3, 2, 2), (2, 4, 1), (2, 3, 2), (1, 5, 1), (1, 4, 2), (1, 3, 3),
)

SIGMA_343_CERTIFICATES: dict[Blocks, QuadraticFormCertificate] = {
    (5, 1, 1): certificate(qf(28224, -9408, 28224)),
    (4, 2, 1): certificate(qf(47040, -18816, 28224)),
    (3, 2, 2): certificate(qf(47040, -37632, 47040)),
    (3, 3, 1): certificate(qf(56448, -28224, 28224), qf(282240, -42336, 127008, V)),
}

# each key case is covered by reversing x^9 P(1/x) from its value case
SIGMA_343_REVERSALS: dict[Blocks, Blocks] = {
    (1, 5, 1): (5, 1, 1),
    (2, 4, 1): (4, 2, 1),
    (1, 4, 2): (4, 2, 1),
    (1, 3, 3): (3, 3, 1),
    (2, 3, 2): (3, 2, 2),
}

SIGMA_245_CERTIFICATES: dict[Blocks, QuadraticFormCertificate] = {
    (6, 1, 1): certificate(qf(35721, -10206, 35721)),
    (5, 2, 1): certificate(qf(61236, -20412, 35721)),
    (4, 2, 2): certificate(qf(61236, -40824, 61236)),
    (4, 3, 1): certificate(qf(76545, -30618, 35721), qf(221130, -10206, 91854, V)),
    (3, 4, 1): certificate(qf(81648, -40824, 35721), qf(326592, -81648, 122472, V)),
    (3, 3, 2): certificate(qf(76545, -61236, 61236), qf(221130, -20412, 81648, V)),
    (2, 4, 2): certificate(qf(81648, -81648, 61236), qf(326592, -163296, 108864, V)),
    (2, 5, 1): certificate(
        qf(76545, -51030, 35721),
        qf(391230, -187110, 153090, V),
        qf(868725, -245430, 297270, {"V": 2}),
        qf(1094472, -86670, 352350, {"V": 3}),
    ),
    # printed with every coefficient divided by 9
    (1, 6, 1): certificate(
        qf(6804, -6804, 3969),
        qf(28728, -22680, 12474, V),
        qf(50436, -29052, 15849, {"V": 2}),
        qf(47088, -16848, 10368, {"V": 3}),
        qf(24628, -3252, 3672, {"V": 4}),
        scale=9,
    ),
    (2, 3, 3): certificate(
        qf(76545, -91854, 76545),
        qf(273375, -59778, 273375, power=2),
        type_p({3: 221130, 2: -30618, 1: -30618, 0: 221130}),
    ),
    (1, 5, 2): certificate(
        qf(76545, -102060, 61236),
        qf(391230, -374220, 136080, V),
        type_p({4: 868725, 3: -490860, 2: 10530, 1: 369360, 0: 79704}),
        type_p({3: 1094472, 2: -173340, 1: -210600, 0: 513540}, {"V": 2}),
        qf(855450, -215190, 372915, {"V": 2}, power=2),
        qf(300060, -64116, 176760, {"V": 4, "W": 1}),
    ),
    (1, 4, 3): certificate(
        qf(81648, -122472, 76545),
        qf(565056, -383940, 273375, power=2),
        type_p({3: 326592, 2: -244944, 1: -40824, 0: 221130}),
        qf(552096, -359649, 557928, V, power=2),
        type_p({6: 332928, 3: -75816, 0: 79065}),
        type_p({6: 126720, 3: -15066, 0: 138096}, V),
    ),
}

# two-root exceptions: (d, blocks, pair) -> resultant in w, before shifting
LEMMA_RESULTANTS: dict[tuple[int, Blocks, tuple[int, int]], str] = {
    (9, (6, 0, 1), (3, 6)): "7056*w^4-14112*w^2+7056",
    (9, (6, 0, 1), (4, 7)): "1800*w^4+3960*w^3+540*w^2+2520*w+7056",
    (10, (7, 0, 1), (5, 8)): "3969*w^4+7938*w^3-11907*w^2-15876*w+15876",
}

LEMMA_TANGENCIES: dict[tuple[int, Blocks, tuple[int, int]], tuple[int, ...]] = {
    (9, (6, 0, 1), (3, 6)): (1,),
    (9, (6, 0, 1), (4, 7)): (),
    (10, (7, 0, 1), (5, 8)): (1,),
}

LEMMA_SAMPLES = (Fraction(1, 2), Fraction(1), Fraction(2))
SAMPLE_POINT = {"v": 2, "w": 2}


def sigma_244_cases() -> list[Prop3Case]:
    return [Prop3Case(9, blocks, 4, 7) for blocks in SIGMA_244_BLOCKS]


def sigma_343_cases() -> list[Prop3Case]:
    cases = [Prop3Case(9, blocks, 3, 6, certificate=cert) for blocks, cert in SIGMA_343_CERTIFICATES.items()]
    cases += [Prop3Case(9, blocks, 3, 6, reversal_of=source) for blocks, source in SIGMA_343_REVERSALS.items()]
    return cases


def sigma_245_cases() -> list[Prop3Case]:
    return [Prop3Case(10, blocks, 5, 8, certificate=cert) for blocks, cert in SIGMA_245_CERTIFICATES.items()]


def lemma_cases() -> list[Prop3Case]:
    return [Prop3Case(d, blocks, mu, nu, kind="lemma") for d, blocks, (mu, nu) in LEMMA_RESULTANTS]


def all_ones_cases() -> list[Prop3Case]:
    return [
        Prop3Case(9, (7, 0, 0), 3, 6, kind="all-ones"),
        Prop3Case(9, (7, 0, 0), 4, 7, kind="all-ones"),
        Prop3Case(10, (8, 0, 0), 5, 8, kind="all-ones"),
    ]


def all_cases() -> list[Prop3Case]:
    return sigma_244_cases() + sigma_343_cases() + sigma_245_cases() + lemma_cases() + all_ones_cases()
