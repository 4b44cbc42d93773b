"""Reference almost-positive knots used throughout the tests and the CLI.

Each entry carries its DT code and the polynomials published for it.  The
Jones polynomials are in ``t``, HOMFLY in ``(a, z)`` with
``a P(L+) - a^-1 P(L-) = z P(L0)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly1, LaurentPoly2


@dataclass(frozen=True)
class ReferenceKnot:
    name: str
    dt: str
    jones: str
    conway: str
    homfly: str | None
    bound: int
    max_v: int


K16 = ReferenceKnot(
    name="16n125409",
    dt="[4, 8, 22, 2, 26, 24, -30, -12, -28, -16, 6, 32, 10, -20, -18, -14]",
    jones=("t^4 - 3t^6 + 12t^7 - 24t^8 + 38t^9 - 49t^10 + 56t^11 - 56t^12 + 48t^13"
           " - 37t^14 + 23t^15 - 12t^16 + 5t^17 - t^18"),
    conway="1 + 11z^2 + 24z^4 + 15z^6 + z^8",
    homfly=None,
    bound=16,
    max_v=18,
)

K15_V1_MINUS1 = ReferenceKnot(
    name="15n11331",
    dt="[4, 10, 30, 20, 2, 24, 22, -26, -14, 8, 28, 12, -18, -16, 6]",
    jones=("t^3 - t^4 + 2t^5 - t^6 - t^7 + 5t^8 - 8t^9 + 11t^10 - 13t^11 + 12t^12"
           " - 10t^13 + 6t^14 - 3t^15 + t^16"),
    conway="1 + 8z^2 + 14z^4 + 2z^6",
    homfly=("a^{-6} z^6 + 5 a^{-6} z^4 + 6 a^{-6} z^2 + 2 a^{-6} + a^{-8} z^6 + 5 a^{-8} z^4"
            " + 3 a^{-8} z^2 + 2 a^{-10} z^4 + a^{-10} z^2 + 2 a^{-12} z^4 + a^{-12} z^2"
            " - 3 a^{-14} z^2 - 2 a^{-14} + a^{-16}"),
    bound=14,
    max_v=16,
)

K15_V1_MINUS2 = ReferenceKnot(
    name="15n11445",
    dt="[4, 8, 22, 2, 20, 26, 24, -28, -14, 10, 6, 30, 12, -18, -16]",
    jones=("t^3 - 2t^4 + 5t^5 - 6t^6 + 7t^7 - 6t^8 + 3t^9 + t^10 - 4t^11 + 6t^12"
           " - 7t^13 + 5t^14 - 3t^15 + t^16"),
    conway="1 + 9z^2 + 14z^4 + 3z^6",
    homfly=("a^{-6} z^6 + 4 a^{-6} z^4 + 4 a^{-6} z^2 + a^{-6} + 2 a^{-8} z^6 + 9 a^{-8} z^4"
            " + 10 a^{-8} z^2 + 3 a^{-8} - a^{-10} z^4 - 6 a^{-10} z^2 - 4 a^{-10} + 2 a^{-12} z^4"
            " + 4 a^{-12} z^2 + 3 a^{-12} - 3 a^{-14} z^2 - 3 a^{-14} + a^{-16}"),
    bound=15,
    max_v=16,
)

REFERENCE_KNOTS = {"K16": K16, "K15a": K15_V1_MINUS1, "K15b": K15_V1_MINUS2}


def jones_of(k: ReferenceKnot) -> LaurentPoly1:
    return LaurentPoly1.parse(k.jones, "t")


def conway_of(k: ReferenceKnot) -> LaurentPoly1:
    return LaurentPoly1.parse(k.conway, "z")


def homfly_of(k: ReferenceKnot) -> LaurentPoly2 | None:
    return LaurentPoly2.parse(k.homfly) if k.homfly else None
