"""Heckoid orbifold descriptors and the classical Hecke matrices.

The index ``n`` of ``G(r; n)`` lives in ``(1/2) N_{>=3}``; it is passed around
as the integer ``two_n = 2n`` so nothing here touches floating point except
:func:`hecke_matrices`.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import IndexTooSmall, InvalidIndex, OutOfRange, ParseError
from .rational_core import Slope, make_slope

INF_WEIGHT = math.inf


class Family(enum.Enum):
    M0 = "M0"
    M1 = "M1"
    M2 = "M2"


class ParabolicLocus(enum.Enum):
    TwoAnnuli = "two annuli"
    OneAnnulus = "one annulus"
    TwoD22 = "two copies of D^2(2,2)"


class HeckoidIsom(enum.Enum):
    Z2xZ2 = "(Z2)^2"
    Z2 = "Z2"


_LOCUS = {Family.M0: ParabolicLocus.TwoAnnuli, Family.M1: ParabolicLocus.OneAnnulus, Family.M2: ParabolicLocus.TwoD22}
_ISOM = {Family.M0: HeckoidIsom.Z2xZ2, Family.M1: HeckoidIsom.Z2, Family.M2: HeckoidIsom.Z2}
_FIGURE = {Family.M0: 2, Family.M1: 3, Family.M2: 4}


def hat_r(r: Slope) -> Slope:
    if r.is_infinity or not (0 < r.num < r.den):
        raise OutOfRange(f"{r} is not of the form q/p with 0 < q < p")
    q, p = r.num, r.den
    if p % 2 == 0:
        return make_slope(q, p // 2)
    if q % 2 == 0:
        return make_slope(q // 2, p)
    return make_slope((p + q) // 2, p)


def parse_index(text: str) -> int:
    """Parse ``n`` ("2", "5/2") and return ``2n``."""
    m = re.match(r"^\s*([0-9]+)(?:/([0-9]+))?\s*$", text)
    if not m:
        raise ParseError(f"cannot parse index {text!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0 or (2 * num) % den:
        raise InvalidIndex(f"{text}: index must be an integer or a half-integer")
    return 2 * num // den


def format_index(two_n: int) -> str:
    return str(two_n // 2) if two_n % 2 == 0 else f"{two_n}/2"


@dataclass(frozen=True)
class HeckoidDescriptor:
    family: Family
    slope: Slope
    index: int  # n for M0, m for M1/M2
    weights: dict
    parabolic_locus: ParabolicLocus
    isom: HeckoidIsom
    fuchsian_degenerate: bool
    annotation: str = ""

    def __post_init__(self):
        assert self.parabolic_locus is _LOCUS[self.family]
        assert self.isom is _ISOM[self.family]

    @property
    def figure_type(self) -> int:
        return _FIGURE[self.family]

    @property
    def name(self) -> str:
        return f"{self.family.value}({self.slope}; {self.index})"

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "slope": str(self.slope),
            "index": self.index,
            "weights": {k: ("inf" if v == INF_WEIGHT else v) for k, v in self.weights.items()},
            "locus": self.parabolic_locus.value,
            "isometry_group": self.isom.value,
            "fuchsian": self.fuchsian_degenerate,
            "figure_type": self.figure_type,
        }


def heckoid_descriptor(r: Slope, two_n: int) -> HeckoidDescriptor:
    """Which pared orbifold uniformizes the Heckoid group ``G(r; two_n/2)``."""
    if not isinstance(two_n, int) or two_n < 3:
        raise InvalidIndex(f"2n = {two_n}: the index n must be at least 3/2")
    if r.is_infinity:
        raise OutOfRange("slope must be finite")
    p = r.den
    fuchsian = p == 1
    if two_n % 2 == 0:
        n = two_n // 2
        weights = {"K": INF_WEIGHT, "tau-": n}
        note = f"S^2({n},inf,inf) x I" if fuchsian else ""
        return HeckoidDescriptor(Family.M0, r, n, weights, _LOCUS[Family.M0], _ISOM[Family.M0], fuchsian, note)
    m = two_n
    # G(r; n) only depends on r mod 1, and hat_r is compatible with r -> r + 1
    rhat = make_slope(0, 1) if fuchsian else hat_r(make_slope(r.num % p, p))
    if p % 2 == 1:
        weights = {"J1": INF_WEIGHT, "J2": 2, "tau-": m}
        note = f"S^2(2,{m},inf) x I" if fuchsian else ""
        return HeckoidDescriptor(Family.M1, rhat, m, weights, _LOCUS[Family.M1], _ISOM[Family.M1], fuchsian, note)
    weights = {"J1": INF_WEIGHT, "J2": 2, "tau+": 2, "tau-": m}
    return HeckoidDescriptor(Family.M2, rhat, m, weights, _LOCUS[Family.M2], _ISOM[Family.M2], False)


def heckoid_classification(r: Slope, two_n: int) -> dict:
    desc = heckoid_descriptor(r, two_n)
    report = {
        "group": f"G({r}; {format_index(two_n)})",
        "descriptor": desc.to_dict(),
        "orbifold": desc.name,
        "unique_pair": True,
        "statement": (
            f"G({r}; {format_index(two_n)}) has a unique parabolic generating pair up to "
            f"equivalence, realized by the weighted graph of figure type ({desc.figure_type})"
        ),
    }
    if desc.fuchsian_degenerate:
        m = two_n
        if desc.family is Family.M0:
            hecke = f"conjugate to the index 2 subgroup of the Hecke group H({m}), isomorphic to pi_1 S^2({two_n // 2},inf,inf)"
        else:
            hecke = f"conjugate to the Hecke group H({m}) = pi_1 S^2(2,{m},inf)"
        report["fuchsian"] = {
            "orbifold": desc.annotation,
            "hecke": hecke,
            "pair": f"{{A_{m}, Q A_{m} Q^-1}} is the unique parabolic generating pair",
        }
    return report


@dataclass(frozen=True)
class HeckeMatrices:
    m: int
    A: np.ndarray
    Q: np.ndarray

    @property
    def QA(self) -> np.ndarray:
        return self.Q @ self.A


def hecke_matrices(m: int) -> HeckeMatrices:
    if m < 3:
        raise IndexTooSmall(f"m = {m}: Hecke groups need m >= 3")
    A = np.array([[1.0, 2.0 * math.cos(math.pi / m)], [0.0, 1.0]])
    Q = np.array([[0.0, 1.0], [-1.0, 0.0]])
    return HeckeMatrices(m, A, Q)
