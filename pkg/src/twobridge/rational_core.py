"""Exact slopes (extended rationals) and the arithmetic predicates on them.

A slope ``q/p`` is stored reduced with ``p >= 0``; the point at infinity is
normalized to ``1/0`` so that equality of slopes is structural equality.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InfinityInput, IntegerSlope, ParseError, ZeroOverZero

_SLOPE_RE = re.compile(r"^(-?[0-9]+)/([0-9]+)$")


@dataclass(frozen=True, order=False)
class Slope:
    num: int
    den: int

    def __post_init__(self):
        if self.den < 0 or gcd(self.num, self.den) != 1:
            raise ValueError(f"unnormalized slope {self.num}/{self.den}; use make_slope")
        if self.den == 0 and self.num != 1:
            raise ValueError("infinity must be stored as 1/0")

    @property
    def is_infinity(self) -> bool:
        return self.den == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    def as_fraction(self) -> Fraction:
        if self.is_infinity:
            raise InfinityInput("infinity has no finite value")
        return Fraction(self.num, self.den)

    def vector(self) -> tuple[int, int]:
        """The column vector ``(p, q)`` on which matrices act."""
        return (self.den, self.num)

    def __add__(self, other: int) -> Slope:
        if not isinstance(other, int):
            return NotImplemented
        if self.is_infinity:
            return self
        return make_slope(self.num + other * self.den, self.den)

    def __neg__(self) -> Slope:
        if self.is_infinity:
            return self
        return Slope(-self.num, self.den)

    def __str__(self) -> str:
        return "inf" if self.is_infinity else f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Slope({self})"


INFINITY = Slope(1, 0)


def make_slope(num: int, den: int) -> Slope:
    """Reduce ``num/den``; every ``x/0`` becomes infinity."""
    num, den = int(num), int(den)
    if num == 0 and den == 0:
        raise ZeroOverZero("0/0 is not a slope")
    if den == 0:
        return INFINITY
    g = gcd(num, den)
    num, den = num // g, den // g
    if den < 0:
        num, den = -num, -den
    return Slope(num, den)


def from_fraction(x: Fraction | int) -> Slope:
    x = Fraction(x)
    return Slope(x.numerator, x.denominator)


def parse_slope(text: str) -> Slope:
    text = text.strip()
    if text == "inf":
        return INFINITY
    m = _SLOPE_RE.match(text)
    if not m:
        raise ParseError(f"cannot parse slope {text!r}; expected q/p or inf")
    return make_slope(int(m.group(1)), int(m.group(2)))


def _finite(r: Slope) -> None:
    if r.is_infinity:
        raise InfinityInput("slope must be finite")


def residue_class(r: Slope) -> int:
    _finite(r)
    return r.num % r.den


def inverse_slope(r: Slope) -> Slope:
    """``q'/p`` with ``q q' = 1 (mod p)`` and ``0 < q' < p``."""
    _finite(r)
    if r.den <= 1:
        raise IntegerSlope(f"{r} has denominator <= 1")
    return Slope(pow(r.num, -1, r.den), r.den)


def slope_equivalent(r1: Slope, r2: Slope) -> bool:
    """Same 2-bridge link (mirror images are *not* identified)."""
    _finite(r1)
    _finite(r2)
    if r1.den != r2.den:
        return False
    p = r1.den
    if p == 1:
        return True
    q1 = residue_class(r1)
    return residue_class(r2) in (q1, pow(q1, -1, p))


class LinkVariant(enum.Enum):
    TrivialKnot = "trivial knot"
    TorusLink = "torus link"
    HyperbolicKnot = "hyperbolic knot"
    HyperbolicTwoComponent = "hyperbolic two-component link"


@dataclass(frozen=True)
class LinkKind:
    variant: LinkVariant
    components: int

    @property
    def hyperbolic(self) -> bool:
        return self.variant in (LinkVariant.HyperbolicKnot, LinkVariant.HyperbolicTwoComponent)

    def __str__(self) -> str:
        if self.variant is LinkVariant.TorusLink:
            return "torus knot" if self.components == 1 else "torus link"
        return self.variant.value


def is_hyperbolic(r: Slope) -> bool:
    _finite(r)
    p = r.den
    return p >= 2 and (r.num - 1) % p != 0 and (r.num + 1) % p != 0


def link_kind(r: Slope) -> LinkKind:
    _finite(r)
    p = r.den
    components = 1 if (p % 2 == 1 or p <= 1) else 2
    if p == 1:
        return LinkKind(LinkVariant.TrivialKnot, 1)
    if not is_hyperbolic(r):
        return LinkKind(LinkVariant.TorusLink, components)
    if components == 1:
        return LinkKind(LinkVariant.HyperbolicKnot, 1)
    return LinkKind(LinkVariant.HyperbolicTwoComponent, 2)
