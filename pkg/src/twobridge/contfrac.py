"""Even and positive continued-fraction expansions of slopes.

The nest convention is ``[c1, ..., cn] = 1/(c1 + 1/(c2 + ... + 1/cn))``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    BothOdd,
    DivisionCollapse,
    NoRepresentative,
    OutOfRange,
    ParseError,
    ZeroEntry,
)
from .rational_core import Slope, from_fraction, make_slope


def format_cf(entries: Sequence[int]) -> str:
    return "[" + ",".join(str(c) for c in entries) + "]"


def parse_cf(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"cannot parse continued fraction {text!r}")
    try:
        return tuple(int(t) for t in text[1:-1].split(","))
    except ValueError:
        raise ParseError(f"cannot parse continued fraction {text!r}") from None


@dataclass(frozen=True)
class EvenCF:
    half_entries: tuple[int, ...]

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(2 * b for b in self.half_entries)

    def __len__(self) -> int:
        return len(self.half_entries)

    def __str__(self) -> str:
        return format_cf(self.entries)


@dataclass(frozen=True)
class PosCF:
    entries: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return format_cf(self.entries)


def cf_eval(entries: Sequence[int]) -> Slope:
    if not entries:
        raise ZeroEntry("empty continued fraction")
    if any(c == 0 for c in entries):
        raise ZeroEntry(f"zero entry in {format_cf(entries)}")
    tail = Fraction(entries[-1])
    for c in reversed(entries[:-1]):
        if tail == 0:
            raise DivisionCollapse(f"intermediate value vanishes in {format_cf(entries)}")
        tail = c + 1 / tail
    if tail == 0:
        raise DivisionCollapse(f"{format_cf(entries)} evaluates to infinity")
    return from_fraction(1 / tail)


def _check_proper(r: Slope) -> tuple[int, int]:
    if r.is_infinity or not (0 < r.num < r.den):
        raise OutOfRange(f"{r} is not of the form q/p with 0 < q < p")
    return r.num, r.den


def cf_even(r: Slope) -> EvenCF:
    """Expansion into nonzero even entries by nearest-even division."""
    q, p = _check_proper(r)
    if q % 2 == 1 and p % 2 == 1:
        raise BothOdd(f"{r}: p and q both odd, no even expansion exists")
    halves = []
    num, den = p, q  # current tail value num/den
    while True:
        if den == 1:
            # parity invariant: exactly one of num, den is even
            halves.append(num // 2)
            break
        # nearest even integer 2b with |num/den - 2b| < 1
        b = (num + den) // (2 * den)
        halves.append(b)
        num, den = den, num - 2 * b * den
        if den < 0:
            num, den = -num, -den
    return EvenCF(tuple(halves))


def _check_lower_half(r: Slope) -> tuple[int, int]:
    if r.is_infinity or not (0 < 2 * r.num <= r.den):
        raise OutOfRange(f"{r} is not of the form q/p with 0 < q <= p/2")
    return r.num, r.den


def cf_positive(r: Slope) -> PosCF:
    """Euclidean expansion with a trailing 1 absorbed, so a_n >= 2."""
    q, p = _check_lower_half(r)
    entries = []
    num, den = p, q
    while den:
        a, rem = divmod(num, den)
        entries.append(a)
        num, den = den, rem
    if len(entries) > 1 and entries[-1] == 1:
        entries.pop()
        entries[-1] += 1
    return PosCF(tuple(entries))


class EvenSymmetry(enum.Enum):
    Antipalindromic = "antipalindromic"
    Palindromic = "palindromic"
    Asymmetric = "asymmetric"


class PosSymmetry(enum.Enum):
    SymEvenMiddle = "symmetric, even middle"
    SymOddMiddle = "symmetric, odd middle"
    Asymmetric = "asymmetric"


def even_symmetry_class(r: Slope) -> EvenSymmetry:
    _check_lower_half(r)
    b = cf_even(r).half_entries
    if all(x == -y for x, y in zip(b, reversed(b))):
        return EvenSymmetry.Antipalindromic
    if b == b[::-1]:
        return EvenSymmetry.Palindromic
    return EvenSymmetry.Asymmetric


def pos_symmetry_class(r: Slope) -> PosSymmetry:
    a = cf_positive(r).entries
    if len(a) % 2 == 0 or a != a[::-1]:
        return PosSymmetry.Asymmetric
    if a[len(a) // 2] % 2 == 0:
        return PosSymmetry.SymEvenMiddle
    return PosSymmetry.SymOddMiddle


def cf_normal_rep(r: Slope) -> tuple[Slope, bool]:
    """A Schubert representative c/p with 0 < c <= p/2 and not both c, p odd.

    Candidates are tried in the order q, q', p - q, p - q' (q' the inverse
    residue); the flag is True when a mirror candidate was used.
    """
    if r.is_infinity or r.den < 2:
        raise OutOfRange(f"{r}: denominator must be at least 2")
    p = r.den
    q = r.num % p
    qi = pow(q, -1, p)
    for c, mirror in ((q, False), (qi, False), (p - q, True), (p - qi, True)):
        if 0 < 2 * c <= p and not (c % 2 == 1 and p % 2 == 1):
            return make_slope(c, p), mirror
    raise NoRepresentative(f"{r}: no representative with 0 < q <= p/2 and one of p, q even")
