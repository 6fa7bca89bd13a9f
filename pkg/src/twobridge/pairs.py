"""Isometry groups, candidate meridian pairs and their omega-invariants.

For a hyperbolic 2-bridge link ``K(q/p)`` every parabolic generating pair of
the link group is equivalent to one of a short list of candidate meridian
pairs read off from the strong inversions.  Each candidate carries the class
``omega`` of the product ``m1 m2`` in ``H_1`` of the double branched cover
(cyclic of order ``p``).  A generating pair must have ``omega`` a generator,
which rules out everything except the upper and lower pairs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd

from .errors import ConditionNotMet, KindNotApplicable, NoSolution, NotHyperbolic
from .rational_core import LinkKind, Slope, is_hyperbolic, link_kind


class IsomGroup(enum.Enum):
    Z2xZ2 = "(Z2)^2"
    D4 = "D4"
    Z2cubed = "(Z2)^3"


def _hyperbolic(r: Slope) -> tuple[int, int]:
    if r.is_infinity or not is_hyperbolic(r):
        raise NotHyperbolic(f"{r}: K(r) is not hyperbolic (q = +-1 mod p or p < 2)")
    return r.num % r.den, r.den


def isometry_group(r: Slope) -> IsomGroup:
    q, p = _hyperbolic(r)
    if (q * q - 1) % p != 0:
        return IsomGroup.Z2xZ2
    if p % 2 == 1 or (q * q - p - 1) % (2 * p) == 0:
        return IsomGroup.D4
    return IsomGroup.Z2cubed


class SplitCase(enum.Enum):
    EdgeCase = "edge"  # p = 2 p1 p2, fixed set a Farey edge
    GeodesicCase = "geodesic"  # p = p1 p2, fixed set a non-Farey geodesic


@dataclass(frozen=True)
class ExtraSplit:
    s1: Slope
    s2: Slope
    case: SplitCase

    @property
    def denominators(self) -> tuple[int, int]:
        return (self.s1.den, self.s2.den)


def _divisor_pairs(n: int):
    d = 2
    while d * d <= n:
        if n % d == 0:
            yield d, n // d
        d += 1


def extra_split(r: Slope) -> ExtraSplit:
    """Endpoints of the edge or geodesic whose reflection swaps inf and r.

    Solves ``p2 q1 + p1 q2 = T``, ``p2 q1 - p1 q2 = delta`` over the
    factorizations of ``p/2`` (edge case, ``T = q``, ``delta = +-1``) or of
    ``p`` (geodesic case, ``T = 2q``, ``delta = +-2``).
    """
    if r.is_infinity or not is_hyperbolic(r):
        raise ConditionNotMet(f"{r}: not a hyperbolic slope")
    p = r.den
    q = r.num % p
    if p % 2 == 0 and (q * q - 1) % (2 * p) == 0:
        case, n, target, deltas = SplitCase.EdgeCase, p // 2, q, (1, -1)
    elif (q * q - 1) % p == 0:
        case, n, target, deltas = SplitCase.GeodesicCase, p, 2 * q, (2, -2)
    else:
        raise ConditionNotMet(f"{r}: q^2 != 1 (mod p), no extra symmetry")

    solutions = []
    for p1, p2 in _divisor_pairs(n):
        for delta in deltas:
            n1, n2 = target + delta, target - delta
            if n1 % (2 * p2) or n2 % (2 * p1):
                continue
            q1, q2 = n1 // (2 * p2), n2 // (2 * p1)
            if 0 < q1 < p1 and 0 < q2 < p2 and gcd(q1, p1) == 1 and gcd(q2, p2) == 1:
                solutions.append((Slope(q1, p1), Slope(q2, p2)))
    if len(solutions) != 1:
        raise NoSolution(f"{r}: expected one extra split, found {len(solutions)}")
    s1, s2 = solutions[0]
    return ExtraSplit(s1, s2, case)


class CandidateKind(enum.Enum):
    Upper = "upper"
    Lower = "lower"
    LongUpper = "long upper"
    LongLower = "long lower"
    IntermediateL = "intermediate L"
    IntermediateR = "intermediate R"
    Extra = "extra"


class OmegaVariant(enum.Enum):
    Exact = "exact"
    InSet = "in set"
    GeneratorClass = "generator"


@dataclass(frozen=True)
class OmegaValue:
    variant: OmegaVariant
    residues: tuple[int, ...] = ()
    modulus: int = 0

    @classmethod
    def exact(cls, k: int, p: int) -> OmegaValue:
        return cls(OmegaVariant.Exact, (k % p,), p)

    @classmethod
    def in_set(cls, ks, p: int) -> OmegaValue:
        return cls(OmegaVariant.InSet, tuple(sorted({k % p for k in ks})), p)

    @classmethod
    def generator(cls, p: int) -> OmegaValue:
        return cls(OmegaVariant.GeneratorClass, (), p)

    def may_generate(self) -> bool:
        if self.variant is OmegaVariant.GeneratorClass:
            return True
        return any(gcd(k, self.modulus) == 1 for k in self.residues)

    def to_json(self):
        if self.variant is OmegaVariant.GeneratorClass:
            return "generator"
        if self.variant is OmegaVariant.Exact:
            return self.residues[0]
        return list(self.residues)

    def __str__(self) -> str:
        if self.variant is OmegaVariant.GeneratorClass:
            return f"generator of Z_{self.modulus}"
        if self.variant is OmegaVariant.Exact:
            return f"{self.residues[0]} mod {self.modulus}"
        return "{" + ", ".join(map(str, self.residues)) + f"}} mod {self.modulus}"


@dataclass(frozen=True)
class PairCandidate:
    kind: CandidateKind
    omega: OmegaValue
    generates: bool
    equivalence_note: str = ""
    inversion: int | None = None  # extra pairs: which extra strong inversion
    arc: Slope | None = None  # extra pairs: slope of the tunnel arc
    arc_copy: int | None = None  # extra pairs: which of the arcs of that slope

    @property
    def label(self) -> str:
        if self.kind is CandidateKind.Extra:
            return f"extra({self.inversion}, {self.arc}, {self.arc_copy})"
        return self.kind.value

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind.value,
            "omega": self.omega.to_json(),
            "generates": self.generates,
            "note": self.equivalence_note,
        }
        if self.kind is CandidateKind.Extra:
            d["inversion"] = self.inversion
            d["arc"] = str(self.arc)
            d["arc_copy"] = self.arc_copy
        return d


def _extra_applies(q: int, p: int) -> bool:
    if p % 2 == 1:
        return (q * q - 1) % p == 0
    return (q * q - 1) % (2 * p) == 0


def omega_of_candidate(kind: CandidateKind, r: Slope, arc: Slope | None = None) -> OmegaValue:
    q, p = _hyperbolic(r)
    knot = p % 2 == 1
    if kind in (CandidateKind.Upper, CandidateKind.Lower):
        return OmegaValue.generator(p)
    if kind in (CandidateKind.LongUpper, CandidateKind.LongLower):
        if not knot:
            raise KindNotApplicable(f"{kind.value} pairs exist only for knots; {r} is a link")
        return OmegaValue.exact(0, p)
    if kind in (CandidateKind.IntermediateL, CandidateKind.IntermediateR):
        if knot:
            raise KindNotApplicable(f"{kind.value} pairs exist only for links; {r} is a knot")
        return OmegaValue.in_set((0, p // 2), p)
    if not _extra_applies(q, p):
        raise KindNotApplicable(f"{r} has no extra strong inversion")
    split = extra_split(r)
    if arc not in (split.s1, split.s2):
        raise KindNotApplicable(f"{arc} is not an extra tunnel slope of {r}")
    return OmegaValue.exact(arc.den, p)


def _candidate(kind, r, note="", arc=None, inversion=None, arc_copy=None) -> PairCandidate:
    omega = omega_of_candidate(kind, r, arc)
    return PairCandidate(kind, omega, omega.may_generate(), note, inversion, arc, arc_copy)


def candidates(r: Slope) -> list[PairCandidate]:
    """Every meridian pair that could be a parabolic generating pair, up to equivalence."""
    q, p = _hyperbolic(r)
    out = [_candidate(CandidateKind.Upper, r), _candidate(CandidateKind.Lower, r)]
    if p % 2 == 1:
        out.append(_candidate(CandidateKind.LongUpper, r, "second tunnel fixed by h+"))
        out.append(_candidate(CandidateKind.LongLower, r, "second tunnel fixed by h-"))
    else:
        note = "the two intermediate pairs are equivalent modulo the automorphism f*"
        out.append(_candidate(CandidateKind.IntermediateL, r, note))
        out.append(_candidate(CandidateKind.IntermediateR, r, note))
    if _extra_applies(q, p):
        split = extra_split(r)
        if p % 2 == 1:
            # two extra strong inversions gh, g^3h, each fixing one arc of each slope
            slots = [(inv, s, 1) for inv in (1, 2) for s in (split.s1, split.s2)]
            autom = "g*"
        else:
            # one extra strong inversion fixing two arcs of each slope
            slots = [(1, s, c) for s in (split.s1, split.s2) for c in (1, 2)]
            autom = "f*"
        for inv, s, c in slots:
            cls = "A" if s == split.s1 else "B"
            note = f"class {cls}: extra pairs with arc slope {s} are equivalent modulo {autom}"
            out.append(_candidate(CandidateKind.Extra, r, note, s, inv, c))
    return out


@dataclass
class ClassificationReport:
    slope: Slope
    kind: LinkKind
    isom: IsomGroup
    candidates: list[PairCandidate]
    verdict: list[CandidateKind]
    inequivalent: bool = True
    extra: ExtraSplit | None = None
    basis: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = {
            "slope": str(self.slope),
            "kind": str(self.kind),
            "isometry_group": self.isom.value,
            "candidates": [c.to_dict() for c in self.candidates],
            "verdict": [k.value for k in self.verdict],
            "upper_lower_inequivalent": self.inequivalent,
        }
        if self.extra is not None:
            d["extra_split"] = {
                "s1": str(self.extra.s1),
                "s2": str(self.extra.s2),
                "case": self.extra.case.value,
            }
        d["citations"] = list(self.basis)
        return d


_BASIS = [
    "omega(m1, m2) of a generating meridian pair generates H_1 of the double branched cover",
    "long upper/lower pairs have omega = 0",
    "intermediate pairs satisfy 2 omega = 0",
    "extra pairs have omega = p_i, the denominator of the tunnel arc slope, with 1 < p_i < p",
    "the upper and lower meridian pairs are not equivalent",
]


def classify(r: Slope) -> ClassificationReport:
    q, p = _hyperbolic(r)
    cands = candidates(r)
    verdict = [c.kind for c in cands if c.generates]
    extra = extra_split(r) if _extra_applies(q, p) else None
    return ClassificationReport(
        slope=r,
        kind=link_kind(r),
        isom=isometry_group(r),
        candidates=cands,
        verdict=verdict,
        extra=extra,
        basis=list(_BASIS),
    )

