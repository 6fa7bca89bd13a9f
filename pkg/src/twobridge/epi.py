"""Epimorphisms between 2-bridge knot groups.

:func:`epi_exists` decides whether ``G(r_tilde)`` surjects onto ``G(r)``: it
does iff ``r_tilde`` or ``r_tilde + 1`` lies in the ``Gamma_hat``-orbit of
``{r, inf}`` or of ``{r', inf}``, where ``r' = q'/p`` with ``q q' = 1 (mod p)``.

Homomorphism counts into small finite groups give an independent sanity
check: an epimorphism ``G(r_tilde) -> G(r)`` makes ``Hom(G(r), F)`` inject
into ``Hom(G(r_tilde), F)``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import InfinityInput, IntegerSlope, LinkSlope, OutOfRange
from .farey import ReflectionWord, orbit_member
from .rational_core import Slope, inverse_slope, make_slope


class Clause(enum.Enum):
    C1_r = "C1_r"
    C1_rPlus1 = "C1_rPlus1"
    C2_r = "C2_r"
    C2_rPlus1 = "C2_rPlus1"
    TrivialTarget = "TrivialTarget"

    @property
    def number(self) -> int:
        return 2 if self.name.startswith("C2") else 1


@dataclass(frozen=True)
class EpiVerdict:
    exists: bool
    clause: Clause | None = None
    witness: ReflectionWord | None = None
    obstruction: str | None = None
    tested: Slope | None = None  # the slope the witness moves (r_tilde or r_tilde + 1)
    target: Slope | None = None  # r or r', normalized into (0, 1)

    def summary(self) -> str:
        if not self.exists:
            return f"NO ({self.obstruction})"
        if self.clause is Clause.TrivialTarget:
            return "YES (trivial target)"
        return f"YES (clause {self.clause.number}, witness length {len(self.witness)})"

    def to_dict(self) -> dict:
        return {
            "exists": self.exists,
            "clause": self.clause.value if self.clause else None,
            "tested": str(self.tested) if self.tested else None,
            "target": str(self.target) if self.target else None,
            "witness": self.witness.to_list() if self.witness is not None else None,
            "obstruction": self.obstruction,
        }


def _knot_slope(r: Slope, name: str) -> None:
    if r.is_infinity:
        raise InfinityInput(f"{name} must be finite")
    if r.den >= 2 and r.den % 2 == 0:
        raise LinkSlope(f"{name} = {r} is a two-component link; only knot targets are decided")


def epi_exists(r_tilde: Slope, r: Slope) -> EpiVerdict:
    _knot_slope(r_tilde, "r_tilde")
    _knot_slope(r, "r")
    p = r.den
    if p <= 1:
        return EpiVerdict(True, Clause.TrivialTarget, target=make_slope(0, 1))
    r0 = make_slope(r.num % p, p)
    r1 = inverse_slope(r0)
    shifted = r_tilde + 1
    tests = [
        (Clause.C1_r, r_tilde, r0),
        (Clause.C1_rPlus1, shifted, r0),
        (Clause.C2_r, r_tilde, r1),
        (Clause.C2_rPlus1, shifted, r1),
    ]
    reps = []
    for clause, x, target in tests:
        v = orbit_member(x, target)
        if v.positive:
            return EpiVerdict(True, clause, v.word, tested=x, target=target)
        reps.append(v.rep)
    if r_tilde.den % p:
        why = f"denominator {r_tilde.den} ≢ 0 mod {p} for both {r_tilde} and {shifted}; r′ = {r1}"
    else:
        why = "reduced representatives " + ", ".join(map(str, reps)) + f" avoid r, r′ = {r1} and inf"
    return EpiVerdict(False, obstruction=why)


def orbit_condition(r_tilde: Slope, r: Slope) -> tuple[bool, ReflectionWord | None]:
    """r_tilde or r_tilde + 1 in the Gamma_hat_r-orbit of r or inf (links allowed)."""
    if r.is_infinity:
        raise InfinityInput("r must be finite")
    if r.den <= 1:
        raise IntegerSlope(f"{r} is an integer")
    for x in (r_tilde, r_tilde + 1):
        v = orbit_member(x, r)
        if v.positive:
            return True, v.word
    return False, None


# --- presentations ---------------------------------------------------------

# a word is a string over "aAbB"; capitals are inverses
_INV = str.maketrans("aAbB", "AaBb")


def invert_word(w: str) -> str:
    return w[::-1].translate(_INV)


def free_reduce(w: str) -> str:
    out: list[str] = []
    for ch in w:
        if out and out[-1] == ch.translate(_INV):
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


@dataclass(frozen=True)
class Presentation:
    relator: str
    generators: tuple[str, str] = ("a", "b")

    def __post_init__(self):
        if not self.relator or free_reduce(self.relator) != self.relator:
            raise ValueError(f"relator {self.relator!r} must be nonempty and freely reduced")

    def exponent_sums(self) -> tuple[int, int]:
        w = self.relator
        return (w.count("a") - w.count("A"), w.count("b") - w.count("B"))

    def __str__(self) -> str:
        return f"⟨a,b | {self.relator}⟩"


def _riley_word(p: int, beta: int, first: str) -> str:
    """Alternating word of p - 1 letters with signs (-1)^floor(i beta / p)."""
    letters = []
    other = "a" if first == "b" else "b"
    for i in range(1, p):
        g = first if i % 2 == 1 else other
        letters.append(g if (i * beta // p) % 2 == 0 else g.upper())
    return "".join(letters)


def riley_presentation(r: Slope) -> Presentation:
    """One-relator presentation of ``G(r)`` with (a, b) the upper meridian pair.

    Knots: ``a w = w b``.  Links: ``a w = w a``.  In both, ``w`` alternates
    b, a, b, ... with p - 1 letters and exponents ``(-1)^floor(i q / p)``, where
    q is taken odd (replaced by q - p when even).
    """
    if r.is_infinity or r.den < 2:
        raise OutOfRange(f"{r}: presentation needs denominator >= 2")
    p = r.den
    q = r.num % p
    beta = q if q % 2 == 1 else q - p
    w = _riley_word(p, beta, "b")
    if p % 2 == 1:
        return Presentation("a" + w + "B" + invert_word(w))
    return Presentation("a" + w + "A" + invert_word(w))


# --- finite groups ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FiniteGroupTable:
    name: str
    mul: np.ndarray  # mul[i, j] = index of g_i g_j
    identity: int
    inv: np.ndarray

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    @classmethod
    def from_generators(cls, name: str, gens, mul, identity) -> FiniteGroupTable:
        elements = [identity]
        index = {identity: 0}
        i = 0
        while i < len(elements):
            for g in gens:
                h = mul(elements[i], g)
                if h not in index:
                    index[h] = len(elements)
                    elements.append(h)
            i += 1
        n = len(elements)
        table = np.empty((n, n), dtype=np.int64)
        for x, y in itertools.product(range(n), repeat=2):
            table[x, y] = index[mul(elements[x], elements[y])]
        inv = np.array([int(np.flatnonzero(table[x] == 0)[0]) for x in range(n)], dtype=np.int64)
        return cls(name, table, 0, inv)

    def validate(self) -> bool:
        n = self.order
        m = self.mul
        e = self.identity
        if not (np.array_equal(m[e], np.arange(n)) and np.array_equal(m[:, e], np.arange(n))):
            return False
        if not np.all(m[np.arange(n), self.inv] == e):
            return False
        # (xy)z == x(yz) for all triples
        return bool(np.array_equal(m[m, :], m[:, m]))


def _perm_mul(s, t):
    # apply t first, then s
    return tuple(s[i] for i in t)


def cyclic_group(n: int) -> FiniteGroupTable:
    return FiniteGroupTable.from_generators(f"Z{n}", [1 % n], lambda x, y: (x + y) % n, 0)


def dihedral_group(n: int) -> FiniteGroupTable:
    """Symmetries of the n-gon, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return FiniteGroupTable.from_generators(f"D{n}", [rot, ref], _perm_mul, tuple(range(n)))


def symmetric_group(n: int) -> FiniteGroupTable:
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return FiniteGroupTable.from_generators(f"S{n}", gens, _perm_mul, tuple(range(n)))


def alternating_group(n: int) -> FiniteGroupTable:
    # the 3-cycles (k k+1 k+2) generate A_n
    gens = []
    for k in range(n - 2):
        perm = list(range(n))
        perm[k], perm[k + 1], perm[k + 2] = k + 1, k + 2, k
        gens.append(tuple(perm))
    return FiniteGroupTable.from_generators(f"A{n}", gens, _perm_mul, tuple(range(n)))


def quaternion_group() -> FiniteGroupTable:
    # unit quaternions (w, x, y, z) with integer entries
    def qmul(s, t):
        a1, b1, c1, d1 = s
        a2, b2, c2, d2 = t
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    return FiniteGroupTable.from_generators("Q8", [(0, 1, 0, 0), (0, 0, 1, 0)], qmul, (1, 0, 0, 0))


@lru_cache(maxsize=None)
def builtin_groups() -> tuple[FiniteGroupTable, ...]:
    groups = [cyclic_group(n) for n in range(2, 7)]
    groups += [dihedral_group(n) for n in range(3, 7)]
    groups += [symmetric_group(3), symmetric_group(4), alternating_group(4), quaternion_group()]
    return tuple(groups)


def hom_count(pres: Presentation, table: FiniteGroupTable) -> int:
    """Number of assignments (a, b) in F x F that kill the relator."""
    n = table.order
    a = np.repeat(np.arange(n), n)
    b = np.tile(np.arange(n), n)
    images = {"a": a, "A": table.inv[a], "b": b, "B": table.inv[b]}
    acc = np.full(n * n, table.identity, dtype=np.int64)
    for ch in pres.relator:
        acc = table.mul[acc, images[ch]]
    return int(np.count_nonzero(acc == table.identity))


@lru_cache(maxsize=4096)
def _slope_hom_count(r: Slope, table: FiniteGroupTable) -> int:
    if r.den <= 1:
        return table.order  # the unknot group is infinite cyclic
    return hom_count(riley_presentation(r), table)


@dataclass
class ConsistencyReport:
    r_tilde: Slope
    r: Slope
    exists: bool
    counts: dict = field(default_factory=dict)  # name -> (count for r, count for r_tilde)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "r_tilde": str(self.r_tilde),
            "r": str(self.r),
            "exists": self.exists,
            "counts": {k: {"target": a, "source": b} for k, (a, b) in self.counts.items()},
            "violations": list(self.violations),
        }


def epi_consistency_check(r_tilde: Slope, r: Slope, tables=None, verdict: EpiVerdict | None = None) -> ConsistencyReport:
    """Check |Hom(G(r), F)| <= |Hom(G(r_tilde), F)| whenever an epimorphism exists."""
    if verdict is None:
        verdict = epi_exists(r_tilde, r)
    report = ConsistencyReport(r_tilde, r, verdict.exists)
    if not verdict.exists:
        return report
    for table in tables if tables is not None else builtin_groups():
        target = _slope_hom_count(r, table)
        source = _slope_hom_count(r_tilde, table)
        report.counts[table.name] = (target, source)
        if target > source:
            report.violations.append(f"{table.name}: {target} homs from G({r}) but only {source} from G({r_tilde})")
    return report
