"""Exhaustive property sweeps behind ``twobridge selfcheck``.

Each sweep returns a :class:`SweepResult` holding the number of cases checked
and a list of human-readable violations (empty when everything holds).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .contfrac import (
    EvenSymmetry,
    PosSymmetry,
    cf_eval,
    cf_even,
    cf_positive,
    even_symmetry_class,
    pos_symmetry_class,
)
from .epi import builtin_groups, cyclic_group, dihedral_group, epi_consistency_check, epi_exists, hom_count, riley_presentation
from .farey import generator_edges, orbit_bfs, orbit_member, reduce, reflection_in_edge
from .heckoid import Family, HeckoidIsom, hat_r, hecke_matrices, heckoid_descriptor
from .pairs import CandidateKind, IsomGroup, SplitCase, classify, isometry_group
from .rational_core import INFINITY, Slope, inverse_slope, is_hyperbolic, make_slope


@dataclass
class SweepResult:
    name: str
    cases: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, msg: str) -> None:
        self.violations.append(msg)

    def line(self) -> str:
        status = "ok" if self.ok else f"FAIL ({len(self.violations)} violations)"
        return f"{self.name}: {self.cases} cases, {status}"


def lower_half_slopes(max_p: int, min_p: int = 3):
    """Reduced q/p with 0 < q <= p/2."""
    for p in range(min_p, max_p + 1):
        for q in range(1, p // 2 + 1):
            if gcd(p, q) == 1:
                yield Slope(q, p)


def knot_slopes(max_p: int):
    """Knot slopes q/p in [0, 1) with odd p, including 0/1."""
    for p in range(1, max_p + 1, 2):
        for q in range(p):
            if gcd(p, q) == 1:
                yield Slope(q, p)


def hyperbolic_slopes(max_p: int):
    for p in range(5, max_p + 1):
        for q in range(1, p):
            if gcd(p, q) == 1 and is_hyperbolic(Slope(q, p)):
                yield Slope(q, p)


def sweep_even_cf(max_p: int) -> SweepResult:
    res = SweepResult("even continued fractions")
    for r in lower_half_slopes(max_p):
        q, p = r.num, r.den
        if q % 2 and p % 2:
            continue
        res.cases += 1
        cf = cf_even(r)
        if any(c == 0 or c % 2 for c in cf.entries) or cf_eval(cf.entries) != r:
            res.fail(f"{r}: {cf} does not round-trip")
        if (len(cf) % 2 == 0) != (p % 2 == 1):
            res.fail(f"{r}: length {len(cf)} has the wrong parity")
        cls = even_symmetry_class(r)
        if p % 2:
            if (cls is EvenSymmetry.Antipalindromic) != ((q * q - 1) % p == 0):
                res.fail(f"{r}: antipalindromic={cls is EvenSymmetry.Antipalindromic}")
        elif (cls is EvenSymmetry.Palindromic) != ((q * q - 1) % (2 * p) == 0):
            res.fail(f"{r}: palindromic={cls is EvenSymmetry.Palindromic}")
    return res


def sweep_positive_cf(max_p: int) -> SweepResult:
    res = SweepResult("positive continued fractions")
    for r in lower_half_slopes(max_p):
        q, p = r.num, r.den
        res.cases += 1
        a = cf_positive(r).entries
        if min(a) < 1 or a[0] < 2 or a[-1] < 2 or cf_eval(a) != r:
            res.fail(f"{r}: {a} is not a valid expansion")
        cls = pos_symmetry_class(r)
        even_mid = p % 2 == 0 and (q * q - 1) % (2 * p) == 0
        odd_mid = (p % 2 == 1 and (q * q - 1) % p == 0) or (p % 2 == 0 and (q * q - p - 1) % (2 * p) == 0)
        if (cls is PosSymmetry.SymEvenMiddle) != even_mid:
            res.fail(f"{r}: even-middle symmetry mismatch ({cls.value})")
        if (cls is PosSymmetry.SymOddMiddle) != odd_mid:
            res.fail(f"{r}: odd-middle symmetry mismatch ({cls.value})")
    return res


def sweep_classification(max_p: int) -> SweepResult:
    res = SweepResult("pair classification")
    upper_lower = [CandidateKind.Upper, CandidateKind.Lower]
    for r in hyperbolic_slopes(max_p):
        res.cases += 1
        q, p = r.num, r.den
        rep = classify(r)
        if rep.verdict != upper_lower:
            res.fail(f"{r}: verdict {[k.value for k in rep.verdict]}")
        for c in rep.candidates:
            om = c.omega
            if c.kind in (CandidateKind.LongUpper, CandidateKind.LongLower) and om.residues != (0,):
                res.fail(f"{r}: long pair omega {om}")
            if c.kind in (CandidateKind.IntermediateL, CandidateKind.IntermediateR):
                if not set(om.residues) <= {0, p // 2} or p % 2:
                    res.fail(f"{r}: intermediate omega {om}")
            if c.kind is CandidateKind.Extra:
                pi = c.arc.den
                if om.residues != (pi,) or not 1 < pi < p or gcd(pi, p) == 1:
                    res.fail(f"{r}: extra omega {om} for arc {c.arc}")
        split = rep.extra
        if split is not None:
            (q1, p1), (q2, p2) = (split.s1.num, split.s1.den), (split.s2.num, split.s2.den)
            edge = split.case is SplitCase.EdgeCase
            if p != (2 if edge else 1) * p1 * p2:
                res.fail(f"{r}: p != {'2 ' if edge else ''}p1 p2 for {split.s1}, {split.s2}")
            # the involution fixing s1, s2 sends inf to (p1 q2 + p2 q1) / (2 p1 p2)
            if Fraction(p1 * q2 + p2 * q1, 2 * p1 * p2) != Fraction(q, p):
                res.fail(f"{r}: involution fixing {split.s1}, {split.s2} misses r")
            if abs(p2 * q1 - p1 * q2) != (1 if edge else 2):
                res.fail(f"{r}: wrong determinant for {split.s1}, {split.s2}")
    return res


def sweep_isometry(max_p: int) -> SweepResult:
    res = SweepResult("isometry trichotomy")
    for r in hyperbolic_slopes(max_p):
        res.cases += 1
        q, p = r.num, r.den
        conds = {
            IsomGroup.Z2xZ2: (q * q - 1) % p != 0,
            IsomGroup.D4: (p % 2 == 1 and (q * q - 1) % p == 0) or (p % 2 == 0 and (q * q - p - 1) % (2 * p) == 0),
            IsomGroup.Z2cubed: p % 2 == 0 and (q * q - 1) % (2 * p) == 0,
        }
        if sum(conds.values()) != 1 or not conds[isometry_group(r)]:
            res.fail(f"{r}: {isometry_group(r).value} with conditions {conds}")
    return res


def random_slope(rng: random.Random, max_den: int) -> Slope:
    while True:
        p = rng.randint(1, max_den)
        q = rng.randint(-3 * p, 3 * p)
        if gcd(p, q) == 1:
            return Slope(q, p)


ORBIT_SLOPES = ("1/3", "2/5", "3/7", "2/7", "5/17")


def sweep_orbits(depth: int = 6, max_den: int = 500, samples: int = 1000, seed: int = 0) -> SweepResult:
    res = SweepResult("orbit machinery")
    for text in ORBIT_SLOPES:
        r = make_slope(*map(int, text.split("/")))
        for s in sorted(orbit_bfs(r, depth, max_den), key=lambda t: (t.den, t.num)):
            res.cases += 1
            if s.den % r.den:
                res.fail(f"{s} in orbit of {r} has denominator not divisible by {r.den}")
            v = orbit_member(s, r)
            if not v.positive or v.word(s) not in (r, INFINITY):
                res.fail(f"{s} not certified in the orbit of {r}")
    rng = random.Random(seed)
    for _ in range(samples):
        r = random_slope(rng, 40)
        if r.den < 2:
            continue
        x = random_slope(rng, 400)
        res.cases += 1
        rep, word = reduce(x, r)
        if word(x) != rep:
            res.fail(f"reduce({x}, {r}): word does not map x to {rep}")
        rep2, word2 = reduce(rep, r)
        if rep2 != rep or len(word2):
            res.fail(f"reduce({x}, {r}) not idempotent")
        # moving x by any generator must not change the representative
        for e in generator_edges(r):
            if reduce(reflection_in_edge(e)(x), r)[0] != rep:
                res.fail(f"reduce({x}, {r}) changes under the reflection in {e}")
    return res


def sweep_epi(max_pt: int = 60, targets=(3, 5, 7)) -> SweepResult:
    res = SweepResult("epimorphism criterion")
    sources = list(knot_slopes(max_pt))
    for p in targets:
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            r = Slope(q, p)
            for rt in sources:
                res.cases += 1
                v = epi_exists(rt, r)
                if epi_exists(rt + 1, r).exists != v.exists:
                    res.fail(f"translation: {rt} vs {rt + 1} onto {r}")
                mirror = make_slope(rt.den - rt.num, rt.den) if rt.den > 1 else rt
                if epi_exists(mirror, r).exists != v.exists:
                    res.fail(f"mirror: {rt} vs {mirror} onto {r}")
                if rt.den > 1 and epi_exists(inverse_slope(rt), r).exists != v.exists:
                    res.fail(f"inverse: {rt} onto {r}")
                if v.exists:
                    if rt.den % p:
                        res.fail(f"{rt} onto {r}: {p} does not divide {rt.den}")
                    if v.witness(v.tested) not in (v.target, INFINITY):
                        res.fail(f"{rt} onto {r}: witness fails")
    return res


def sweep_hom_counts(max_p: int = 40) -> SweepResult:
    res = SweepResult("homomorphism counts")
    cyclic = [cyclic_group(n) for n in range(2, 7)]
    for r in knot_slopes(max_p):
        if r.den < 3:
            continue
        res.cases += 1
        pres = riley_presentation(r)
        a, b = pres.exponent_sums()
        if a != -b:
            res.fail(f"{r}: exponent sums {a}, {b}")
        for z in cyclic:
            if hom_count(pres, z) != z.order:
                res.fail(f"{r}: {hom_count(pres, z)} homs to {z.name}")
        if not dihedral_witness(r):
            res.fail(f"{r}: no pair of reflections in D_{r.den} satisfies the relator")
    groups = builtin_groups()
    for r in knot_slopes(max_p):
        if r.den < 3:
            continue
        for rt in knot_slopes(max_p):
            v = epi_exists(rt, r)
            if v.exists:
                res.cases += 1
                rep = epi_consistency_check(rt, r, groups, verdict=v)
                res.violations.extend(rep.violations)
    return res


def dihedral_witness(r: Slope) -> bool:
    """Two reflections of D_p whose product generates the rotations satisfy the relator."""
    p = r.den
    table = dihedral_group(p)
    pres = riley_presentation(r)
    # reflections are the elements of order 2 outside the rotation subgroup
    rotations = _rotation_subgroup(table)
    refl = [g for g in range(table.order) if g not in rotations]
    for x in refl:
        for y in refl:
            prod = int(table.mul[x, y])
            if _element_order(table, prod) != p:
                continue
            if _evaluate(pres.relator, table, x, y) == table.identity:
                return True
    return False


def _element_order(table, g: int) -> int:
    k, h = 1, g
    while h != table.identity:
        h = int(table.mul[h, g])
        k += 1
    return k


def _rotation_subgroup(table) -> set[int]:
    n = table.order // 2
    for g in range(table.order):
        if _element_order(table, g) == n:
            out, h = {table.identity}, g
            while h != table.identity:
                out.add(h)
                h = int(table.mul[h, g])
            return out
    raise ValueError(f"{table.name} has no rotation of order {n}")


def _evaluate(word: str, table, x: int, y: int) -> int:
    images = {"a": x, "A": int(table.inv[x]), "b": y, "B": int(table.inv[y])}
    acc = table.identity
    for ch in word:
        acc = int(table.mul[acc, images[ch]])
    return acc


_FAMILY_ISOM = {Family.M0: HeckoidIsom.Z2xZ2, Family.M1: HeckoidIsom.Z2, Family.M2: HeckoidIsom.Z2}


def sweep_heckoid(samples: int = 200, seed: int = 0) -> SweepResult:
    res = SweepResult("heckoid descriptors")
    rng = random.Random(seed)
    for _ in range(samples):
        p = rng.randint(2, 60)
        q = rng.randrange(1, p)
        if gcd(p, q) != 1:
            continue
        two_n = rng.randint(3, 40)
        r = Slope(q, p)
        res.cases += 1
        d = heckoid_descriptor(r, two_n)
        if two_n % 2 == 0:
            want_family, want_slope = Family.M0, r
        else:
            want_family = Family.M1 if p % 2 else Family.M2
            want_slope = hat_r(r)
        if d.family is not want_family or d.slope != want_slope:
            res.fail(f"G({r}; {two_n}/2) gave {d.name}")
        if d.isom is not _FAMILY_ISOM[d.family]:
            res.fail(f"{d.name}: isometry group {d.isom.value}")
    for m in range(3, 13):
        res.cases += 1
        h = hecke_matrices(m)
        qa = h.QA
        if abs(abs(np.trace(qa)) - 2 * math.cos(math.pi / m)) > 1e-12:
            res.fail(f"m={m}: trace {np.trace(qa)}")
        power = np.linalg.matrix_power(qa, m)
        if min(np.abs(power - np.eye(2)).max(), np.abs(power + np.eye(2)).max()) > 1e-9:
            res.fail(f"m={m}: (QA)^m != +-I")
    return res


def run_all(max_p: int, seed: int = 0) -> list[SweepResult]:
    return [
        sweep_even_cf(max_p),
        sweep_positive_cf(max_p),
        sweep_isometry(max_p),
        sweep_classification(max_p),
        sweep_orbits(seed=seed),
        sweep_epi(min(max_p, 60)),
        sweep_hom_counts(min(max_p, 40)),
        sweep_heckoid(seed=seed),
    ]
