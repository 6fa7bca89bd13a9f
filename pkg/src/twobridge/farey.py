"""The Farey tessellation as an arithmetic object.

A slope ``q/p`` is the column vector ``(p, q)``; a matrix ``[[a, b], [c, d]]``
sends it to ``(ap + bq, cp + dq)``, i.e. ``s -> (c + d s)/(a + b s)``.

``Gamma_r`` is generated by the reflections in the Farey edges ending at ``r``
and ``Gamma_hat_r`` by ``Gamma_inf`` together with ``Gamma_r``.  For
non-integral ``r`` the latter is a free product and :func:`reduce` folds any
slope into its fundamental domain by alternating the two folds.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import InfinityInput, IntegerSlope, IterationCapExceeded, NotNeighbors
from .rational_core import INFINITY, Slope, make_slope


@dataclass(frozen=True)
class ProjMatrix:
    """Integer 2x2 matrix of determinant +-1, stored with a canonical sign."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if abs(self.a * self.d - self.b * self.c) != 1:
            raise ValueError(f"determinant of {self} is not +-1")
        lead = next(x for x in (self.a, self.b, self.c, self.d) if x != 0)
        if lead < 0:
            for name in "abcd":
                object.__setattr__(self, name, -getattr(self, name))

    @classmethod
    def identity(cls) -> ProjMatrix:
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: ProjMatrix) -> ProjMatrix:
        return ProjMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> ProjMatrix:
        return ProjMatrix(self.d, -self.b, -self.c, self.a)

    def __call__(self, s: Slope) -> Slope:
        p, q = s.vector()
        return make_slope(self.c * p + self.d * q, self.a * p + self.b * q)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def _neighbors(s: Slope, t: Slope) -> bool:
    return abs(s.den * t.num - t.den * s.num) == 1


@dataclass(frozen=True)
class FareyEdge:
    """Unordered pair of Farey neighbors, stored in a canonical order."""

    s: Slope
    t: Slope

    def __post_init__(self):
        if not _neighbors(self.s, self.t):
            raise NotNeighbors(f"{self.s} and {self.t} are not Farey neighbors")
        if _order_key(self.t) < _order_key(self.s):
            s, t = self.t, self.s
            object.__setattr__(self, "s", s)
            object.__setattr__(self, "t", t)

    @property
    def endpoints(self) -> tuple[Slope, Slope]:
        return (self.s, self.t)

    def __str__(self) -> str:
        return f"{{{self.s},{self.t}}}"


def _order_key(s: Slope) -> tuple[int, int, int]:
    # canonical storage order only; infinity last
    if s.is_infinity:
        return (1, 0, 0)
    return (0, s.num, s.den)


def reflection_in_edge(e: FareyEdge) -> ProjMatrix:
    p1, q1 = e.s.vector()
    p2, q2 = e.t.vector()
    m = p1 * q2 + p2 * q1
    return ProjMatrix(m, -2 * p1 * p2, 2 * q1 * q2, -m)


def vertical_edge(n: int) -> FareyEdge:
    """The edge ``{inf, n}``, whose reflection is ``x -> 2n - x``."""
    return FareyEdge(INFINITY, Slope(n, 1))


@dataclass(frozen=True)
class ReflectionWord:
    """Reflections in Farey edges; the last edge is applied first."""

    edges: tuple[FareyEdge, ...] = ()

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[FareyEdge]:
        return iter(self.edges)

    def then(self, later: ReflectionWord) -> ReflectionWord:
        """The word applying ``self`` first and ``later`` afterwards, freely reduced."""
        edges = list(self.edges)
        for e in reversed(later.edges):
            if edges and edges[0] == e:
                edges.pop(0)
            else:
                edges.insert(0, e)
        return ReflectionWord(tuple(edges))

    def matrix(self) -> ProjMatrix:
        m = ProjMatrix.identity()
        for e in self.edges:
            m = m @ reflection_in_edge(e)
        return m

    def __call__(self, s: Slope) -> Slope:
        return self.matrix()(s)

    def to_list(self) -> list[list[str]]:
        return [[str(e.s), str(e.t)] for e in self.edges]

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.edges) if self.edges else "(empty)"


@dataclass(frozen=True)
class FareyFan:
    """Neighbors of a non-integral slope r: ``s_k = (q0 + k q)/(p0 + k p)``."""

    center: Slope
    base: Slope

    def neighbor(self, k: int) -> Slope:
        return make_slope(self.base.num + k * self.center.num, self.base.den + k * self.center.den)

    def __contains__(self, s: Slope) -> bool:
        return _neighbors(self.center, s)


def _require_nonintegral(r: Slope) -> None:
    if r.is_infinity:
        raise InfinityInput("slope must be finite")
    if r.den <= 1:
        raise IntegerSlope(f"{r} is an integer")


def farey_neighbors(r: Slope) -> FareyFan:
    _require_nonintegral(r)
    p, q = r.den, r.num
    # smallest 0 < p0 < p with q p0 = +-1 (mod p)
    p0 = min(pow(q, -1, p), pow(-q, -1, p))
    q0 = (q * p0 + (1 if (q * p0) % p == p - 1 else -1)) // p
    return FareyFan(r, Slope(q0, p0))


def conjugator_to_infinity(r: Slope) -> ProjMatrix:
    """B with B(r) = inf: first row (q, -p), second row a Bezout pair."""
    if r.is_infinity:
        raise InfinityInput("slope must be finite")
    p, q = r.den, r.num
    d = pow(q, -1, p) if p > 1 else 0
    c = (1 - d * q) // p
    return ProjMatrix(q, -p, c, d)


def _floor(s: Slope) -> int:
    return s.num // s.den


def fold_to_strip(x: Slope, c: int) -> tuple[Slope, ReflectionWord]:
    """Fold x into ``[c, c+1]`` by reflections ``x -> 2n - x``."""
    return _fold_interval(x, c, 1)


def _fold_interval(x: Slope, lo: int, width: int) -> tuple[Slope, ReflectionWord]:
    """Fold x into ``[lo, lo + width]`` with the reflections in ``{inf, lo + j width}``."""
    if x.is_infinity:
        return x, ReflectionWord()
    # t = x - lo = num/den; k = floor(t / 2w); u = t - 2kw in [0, 2w)
    num = x.num - lo * x.den
    k = num // (2 * width * x.den)
    u_num = num - 2 * k * width * x.den
    if u_num <= width * x.den:
        if k == 0:
            return x, ReflectionWord()
        word = ReflectionWord((vertical_edge(lo), vertical_edge(lo + k * width)))
        return make_slope(u_num + lo * x.den, x.den), word
    word = ReflectionWord((vertical_edge(lo + (k + 1) * width),))
    return make_slope((lo + 2 * width) * x.den - u_num, x.den), word


def _conjugate_word(word: ReflectionWord, m: ProjMatrix) -> ReflectionWord:
    """The word ``m^-1 w m`` written as reflections in the image edges."""
    minv = m.inverse()
    return ReflectionWord(tuple(FareyEdge(minv(e.s), minv(e.t)) for e in word.edges))


def iteration_cap(x: Slope) -> int:
    return 64 + 4 * (abs(x.num).bit_length() + x.den.bit_length())


def _cusp_folds(r: Slope, strip: int, wedge_ends: tuple[Slope, Slope]):
    """Integer vertices shared by a strip wall and a wedge wall.

    There the two walls generate a parabolic subgroup, and plain alternation
    of the strip and wedge folds advances only one step per round.  Each
    entry is ``(C, lo, width)`` with ``C`` sending the cusp to infinity and the
    two walls to the vertical lines at ``lo`` and ``lo + width``.
    """
    out = []
    for v in (strip, strip + 1):
        if Slope(v, 1) in wedge_ends:
            cusp = conjugator_to_infinity(Slope(v, 1))
            n1, n2 = cusp(INFINITY).num, cusp(r).num
            out.append((cusp, min(n1, n2), abs(n1 - n2)))
    return out


def reduce(x: Slope, r: Slope) -> tuple[Slope, ReflectionWord]:
    """Canonical representative of x in the closed fundamental domain of Gamma_hat_r.

    Returns ``(rep, w)`` with ``w(x) == rep``.
    """
    _require_nonintegral(r)
    strip = _floor(r)
    conj = conjugator_to_infinity(r)
    conj_inv = conj.inverse()
    wedge = _floor(conj(INFINITY))
    cusps = _cusp_folds(r, strip, (conj_inv(Slope(wedge, 1)), conj_inv(Slope(wedge + 1, 1))))

    word = ReflectionWord()
    cap = iteration_cap(x)
    for _ in range(cap):
        moved = False
        for m, lo, width in cusps:
            y, w = _fold_interval(m(x), lo, width)
            if w:
                x, moved = m.inverse()(y), True
                word = word.then(_conjugate_word(w, m))
        x1, w1 = fold_to_strip(x, strip)
        y, w2 = fold_to_strip(conj(x1), wedge)
        x2 = conj_inv(y)
        word = word.then(w1).then(_conjugate_word(w2, conj))
        if not (w1 or w2 or moved):
            return x2, word
        x = x2
    raise IterationCapExceeded(f"reduction of {x} modulo Gamma_hat({r}) exceeded {cap} rounds")


class OrbitVariant(enum.Enum):
    InOrbitOfR = "in orbit of r"
    InOrbitOfInfinity = "in orbit of infinity"
    NotInOrbit = "not in orbit"


@dataclass(frozen=True)
class MembershipVerdict:
    variant: OrbitVariant
    rep: Slope
    word: ReflectionWord | None = None

    @property
    def positive(self) -> bool:
        return self.variant is not OrbitVariant.NotInOrbit


def orbit_member(x: Slope, r: Slope) -> MembershipVerdict:
    """Does x lie in the Gamma_hat_r-orbit of r or of infinity?"""
    _require_nonintegral(r)
    rep, word = reduce(x, r)
    if x.den % r.den != 0:
        # denominators divisible by p form an invariant set containing r and inf
        return MembershipVerdict(OrbitVariant.NotInOrbit, rep)
    if rep == r:
        return MembershipVerdict(OrbitVariant.InOrbitOfR, rep, word)
    if rep == INFINITY:
        return MembershipVerdict(OrbitVariant.InOrbitOfInfinity, rep, word)
    return MembershipVerdict(OrbitVariant.NotInOrbit, rep)


def generator_edges(r: Slope) -> tuple[FareyEdge, ...]:
    """The four reflection generators of Gamma_hat_r: strip walls, then wedge walls."""
    _require_nonintegral(r)
    c = _floor(r)
    conj = conjugator_to_infinity(r)
    n = _floor(conj(INFINITY))
    conj_inv = conj.inverse()
    return (
        vertical_edge(c),
        vertical_edge(c + 1),
        FareyEdge(r, conj_inv(Slope(n, 1))),
        FareyEdge(r, conj_inv(Slope(n + 1, 1))),
    )


def orbit_bfs(r: Slope, depth: int, max_den: int) -> set[Slope]:
    """Images of {r, inf} under all words of length <= depth in the four generators."""
    _require_nonintegral(r)
    gens = [reflection_in_edge(e) for e in generator_edges(r)]
    seen = {r, INFINITY}
    frontier = set(seen)
    for _ in range(depth):
        nxt = set()
        for s in frontier:
            for g in gens:
                t = g(s)
                if t not in seen:
                    nxt.add(t)
        seen |= nxt
        frontier = nxt
    return {s for s in seen if s.den <= max_den}


def words_from_indices(r: Slope, indices: Iterable[int]) -> ReflectionWord:
    """A generator word (index i picks generator_edges(r)[i]), first index applied last."""
    edges = generator_edges(r)
    return ReflectionWord(tuple(edges[i] for i in indices))
