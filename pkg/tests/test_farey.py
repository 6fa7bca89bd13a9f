import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twobridge.errors import IntegerSlope, NotNeighbors
from twobridge.farey import (
    FareyEdge,
    OrbitVariant,
    ProjMatrix,
    ReflectionWord,
    conjugator_to_infinity,
    farey_neighbors,
    fold_to_strip,
    generator_edges,
    orbit_bfs,
    orbit_member,
    reduce,
    reflection_in_edge,
    vertical_edge,
    words_from_indices,
)
from twobridge.rational_core import INFINITY, Slope, make_slope


def test_matrix_sign_canonical():
    assert ProjMatrix(-1, 0, 0, -1) == ProjMatrix.identity()
    with pytest.raises(ValueError):
        ProjMatrix(2, 0, 0, 1)


def test_reflection_examples(S):
    assert reflection_in_edge(FareyEdge(S("0/1"), INFINITY))(S("3/7")) == S("-3/7")
    assert reflection_in_edge(vertical_edge(4))(S("3/7")) == S("53/7")
    m = reflection_in_edge(FareyEdge(S("1/3"), S("0/1")))
    assert m == ProjMatrix(-1, 6, 0, 1) or m == ProjMatrix(1, -6, 0, -1)
    assert m(INFINITY) == S("1/6")


def test_not_neighbors(S):
    with pytest.raises(NotNeighbors):
        FareyEdge(S("1/3"), S("1/2") + 1)


def test_farey_neighbors(S):
    fan = farey_neighbors(S("1/3"))
    assert fan.base == S("0/1")
    assert [str(fan.neighbor(k)) for k in range(3)] == ["0/1", "1/4", "2/7"]
    assert S("2/7") in farey_neighbors(S("5/17"))
    fan = farey_neighbors(S("2/5"))
    assert S("1/2") in fan and S("1/3") in fan
    with pytest.raises(IntegerSlope):
        farey_neighbors(S("3/1"))


def test_conjugator(S):
    b = conjugator_to_infinity(S("1/3"))
    assert b == ProjMatrix(1, -3, 0, 1)
    assert b(S("1/3")) == INFINITY
    assert b(INFINITY) == S("-1/3")
    b0 = conjugator_to_infinity(S("0/1"))
    assert b0(S("0/1")) == INFINITY


def fold_oracle(x: Fraction, c: int) -> Fraction:
    """Search the orbit of x under x -> 2n - x for its point in [c, c+1]."""
    hits = set()
    span = abs(int(x)) + abs(c) + 3
    for n in range(-span, span + 1):
        for y in (x + 2 * n, 2 * n - x):
            if c <= y <= c + 1:
                hits.add(y)
    assert len(hits) == 1 or (len(hits) == 2 and all(h.denominator == 1 for h in hits))
    return min(hits)


@pytest.mark.parametrize("x, c, expected", [("7/6", -1, "-5/6"), ("1/6", -1, "-1/6"), ("1/9", 0, "1/9")])
def test_fold_examples(S, x, c, expected):
    y, w = fold_to_strip(S(x), c)
    assert y == S(expected)
    assert w(S(x)) == y
    assert fold_oracle(S(x).as_fraction(), c) == S(expected).as_fraction()


def test_fold_infinity():
    assert fold_to_strip(INFINITY, 3) == (INFINITY, ReflectionWord())


@given(st.integers(-200, 200), st.integers(1, 60), st.integers(-5, 5))
def test_fold_property(num, den, c):
    x = make_slope(num, den)
    y, w = fold_to_strip(x, c)
    assert c <= y.as_fraction() <= c + 1
    assert w(x) == y
    assert len(w) <= 2
    assert y.as_fraction() == fold_oracle(x.as_fraction(), c) or y.den == 1


def test_reduce_examples(S):
    rep, w = reduce(S("1/9"), S("1/3"))
    assert rep == S("1/3") and len(w) == 2 and w(S("1/9")) == rep
    rep, w = reduce(S("2/5"), S("1/3"))
    assert rep == S("0/1") and w(S("2/5")) == rep
    rep, w = reduce(S("3/7"), S("3/7"))
    assert rep == S("3/7") and len(w) == 0


def test_orbit_member_examples(S):
    assert orbit_member(S("1/9"), S("1/3")).variant is OrbitVariant.InOrbitOfR
    v = orbit_member(S("1/6"), S("1/3"))
    assert v.variant is OrbitVariant.InOrbitOfInfinity and v.word(S("1/6")) == INFINITY
    v = orbit_member(S("2/5"), S("1/3"))
    assert v.variant is OrbitVariant.NotInOrbit and v.rep == S("0/1")


def test_orbit_bfs_depth_zero(S):
    assert orbit_bfs(S("1/3"), 0, 10) == {S("1/3"), INFINITY}
    assert orbit_bfs(S("1/3"), 1, 10) == {S("-1/3"), S("1/3"), S("1/6"), S("5/3"), INFINITY}


def mobius(edge: FareyEdge):
    """Independent reflection across the geodesic between two rationals, on Fractions."""
    (p1, q1), (p2, q2) = edge.s.vector(), edge.t.vector()
    m = p1 * q2 + p2 * q1

    def f(x):
        if x is None:  # infinity
            return None if p1 * p2 == 0 else Fraction(m, 2 * p1 * p2)
        den = m - 2 * p1 * p2 * x
        if den == 0:
            return None
        return (2 * q1 * q2 - m * x) / den

    return f


def oracle_orbit(r: Slope, depth: int):
    gens = [mobius(e) for e in generator_edges(r)]
    start = {r.as_fraction(), None}
    seen = set(start)
    frontier = set(start)
    for _ in range(depth):
        frontier = {g(x) for x in frontier for g in gens} - seen
        seen |= frontier
    return seen


@pytest.mark.parametrize("text", ["1/3", "2/5", "3/7", "5/17", "-4/9", "13/5"])
def test_orbit_bfs_matches_oracle(S, text):
    r = S(text)
    ours = {None if s.is_infinity else s.as_fraction() for s in orbit_bfs(r, 4, 10**9)}
    assert ours == oracle_orbit(r, 4)


def test_reflections_square_to_identity():
    rng = random.Random(1)
    for _ in range(1000):
        p = rng.randint(1, 300)
        q = rng.randint(-600, 600)
        if gcd(p, q) != 1:
            continue
        s = Slope(q, p)
        if p == 1 and rng.random() < 0.3:
            e = FareyEdge(s, INFINITY)
        else:
            fan = farey_neighbors(s) if p > 1 else None
            t = fan.neighbor(rng.randint(-5, 5)) if fan else Slope(q + 1, 1)
            e = FareyEdge(s, t)
        m = reflection_in_edge(e)
        assert m.det == -1
        assert m @ m == ProjMatrix.identity()
        assert m(e.s) == e.s and m(e.t) == e.t


def _random_word(rng, r, n):
    return words_from_indices(r, [rng.randrange(4) for _ in range(n)])


def test_reduce_invariance_random():
    rng = random.Random(7)
    for _ in range(400):
        p = rng.randint(2, 30)
        q = rng.randint(-2 * p, 2 * p)
        if gcd(p, q) != 1:
            continue
        r = Slope(q, p)
        x = make_slope(rng.randint(-500, 500), rng.randint(1, 300))
        rep, w = reduce(x, r)
        assert w(x) == rep
        assert reduce(rep, r)[0] == rep
        g = _random_word(rng, r, rng.randint(1, 6))
        assert abs(g.matrix().det) == 1
        assert reduce(g(x), r)[0] == rep
        # denominator invariant and translation by 2
        if x.den % p == 0:
            assert g(x).den % p == 0
        assert orbit_member(x, r).positive == orbit_member(x + 2, r).positive


@settings(max_examples=200)
@given(st.integers(2, 40), st.integers(-80, 80), st.integers(-3000, 3000), st.integers(1, 2000))
def test_orbit_member_sound(p, q, xn, xd):
    if gcd(p, q) != 1:
        return
    r = Slope(q, p)
    x = make_slope(xn, xd)
    v = orbit_member(x, r)
    if v.positive:
        assert x.den % p == 0
        assert v.word(x) in (r, INFINITY)


def test_word_then_reduces():
    e = vertical_edge(0)
    w = ReflectionWord((e,))
    assert len(w.then(w)) == 0
    assert w.then(ReflectionWord((vertical_edge(1),))).edges == (vertical_edge(1), e)
