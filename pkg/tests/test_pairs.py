from math import gcd

import pytest

from twobridge.errors import ConditionNotMet, KindNotApplicable, NotHyperbolic
from twobridge.pairs import (
    CandidateKind,
    IsomGroup,
    OmegaVariant,
    SplitCase,
    candidates,
    classify,
    extra_split,
    isometry_group,
    omega_of_candidate,
)
from twobridge.rational_core import Slope, inverse_slope, is_hyperbolic, make_slope

from oracles import split_fractions


def hyperbolic(max_p):
    for p in range(5, max_p + 1):
        for q in range(1, p):
            if gcd(p, q) == 1 and is_hyperbolic(Slope(q, p)):
                yield Slope(q, p)


def split_oracle(r: Slope):
    return {make_slope(f.numerator, f.denominator) for f in split_fractions(r.num, r.den)}


@pytest.mark.parametrize(
    "text, group",
    [("2/5", IsomGroup.Z2xZ2), ("3/8", IsomGroup.D4), ("5/12", IsomGroup.Z2cubed), ("10/33", IsomGroup.D4)],
)
def test_isometry_group(S, text, group):
    assert isometry_group(S(text)) is group


def test_isometry_group_rejects_torus(S):
    with pytest.raises(NotHyperbolic):
        isometry_group(S("1/3"))


def test_extra_split_examples(S):
    sp = extra_split(S("5/12"))
    assert {sp.s1, sp.s2} == {S("1/2"), S("1/3")} and sp.case is SplitCase.EdgeCase
    sp = extra_split(S("10/33"))
    assert {sp.s1, sp.s2} == {S("1/3"), S("3/11")} and sp.case is SplitCase.GeodesicCase
    with pytest.raises(ConditionNotMet):
        extra_split(S("2/5"))


def test_extra_split_matches_oracle_exhaustive():
    count = 0
    for r in hyperbolic(300):
        q, p = r.num, r.den
        if (q * q - 1) % p:
            continue
        if p % 2 == 0 and (q * q - 1) % (2 * p):
            # q^2 = p + 1 (mod 2p): the symmetry is not an extra strong inversion
            continue
        count += 1
        sp = extra_split(r)
        assert {sp.s1, sp.s2} == split_oracle(r)
    assert count > 100


def test_omega_examples(S):
    om = omega_of_candidate(CandidateKind.LongUpper, S("2/5"))
    assert om.variant is OmegaVariant.Exact and om.residues == (0,)
    om = omega_of_candidate(CandidateKind.Extra, S("10/33"), S("1/3"))
    assert om.residues == (3,)
    om = omega_of_candidate(CandidateKind.IntermediateL, S("3/8"))
    assert om.variant is OmegaVariant.InSet and om.residues == (0, 4)
    with pytest.raises(KindNotApplicable):
        omega_of_candidate(CandidateKind.IntermediateL, S("2/5"))
    with pytest.raises(KindNotApplicable):
        omega_of_candidate(CandidateKind.LongLower, S("3/8"))


def test_candidates_examples(S):
    c = candidates(S("2/5"))
    assert len(c) == 4
    assert [x.kind for x in c if x.generates] == [CandidateKind.Upper, CandidateKind.Lower]
    c = candidates(S("5/12"))
    assert len(c) == 8
    assert sorted(x.omega.residues[0] for x in c if x.kind is CandidateKind.Extra) == [2, 2, 3, 3]
    c = candidates(S("10/33"))
    assert len(c) == 8
    assert sorted(x.omega.residues[0] for x in c if x.kind is CandidateKind.Extra) == [3, 3, 11, 11]
    assert len(candidates(S("3/8"))) == 4


def test_classify(S):
    rep = classify(S("2/5"))
    assert rep.verdict == [CandidateKind.Upper, CandidateKind.Lower]
    assert rep.inequivalent
    d = rep.to_dict()
    assert d["verdict"] == ["upper", "lower"] and len(d["candidates"]) == 4
    with pytest.raises(NotHyperbolic):
        classify(S("1/3"))


def _kind_profile(r):
    p = r.den
    out = []
    for c in candidates(r):
        res = tuple(sorted({min(k % p, -k % p) for k in c.omega.residues}))
        out.append((c.kind, c.omega.variant, res))
    return sorted(out, key=repr)


def test_mirror_and_inverse_invariance():
    for r in hyperbolic(200):
        mirror = Slope(r.den - r.num, r.den)
        assert isometry_group(mirror) is isometry_group(r)
        assert _kind_profile(mirror) == _kind_profile(r)
        assert isometry_group(inverse_slope(r)) is isometry_group(r)


def test_intermediate_has_no_unit():
    for r in hyperbolic(300):
        if r.den % 2:
            continue
        for c in candidates(r):
            if c.kind in (CandidateKind.IntermediateL, CandidateKind.IntermediateR):
                assert all(gcd(k, r.den) != 1 for k in c.omega.residues)
                assert not c.generates
