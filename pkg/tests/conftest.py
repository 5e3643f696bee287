import math
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from solidpsc import profile_from_rankings
from solidpsc.profile import Ballot, PreferenceProfile, default_names, quota_bounds

P1_TEXT = """\
# four voters, two solid pairs
4 4 2
candidates: a,b,c,d
1: a,b,c,d
1: a,b,d,c
1: c,d,a,b
1: c,d,b,a
"""

P2_TEXT = """\
4 3 2
candidates: a,b,c
1: a,b,c
1: a,c,b
1: b,a,c
1: c,b,a
"""


@pytest.fixture
def p1():
    return profile_from_rankings(["abcd", "abdc", "cdab", "cdba"], k=2)


@pytest.fixture
def p2():
    return profile_from_rankings(["abc", "acb", "bac", "cba"], k=2)


@pytest.fixture
def p1_file(tmp_path):
    path = tmp_path / "p1.txt"
    path.write_text(P1_TEXT)
    return str(path)


@pytest.fixture
def p2_file(tmp_path):
    path = tmp_path / "p2.txt"
    path.write_text(P2_TEXT)
    return str(path)


def rankings_of(profile):
    """Expand multiplicities into one name tuple per voter (oracle input)."""
    out = []
    for b in profile.ballots:
        out.extend([tuple(profile.candidate_names[c] for c in b.order)] * b.multiplicity)
    return out


@st.composite
def profiles(draw, max_m=5, max_types=6, max_mult=3):
    m = draw(st.integers(1, max_m))
    k = draw(st.integers(1, m))
    types = draw(st.integers(1, max_types))
    ballots = tuple(
        Ballot(tuple(draw(st.permutations(range(m)))), draw(st.integers(1, max_mult))) for _ in range(types)
    )
    return PreferenceProfile(default_names(m), ballots, k)


@st.composite
def quotas(draw, profile, max_denominator=12):
    lo, hi = quota_bounds(profile.n, profile.k)
    d = draw(st.integers(1, max_denominator))
    first, last = math.floor(lo * d) + 1, math.floor(hi * d)
    if first > last:
        return hi
    return Fraction(draw(st.integers(first, last)), d)


@st.composite
def instances(draw, **kw):
    """(profile, valid quota, random size-k committee)."""
    profile = draw(profiles(**kw))
    q = draw(quotas(profile))
    w = tuple(sorted(draw(st.permutations(range(profile.m)))[: profile.k]))
    return profile, q, w
