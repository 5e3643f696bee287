from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from solidpsc import (
    demand_cap,
    j_prefix,
    make_quota,
    parse_profile,
    prefix_classes,
    serialize_profile,
)
from solidpsc.errors import (
    DuplicateCandidateName,
    IncompleteOrder,
    IndexOutOfRange,
    MalformedBallot,
    MalformedHeader,
    MultiplicityMismatch,
    QuotaError,
    QuotaOutOfRange,
    UnknownCandidate,
)

from conftest import P1_TEXT, P2_TEXT, profiles, quotas


def test_parse_p1(p1):
    prof = parse_profile(P1_TEXT)
    assert (prof.n, prof.m, prof.k) == (4, 4, 2)
    assert prof.candidate_names == ("a", "b", "c", "d")
    assert prof == p1


def test_parse_quota_line_and_multiplicities():
    prof = parse_profile("5 2 1\ncandidates: x,y\nquota: 4/1\n3: x,y\n2: y,x\n")
    assert prof.quota_spec == "4/1"
    assert prof.n == 5
    assert [b.multiplicity for b in prof.ballots] == [3, 2]


@pytest.mark.parametrize(
    "text, exc",
    [
        ("4 4 2\ncandidates: a,b,c,d\n1: a,a,b,c\n", IncompleteOrder),
        ("4 4 2\ncandidates: a,b,c,d\n1: a,b,c\n", IncompleteOrder),
        ("5 3 2\ncandidates: a,b,c\n2: a,b,c\n2: c,b,a\n", MultiplicityMismatch),
        ("1 3 2\ncandidates: a,b,c\n1: a,b,z\n", UnknownCandidate),
        ("1 3 2\ncandidates: a,b,a\n1: a,b,c\n", DuplicateCandidateName),
        ("1 3\ncandidates: a,b,c\n1: a,b,c\n", MalformedHeader),
        ("1 3 2\nnames: a,b,c\n1: a,b,c\n", MalformedHeader),
        ("1 4 2\ncandidates: a,b,c\n1: a,b,c\n", MalformedHeader),
        ("1 3 4\ncandidates: a,b,c\n1: a,b,c\n", MalformedHeader),
        ("1 3 2\ncandidates: a,b,c\na,b,c\n", MalformedBallot),
        ("1 3 2\ncandidates: a,b,c\n0: a,b,c\n", MalformedBallot),
        ("", MalformedHeader),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_profile(text)


def test_serialize_merges_and_sorts():
    prof = parse_profile("3 2 1\ncandidates: a,b\n1: b,a\n1: a,b\n1: b,a\n")
    assert serialize_profile(prof) == "3 2 1\ncandidates: a,b\n1: a,b\n2: b,a\n"


@given(profiles())
def test_roundtrip(prof):
    canon = prof.canonical()
    assert parse_profile(serialize_profile(prof)) == canon
    assert serialize_profile(parse_profile(serialize_profile(prof))) == serialize_profile(prof)


@pytest.mark.parametrize(
    "n, k, spec, expected",
    [(4, 2, "hare", Fraction(2)), (5, 2, "midpoint", Fraction(25, 12)), (4, 3, "hare", Fraction(4, 3)), (4, 2, "3/2", Fraction(3, 2))],
)
def test_make_quota(n, k, spec, expected):
    assert make_quota(n, k, spec) == expected


@pytest.mark.parametrize("spec", ["1/1", "4/3", "5/2", "3"])
def test_make_quota_out_of_range(spec):
    # interval for n=4, k=2 is (4/3, 2]
    with pytest.raises(QuotaOutOfRange):
        make_quota(4, 2, spec)


def test_make_quota_garbage():
    with pytest.raises(QuotaError):
        make_quota(4, 2, "droop")


@pytest.mark.parametrize("size, q, expected", [(4, Fraction(2), 2), (3, Fraction(2), 1), (5, Fraction(25, 12), 2), (0, Fraction(7, 3), 0)])
def test_demand_cap(size, q, expected):
    assert demand_cap(size, q) == expected


@given(st.integers(0, 500), st.integers(1, 60), st.integers(1, 60))
def test_demand_cap_brackets(x, p, r):
    q = Fraction(p, r)
    d = demand_cap(x, q)
    assert d * q <= x < (d + 1) * q
    assert demand_cap(x + 1, q) >= d


@given(profiles().flatmap(lambda p: quotas(p).map(lambda q: (p, q))))
def test_demand_cap_of_electorate_is_k(pq):
    prof, q = pq
    assert demand_cap(prof.n, q) == prof.k


def test_j_prefix(p1):
    assert j_prefix(p1, p1.ballots[2], 2) == {2, 3}
    assert j_prefix(p1, p1.ballots[0], 1) == {0}
    assert j_prefix(p1, 1, 4) == {0, 1, 2, 3}
    with pytest.raises(IndexOutOfRange):
        j_prefix(p1, 0, 5)


def test_prefix_classes(p1, p2):
    assert [(c.cset, c.weight) for c in prefix_classes(p1, 1)] == [((0,), 2), ((2,), 2)]
    assert [(c.cset, c.weight) for c in prefix_classes(p1, 2)] == [((0, 1), 2), ((2, 3), 2)]
    assert [(c.cset, c.weight) for c in prefix_classes(p2, 2)] == [((0, 1), 2), ((0, 2), 1), ((1, 2), 1)]


@given(profiles(), st.data())
def test_prefix_classes_partition(prof, data):
    j = data.draw(st.integers(1, prof.m))
    classes = prefix_classes(prof, j)
    voters = [v for c in classes for v in c.voters]
    assert sorted(voters) == list(range(len(prof.ballots)))
    assert sum(c.weight for c in classes) == prof.n
    assert all(c.voters and len(c.cset) == j for c in classes)
    assert [c.cset for c in classes] == sorted(c.cset for c in classes)
