import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solidpsc import (
    gen_blocs,
    gen_impartial,
    make_quota,
    maximal_support,
    psc_committees_bruteforce,
    random_quota,
    serialize_profile,
)
from solidpsc.errors import InvalidDimensions, OverlappingBlocs
from solidpsc.profile import is_valid_quota
from solidpsc.rng import XorShift64Star, splitmix64


def test_splitmix_reference_vector():
    assert splitmix64(0) == 0xE220A8397B1DCDAF


@given(st.integers(0, 2**64 - 1))
def test_xorshift_step_matches_numpy_uint64(seed):
    rng = XorShift64Star(seed)
    x = np.uint64(rng.state)
    with np.errstate(over="ignore"):
        for _ in range(4):
            x ^= x >> np.uint64(12)
            x ^= x << np.uint64(25)
            x ^= x >> np.uint64(27)
            assert rng.next_u64() == int(x * np.uint64(0x2545F4914F6CDD1D))


def test_rng_regression():
    rng = XorShift64Star(1)
    assert [rng.next_u64() for _ in range(3)] == [5424204624148110235, 15555979849632202484, 6851360858507811590]


@given(st.integers(0, 2**64 - 1), st.integers(1, 1000))
def test_below_in_range(seed, bound):
    rng = XorShift64Star(seed)
    assert all(0 <= rng.below(bound) < bound for _ in range(20))


def test_impartial_shape_and_determinism():
    prof = gen_impartial(3, 3, 1, seed=7)
    assert (prof.n, prof.m, prof.k) == (3, 3, 1)
    assert all(sorted(b.order) == [0, 1, 2] for b in prof.ballots)
    assert serialize_profile(prof) == serialize_profile(gen_impartial(3, 3, 1, seed=7))
    assert serialize_profile(prof) == "3 3 1\ncandidates: a,b,c\n1: b,a,c\n1: b,c,a\n1: c,a,b\n"


@pytest.mark.parametrize("n, m, k", [(0, 3, 1), (3, 3, 0), (3, 3, 4), (3, 0, 1)])
def test_impartial_invalid(n, m, k):
    with pytest.raises(InvalidDimensions):
        gen_impartial(n, m, k, seed=1)


def test_blocs_examples():
    prof = gen_blocs([(2, {"a", "b"}), (2, {"c", "d"})], m=4, k=2, seed=1)
    assert maximal_support(prof, {0, 1})[0] >= 2
    assert maximal_support(prof, {2, 3})[0] >= 2
    prof = gen_blocs([(4, {"a"})], m=3, k=1, seed=5)
    assert all(b.order[0] == 0 for b in prof.ballots)
    with pytest.raises(OverlappingBlocs):
        gen_blocs([(1, {"a", "b"}), (1, {"a", "c"})], m=3, k=1, seed=1)
    with pytest.raises(InvalidDimensions):
        gen_blocs([(0, {"a"})], m=3, k=1, seed=1)


bloc_layouts = st.integers(2, 5).flatmap(
    lambda m: st.tuples(
        st.just(m),
        st.lists(st.integers(1, 4), min_size=1, max_size=m).flatmap(
            lambda sizes: st.tuples(st.just(sizes), st.permutations(range(m)), st.lists(st.integers(1, 2), min_size=len(sizes), max_size=len(sizes)))
        ),
        st.integers(0, 2**32),
    )
)


@settings(max_examples=60)
@given(bloc_layouts, st.data())
def test_bloc_guarantees(layout, data):
    m, (sizes, perm, widths), seed = layout
    specs, pos = [], 0
    for size, width in zip(sizes, widths):
        if pos >= m:
            break
        specs.append((size, set(perm[pos : pos + width])))
        pos += width
    k = data.draw(st.integers(1, m))
    prof = gen_blocs(specs, m, k, seed)
    for size, cset in specs:
        assert maximal_support(prof, cset)[0] >= size
    q = make_quota(prof.n, k, "hare")
    committees = psc_committees_bruteforce(prof, q)
    for size, cset in specs:
        ell = size // q.__ceil__()
        for w in committees:
            assert len(cset.intersection(w)) >= min(ell, len(cset))


@given(st.integers(1, 30), st.integers(1, 8), st.integers(0, 2**32))
def test_random_quota_valid(n, k, seed):
    q = random_quota(n, k, XorShift64Star(seed))
    assert isinstance(q, Fraction) and is_valid_quota(n, k, q)
