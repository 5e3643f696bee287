"""q-PSC verdicts for committees.

Two independent deciders are provided. :func:`verify_psc` scans the prefix
classes (polynomial); :func:`verify_psc_definitional` enumerates every
candidate subset and every demand level straight from the definition and
is meant as a cross-check on small instances.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .coalitions import CoalitionWitness, unmet_demands
from .errors import CommitteeWrongSize, SearchSpaceTooLarge, TooManyCandidates
from .profile import CandidateSet, PreferenceProfile, demand_cap, format_quota

MAX_DEFINITIONAL_CANDIDATES = 20
MAX_BRUTEFORCE_COMMITTEES = 10**6


@dataclass(frozen=True)
class Verdict:
    satisfies_psc: bool
    quota: Fraction
    violations: list[CoalitionWitness] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.satisfies_psc

    def witness_keys(self) -> set[tuple]:
        return {v.key() for v in self.violations}

    def to_json(self, profile: PreferenceProfile) -> dict:
        return {
            "quota": format_quota(self.quota),
            "satisfies_psc": self.satisfies_psc,
            "violations": [v.to_json(profile) for v in self.violations],
        }


def _committee(profile: PreferenceProfile, w: Iterable[int]) -> CandidateSet:
    members = tuple(sorted(set(w)))
    if len(members) != profile.k:
        raise CommitteeWrongSize(f"committee has {len(members)} member(s), expected k={profile.k}")
    if members and (members[0] < 0 or members[-1] >= profile.m):
        raise ValueError(f"committee {members} not within the {profile.m} candidates")
    return members


def verify_psc(profile: PreferenceProfile, q: Fraction, w: Iterable[int]) -> Verdict:
    members = _committee(profile, w)
    violations = unmet_demands(profile, q, members, profile.m)
    return Verdict(not violations, q, violations)


def solid_supporters(profile: PreferenceProfile, cset: Iterable[int]) -> tuple[int, ...]:
    """Ballots ranking every member of ``cset`` above every non-member."""
    inside = set(cset)
    out = []
    for i, b in enumerate(profile.ballots):
        worst_inside = max(pos for pos, c in enumerate(b.order) if c in inside)
        best_outside = min((pos for pos, c in enumerate(b.order) if c not in inside), default=len(b.order))
        if worst_inside < best_outside:
            out.append(i)
    return tuple(out)


def verify_psc_definitional(profile: PreferenceProfile, q: Fraction, w: Iterable[int]) -> Verdict:
    members = set(_committee(profile, w))
    if profile.m > MAX_DEFINITIONAL_CANDIDATES:
        raise TooManyCandidates(
            f"definitional check enumerates 2^m subsets; m={profile.m} > {MAX_DEFINITIONAL_CANDIDATES}"
        )
    violations = []
    for size in range(1, profile.m + 1):
        for cset in itertools.combinations(range(profile.m), size):
            supporters = solid_supporters(profile, cset)
            support = sum(profile.ballots[i].multiplicity for i in supporters)
            achieved = len(members.intersection(cset))
            ell = 1
            failed = False
            while ell * q <= support:
                if achieved < min(ell, size):
                    failed = True
                    break
                ell += 1
            if failed:
                required = min(demand_cap(support, q), size)
                violations.append(CoalitionWitness(cset, support, supporters, required, achieved))
    violations.sort(key=lambda v: (v.prefix_len, v.cset))
    return Verdict(not violations, q, violations)


def psc_committees_bruteforce(
    profile: PreferenceProfile,
    q: Fraction,
    verifier: Callable[[PreferenceProfile, Fraction, CandidateSet], Verdict] = verify_psc,
) -> list[CandidateSet]:
    """All size-``k`` committees passing ``verifier``, in lexicographic order."""
    total = math.comb(profile.m, profile.k)
    if total > MAX_BRUTEFORCE_COMMITTEES:
        raise SearchSpaceTooLarge(f"C({profile.m},{profile.k}) = {total} committees exceeds {MAX_BRUTEFORCE_COMMITTEES}")
    return [w for w in itertools.combinations(range(profile.m), profile.k) if verifier(profile, q, w).satisfies_psc]
