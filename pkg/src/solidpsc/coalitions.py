"""Solid coalitions and unmet PSC demands.

Only maximal solid coalitions are ever inspected. The voters solidly
supporting a candidate set ``C'`` are exactly those whose ``|C'|``-prefix is
``C'``, and a sub-coalition can never demand more than the maximal one
(``floor(|N''|/q) <= floor(|N'|/q)``), so the prefix classes for
``j = 1..m`` cover every demand that matters: at most ``n*m`` of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .profile import CandidateSet, PreferenceProfile, PrefixClass, demand_cap


@dataclass(frozen=True)
class CoalitionWitness:
    cset: CandidateSet
    support: int
    supporters: tuple[int, ...]
    required: int
    achieved: int

    @property
    def prefix_len(self) -> int:
        return len(self.cset)

    @property
    def shortfall(self) -> int:
        return max(0, self.required - self.achieved)

    def key(self) -> tuple:
        """Order-free identity used when comparing witness sets."""
        return (self.cset, self.support, self.supporters, self.required, self.achieved)

    def to_json(self, profile: PreferenceProfile) -> dict:
        return {
            "achieved": self.achieved,
            "cset": profile.names(self.cset),
            "prefix_len": self.prefix_len,
            "required": self.required,
            "support": self.support,
        }


def maximal_support(profile: PreferenceProfile, cset: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Weight and ballot indices of the maximal solid coalition for ``cset``."""
    key = tuple(sorted(set(cset)))
    if not key:
        raise ValueError("candidate set must be nonempty")
    if key[0] < 0 or key[-1] >= profile.m:
        raise ValueError(f"candidate set {key} not within the {profile.m} candidates")
    for cls in profile.prefix_table()[len(key) - 1]:
        if cls.cset == key:
            return cls.weight, cls.voters
    return 0, ()


def active_coalitions(profile: PreferenceProfile) -> list[PrefixClass]:
    """Every candidate set with nonempty maximal support, by prefix length then cset."""
    return [cls for row in profile.prefix_table() for cls in row]


def witness(cls: PrefixClass, q: Fraction, w: frozenset | set) -> CoalitionWitness:
    required = min(demand_cap(cls.weight, q), len(cls.cset))
    achieved = sum(1 for c in cls.cset if c in w)
    return CoalitionWitness(cls.cset, cls.weight, cls.voters, required, achieved)


def unmet_demands(
    profile: PreferenceProfile, q: Fraction, w: Iterable[int], j_limit: int | None = None
) -> list[CoalitionWitness]:
    """Witnesses for all prefix classes of length ``<= j_limit`` with an unmet demand."""
    w = frozenset(w)
    if j_limit is None:
        j_limit = profile.m
    if not 1 <= j_limit <= profile.m:
        raise ValueError(f"j_limit {j_limit} outside [1, {profile.m}]")
    out = []
    for row in profile.prefix_table()[:j_limit]:
        for cls in row:
            wit = witness(cls, q, w)
            if wit.achieved < wit.required:
                out.append(wit)
    return out
