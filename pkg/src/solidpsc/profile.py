"""Election data model: ballots, preference profiles, quotas.

Candidates are identified by their index into ``candidate_names``; names
only matter for parsing and display. Quotas are :class:`fractions.Fraction`
values so that boundary comparisons such as ``|N'| == l*q`` are exact.
"""

from __future__ import annotations

import functools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DuplicateCandidateName,
    IncompleteOrder,
    IndexOutOfRange,
    InvalidDimensions,
    MalformedBallot,
    MalformedHeader,
    MultiplicityMismatch,
    QuotaError,
    QuotaOutOfRange,
    UnknownCandidate,
)

Quota = Fraction
CandidateSet = tuple  # sorted tuple of candidate indices

QUOTA_NAMES = ("hare", "midpoint")


@dataclass(frozen=True)
class Ballot:
    order: tuple[int, ...]
    multiplicity: int = 1

    def prefix(self, j: int) -> frozenset[int]:
        return frozenset(self.order[:j])


class PrefixClass(NamedTuple):
    """Voters sharing the same ``len(cset)``-prefix (as an unordered set)."""

    cset: CandidateSet
    weight: int
    voters: tuple[int, ...]

    @property
    def prefix_len(self) -> int:
        return len(self.cset)


@dataclass(frozen=True)
class PreferenceProfile:
    """Strict complete rankings with multiplicities, plus the committee size.

    ``voters`` in results elsewhere refer to indices into ``ballots``; a
    ballot with multiplicity 3 stands for three identical voters.
    """

    candidate_names: tuple[str, ...]
    ballots: tuple[Ballot, ...]
    k: int
    quota_spec: str | None = None
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "candidate_names", tuple(self.candidate_names))
        object.__setattr__(
            self,
            "ballots",
            tuple(b if isinstance(b, Ballot) else Ballot(tuple(b)) for b in self.ballots),
        )
        names = self.candidate_names
        if len(set(names)) != len(names):
            dup = sorted({x for x in names if names.count(x) > 1})
            raise DuplicateCandidateName(f"duplicate candidate name(s): {', '.join(dup)}")
        m = len(names)
        if m < 1:
            raise InvalidDimensions("at least one candidate is required")
        if not 1 <= self.k <= m:
            raise InvalidDimensions(f"committee size k={self.k} must lie in [1, {m}]")
        if not self.ballots:
            raise InvalidDimensions("at least one voter is required")
        full = set(range(m))
        for i, b in enumerate(self.ballots):
            if b.multiplicity < 1:
                raise MultiplicityMismatch(f"ballot {i} has multiplicity {b.multiplicity} < 1")
            if len(b.order) != m or set(b.order) != full:
                raise IncompleteOrder(f"ballot {i} is not a permutation of all {m} candidates")

    @property
    def n(self) -> int:
        return sum(b.multiplicity for b in self.ballots)

    @property
    def m(self) -> int:
        return len(self.candidate_names)

    def index_of(self, name: str) -> int:
        try:
            return self.candidate_names.index(name)
        except ValueError:
            raise UnknownCandidate(f"unknown candidate {name!r}") from None

    def indices(self, names: Iterable[str]) -> CandidateSet:
        return tuple(sorted(self.index_of(x) for x in names))

    def names(self, cset: Iterable[int]) -> list[str]:
        return [self.candidate_names[c] for c in sorted(cset)]

    def canonical(self) -> PreferenceProfile:
        """Identical ballots merged, ballot types sorted by order."""
        merged: dict[tuple[int, ...], int] = defaultdict(int)
        for b in self.ballots:
            merged[b.order] += b.multiplicity
        ballots = tuple(Ballot(order, mult) for order, mult in sorted(merged.items()))
        return PreferenceProfile(self.candidate_names, ballots, self.k, self.quota_spec)

    def prefix_table(self) -> tuple[tuple[PrefixClass, ...], ...]:
        """``prefix_table()[j - 1]`` is ``prefix_classes(self, j)``; computed once."""
        table = self._cache.get("prefix")
        if table is None:
            table = tuple(_group_prefixes(self, j) for j in range(1, self.m + 1))
            self._cache["prefix"] = table
        return table


def _group_prefixes(profile: PreferenceProfile, j: int) -> tuple[PrefixClass, ...]:
    groups: dict[CandidateSet, list[int]] = defaultdict(list)
    for i, b in enumerate(profile.ballots):
        groups[tuple(sorted(b.order[:j]))].append(i)
    return tuple(
        PrefixClass(cset, sum(profile.ballots[i].multiplicity for i in voters), tuple(voters))
        for cset, voters in sorted(groups.items())
    )


def j_prefix(profile: PreferenceProfile, ballot: Ballot | int, j: int) -> frozenset[int]:
    if isinstance(ballot, int):
        ballot = profile.ballots[ballot]
    if not 1 <= j <= profile.m:
        raise IndexOutOfRange(f"prefix length {j} outside [1, {profile.m}]")
    return ballot.prefix(j)


def prefix_classes(profile: PreferenceProfile, j: int) -> list[PrefixClass]:
    """Partition voters by their ``j``-prefix, in canonical (sorted cset) order."""
    if not 1 <= j <= profile.m:
        raise IndexOutOfRange(f"prefix length {j} outside [1, {profile.m}]")
    return list(profile.prefix_table()[j - 1])


# -- quotas -----------------------------------------------------------------


def quota_bounds(n: int, k: int) -> tuple[Fraction, Fraction]:
    """The half-open admissible range ``(n/(k+1), n/k]``."""
    return Fraction(n, k + 1), Fraction(n, k)


def is_valid_quota(n: int, k: int, q: Fraction) -> bool:
    lo, hi = quota_bounds(n, k)
    return lo < q <= hi


def make_quota(n: int, k: int, spec: str | Fraction | int = "hare") -> Fraction:
    """Resolve ``"hare"``, ``"midpoint"`` or an explicit rational like ``"7/3"``."""
    if n < 1 or k < 1:
        raise InvalidDimensions(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    lo, hi = quota_bounds(n, k)
    if isinstance(spec, str):
        s = spec.strip().lower()
        if s == "hare":
            return hi
        if s == "midpoint":
            return (lo + hi) / 2
        try:
            q = Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise QuotaError(f"bad quota spec {spec!r}: expected hare, midpoint or p/r") from None
    else:
        q = Fraction(spec)
    if not lo < q <= hi:
        raise QuotaOutOfRange(f"quota {q} outside ({lo}, {hi}] for n={n}, k={k}")
    return q


def format_quota(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def demand_cap(coalition_size: int, q: Fraction) -> int:
    """``floor(coalition_size / q)`` in integer arithmetic."""
    return coalition_size * q.denominator // q.numerator


# -- ballot file format -------------------------------------------------------


def parse_profile(text: str) -> PreferenceProfile:
    """Parse the ballot file format.

    ::

        # comment
        4 4 2
        candidates: a,b,c,d
        quota: hare
        1: a,b,c,d
        3: c,d,b,a
    """
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if len(lines) < 2:
        raise MalformedHeader("expected a 'n m k' line and a 'candidates:' line")

    no, head = lines[0]
    parts = head.split()
    if len(parts) != 3 or not all(p.isdigit() for p in parts):
        raise MalformedHeader(f"line {no}: expected 'n m k', got {head!r}")
    n, m, k = map(int, parts)

    no, cand_line = lines[1]
    key, sep, rest = cand_line.partition(":")
    if not sep or key.strip().lower() != "candidates":
        raise MalformedHeader(f"line {no}: expected 'candidates: name,...'")
    names = [x.strip() for x in rest.split(",")]
    if any(not x for x in names):
        raise MalformedHeader(f"line {no}: empty candidate name")
    if len(set(names)) != len(names):
        dup = sorted({x for x in names if names.count(x) > 1})
        raise DuplicateCandidateName(f"line {no}: duplicate candidate name(s): {', '.join(dup)}")
    if len(names) != m:
        raise MalformedHeader(f"line {no}: header says m={m} but {len(names)} candidates listed")
    if n < 1 or not 1 <= k <= m:
        raise MalformedHeader(f"header requires n >= 1 and 1 <= k <= m, got {n} {m} {k}")
    index = {x: i for i, x in enumerate(names)}

    quota_spec = None
    body = lines[2:]
    if body and body[0][1].partition(":")[0].strip().lower() == "quota":
        quota_spec = body[0][1].partition(":")[2].strip()
        if not quota_spec:
            raise MalformedHeader(f"line {body[0][0]}: empty quota")
        body = body[1:]

    ballots = []
    for no, line in body:
        mult_s, sep, rest = line.partition(":")
        if not sep or not mult_s.strip().isdigit():
            raise MalformedBallot(f"line {no}: expected 'multiplicity: name,...'")
        mult = int(mult_s)
        if mult < 1:
            raise MalformedBallot(f"line {no}: multiplicity must be positive")
        order = []
        for x in (t.strip() for t in rest.split(",")):
            if x not in index:
                raise UnknownCandidate(f"line {no}: unknown candidate {x!r}")
            order.append(index[x])
        if len(order) != m or len(set(order)) != m:
            raise IncompleteOrder(f"line {no}: ballot must rank each of the {m} candidates once")
        ballots.append(Ballot(tuple(order), mult))

    total = sum(b.multiplicity for b in ballots)
    if total != n:
        raise MultiplicityMismatch(f"header declares n={n} but multiplicities sum to {total}")
    return PreferenceProfile(tuple(names), tuple(ballots), k, quota_spec)


def serialize_profile(profile: PreferenceProfile) -> str:
    p = profile.canonical()
    out = [f"{p.n} {p.m} {p.k}", "candidates: " + ",".join(p.candidate_names)]
    if p.quota_spec is not None:
        out.append(f"quota: {p.quota_spec}")
    for b in p.ballots:
        out.append(f"{b.multiplicity}: " + ",".join(p.candidate_names[c] for c in b.order))
    return "\n".join(out) + "\n"


def profile_from_rankings(
    rankings: Sequence[Sequence[str]] | Sequence[str], k: int, names: Sequence[str] | None = None
) -> PreferenceProfile:
    """Convenience constructor: one ranking (of names) per voter.

    ``profile_from_rankings(["abcd", "cdba"], k=2)`` works for
    single-character names.
    """
    if names is None:
        names = sorted(set(rankings[0]))
    index = {x: i for i, x in enumerate(names)}
    try:
        ballots = tuple(Ballot(tuple(index[x] for x in r)) for r in rankings)
    except KeyError as exc:
        raise UnknownCandidate(f"unknown candidate {exc.args[0]!r}") from None
    return PreferenceProfile(tuple(names), ballots, k)


@functools.lru_cache(maxsize=None)
def default_names(m: int) -> tuple[str, ...]:
    """``a, b, ..., z`` for up to 26 candidates, else ``c1, c2, ...``."""
    if m <= 26:
        return tuple(chr(ord("a") + i) for i in range(m))
    return tuple(f"c{i + 1}" for i in range(m))
