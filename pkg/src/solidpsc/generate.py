"""Seeded profile generators.

All randomness comes from :class:`~solidpsc.rng.XorShift64Star`, so a
seed pins the output on every platform.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidDimensions, OverlappingBlocs, UnknownCandidate
from .profile import Ballot, PreferenceProfile, default_names, quota_bounds
from .rng import XorShift64Star


def _check_dims(n: int, m: int, k: int) -> None:
    if n < 1 or m < 1 or not 1 <= k <= m:
        raise InvalidDimensions(f"need n >= 1 and 1 <= k <= m, got n={n}, m={m}, k={k}")


def gen_impartial(n: int, m: int, k: int, seed: int) -> PreferenceProfile:
    """``n`` independent uniformly random rankings (impartial culture)."""
    _check_dims(n, m, k)
    rng = XorShift64Star(seed)
    ballots = tuple(Ballot(tuple(rng.shuffled(range(m)))) for _ in range(n))
    return PreferenceProfile(default_names(m), ballots, k)


def _resolve(cset: Iterable, names: Sequence[str]) -> frozenset[int]:
    out = set()
    for x in cset:
        if isinstance(x, str):
            if x not in names:
                raise UnknownCandidate(f"unknown candidate {x!r}")
            out.add(names.index(x))
        elif 0 <= x < len(names):
            out.add(x)
        else:
            raise InvalidDimensions(f"candidate index {x} outside [0, {len(names)})")
    return frozenset(out)


def gen_blocs(bloc_specs: Sequence[tuple[int, Iterable]], m: int, k: int, seed: int) -> PreferenceProfile:
    """Plant disjoint solid coalitions.

    Each ``(size, cset)`` bloc contributes ``size`` voters who rank ``cset``
    (shuffled) above everyone else (shuffled). Candidates may be given by
    index or by default name (``a``, ``b``, ...).
    """
    names = default_names(m)
    if not bloc_specs:
        raise InvalidDimensions("at least one bloc is required")
    blocs = []
    used: set[int] = set()
    for size, cset in bloc_specs:
        members = _resolve(cset, names)
        if size < 1 or not members:
            raise InvalidDimensions(f"bloc needs size >= 1 and a nonempty candidate set, got {size}, {sorted(members)}")
        if used & members:
            raise OverlappingBlocs(f"candidate(s) {', '.join(names[c] for c in sorted(used & members))} in two blocs")
        used |= members
        blocs.append((size, members))
    _check_dims(sum(s for s, _ in blocs), m, k)
    rng = XorShift64Star(seed)
    ballots = []
    for size, members in blocs:
        rest = [c for c in range(m) if c not in members]
        for _ in range(size):
            ballots.append(Ballot(tuple(rng.shuffled(sorted(members)) + rng.shuffled(rest))))
    return PreferenceProfile(names, tuple(ballots), k)


def random_quota(n: int, k: int, rng: XorShift64Star, max_denominator: int = 12) -> Fraction:
    """A uniformly drawn admissible quota ``p/d`` with ``d <= max_denominator``."""
    lo, hi = quota_bounds(n, k)
    options = []
    for d in range(1, max_denominator + 1):
        first = math.floor(lo * d) + 1
        last = math.floor(hi * d)
        options.extend(Fraction(p, d) for p in range(first, last + 1))
    return rng.choice(sorted(set(options)))
