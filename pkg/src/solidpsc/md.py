"""The Minimal Demand rule.

Stages ``j = 1..m`` look at voters' ``j``-prefixes. Within a stage, while
some prefix class has ``|W & C'| < min(floor(|N'|/q), |C'|)``, one
candidate from ``C' - W`` is added. Which one is left open by the rule and
is decided here by a :class:`TieBreakPolicy`.

The branching unit is the union of ``C' - W`` over all unmet classes (the
*choice set*), so a candidate triggered by two classes is one option, not
two. Whatever the policy does, the result has exactly ``k`` members and
satisfies q-PSC.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .coalitions import CoalitionWitness, unmet_demands
from .errors import PolicyError, ScriptExhausted, ScriptInvalidChoice
from .profile import CandidateSet, PreferenceProfile
from .rng import XorShift64Star

Chooser = Callable[[CandidateSet], int]


def choice_set(profile: PreferenceProfile, q: Fraction, w: Iterable[int], j: int) -> CandidateSet:
    w = frozenset(w)
    return _choices(unmet_demands(profile, q, w, j), w)


def _choices(unmet: list[CoalitionWitness], w: frozenset) -> CandidateSet:
    return tuple(sorted({c for wit in unmet for c in wit.cset if c not in w}))


def borda_scores(profile: PreferenceProfile) -> list[int]:
    """``scores[c]`` = sum over voters of ``m - rank(c)`` (rank 1 = top)."""
    m = profile.m
    scores = [0] * m
    for b in profile.ballots:
        for pos, c in enumerate(b.order):
            scores[c] += (m - 1 - pos) * b.multiplicity
    return scores


# -- tie-breaking -------------------------------------------------------------


class TieBreakPolicy:
    """Picks one candidate from a nonempty, sorted choice set.

    ``start`` is called once per run and returns a fresh chooser, so a
    policy object can be reused across runs without leaking state.
    """

    def start(self, profile: PreferenceProfile) -> Chooser:
        raise NotImplementedError


@dataclass(frozen=True)
class Lexicographic(TieBreakPolicy):
    """Lowest candidate index wins."""

    def start(self, profile):
        return lambda choices: choices[0]

    def __str__(self):
        return "lex"


@dataclass(frozen=True)
class Borda(TieBreakPolicy):
    """Highest Borda score wins; equal scores go to the lowest index."""

    def start(self, profile):
        scores = borda_scores(profile)
        return lambda choices: max(choices, key=lambda c: (scores[c], -c))

    def __str__(self):
        return "borda"


@dataclass(frozen=True)
class SeededRandom(TieBreakPolicy):
    seed: int

    def start(self, profile):
        rng = XorShift64Star(self.seed)
        return rng.choice

    def __str__(self):
        return f"random:{self.seed}"


@dataclass(frozen=True)
class Scripted(TieBreakPolicy):
    """Consume a fixed sequence of candidates (indices or names) in order.

    Entries left over once the run finishes are ignored.
    """

    sequence: tuple = ()

    def start(self, profile):
        script = [profile.index_of(x) if isinstance(x, str) else x for x in self.sequence]
        pos = 0

        def choose(choices):
            nonlocal pos
            if pos >= len(script):
                raise ScriptExhausted(
                    f"script exhausted after {pos} choice(s); options were {profile.names(choices)}"
                )
            c = script[pos]
            pos += 1
            if c not in choices:
                name = profile.candidate_names[c] if 0 <= c < profile.m else c
                raise ScriptInvalidChoice(f"scripted choice {name!r} not in choice set {profile.names(choices)}")
            return c

        return choose

    def __str__(self):
        return "script:" + ",".join(map(str, self.sequence))


def parse_policy(spec: str) -> TieBreakPolicy:
    """``lex``, ``borda``, ``random:SEED`` or ``script:c1,c2,...``."""
    kind, _, arg = spec.strip().partition(":")
    kind = kind.lower()
    if kind in ("lex", "lexicographic") and not arg:
        return Lexicographic()
    if kind == "borda" and not arg:
        return Borda()
    if kind == "random":
        try:
            return SeededRandom(int(arg, 0))
        except ValueError:
            raise PolicyError(f"bad seed in policy {spec!r}") from None
    if kind == "script":
        names = tuple(x.strip() for x in arg.split(",") if x.strip())
        return Scripted(names)
    raise PolicyError(f"unknown policy {spec!r}; expected lex, borda, random:SEED or script:c1,c2,...")


# -- running ------------------------------------------------------------------


@dataclass(frozen=True)
class MDStep:
    j: int
    trigger: CandidateSet
    chosen: int
    committee: CandidateSet

    def to_json(self, profile: PreferenceProfile) -> dict:
        return {
            "chosen": profile.candidate_names[self.chosen],
            "class": profile.names(self.trigger),
            "j": self.j,
            "w": profile.names(self.committee),
        }


@dataclass
class MDTrace:
    steps: list[MDStep] = field(default_factory=list)

    def chosen(self) -> list[int]:
        return [s.chosen for s in self.steps]

    def to_jsonl(self, profile: PreferenceProfile) -> str:
        return "".join(json.dumps(s.to_json(profile), sort_keys=True) + "\n" for s in self.steps)


def trigger_for(unmet: Sequence[CoalitionWitness], c: int) -> CandidateSet:
    """First unmet class (canonical order) that ``c`` helps."""
    for wit in unmet:
        if c in wit.cset:
            return wit.cset
    raise AssertionError(f"candidate {c} serves no unmet class")


def run_md(
    profile: PreferenceProfile, q: Fraction, policy: TieBreakPolicy | None = None
) -> tuple[CandidateSet, MDTrace]:
    choose = (policy or Lexicographic()).start(profile)
    w: set[int] = set()
    trace = MDTrace()
    for j in range(1, profile.m + 1):
        while True:
            unmet = unmet_demands(profile, q, w, j)
            choices = _choices(unmet, frozenset(w))
            if not choices:
                break
            c = choose(choices)
            if c not in choices:
                raise PolicyError(f"policy chose {c}, which is not in {choices}")
            w.add(c)
            trace.steps.append(MDStep(j, trigger_for(unmet, c), c, tuple(sorted(w))))
    return tuple(sorted(w)), trace
