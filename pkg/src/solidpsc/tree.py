"""Dummett-tree enumeration of every committee MD can produce.

A search state is ``(j, committee_so_far)``: the profile and quota are
fixed, so the choice set (and hence everything reachable) depends on
nothing else. States are expanded once; different addition orders that
land on the same state are counted as ``dedup_hits``. Stages that add
nobody are not materialised, the search just moves to ``j + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .coalitions import unmet_demands
from .errors import NodeBudgetExceeded, NotPSC
from .md import MDStep, MDTrace, _choices, trigger_for
from .profile import CandidateSet, PreferenceProfile
from .verify import _committee, psc_committees_bruteforce

DEFAULT_NODE_BUDGET = 10**7


@dataclass
class EnumerationReport:
    outcomes: list[CandidateSet]
    nodes_visited: int = 0
    dedup_hits: int = 0

    def to_json(self, profile: PreferenceProfile) -> dict:
        return {
            "dedup_hits": self.dedup_hits,
            "nodes_visited": self.nodes_visited,
            "outcomes": [profile.names(w) for w in self.outcomes],
        }


def enumerate_outcomes(
    profile: PreferenceProfile,
    q: Fraction,
    node_budget: int = DEFAULT_NODE_BUDGET,
    memoize: bool = True,
) -> EnumerationReport:
    m = profile.m
    outcomes: set[CandidateSet] = set()
    seen: set[tuple[int, frozenset]] = set()
    report = EnumerationReport([])
    stack: list[tuple[int, frozenset]] = [(1, frozenset())]
    while stack:
        j, w = stack.pop()
        if memoize:
            if (j, w) in seen:
                report.dedup_hits += 1
                continue
            seen.add((j, w))
        report.nodes_visited += 1
        if report.nodes_visited > node_budget:
            raise NodeBudgetExceeded(f"more than {node_budget} tree states; raise the node budget")
        choices = _choices(unmet_demands(profile, q, w, j), w)
        if choices:
            # reversed so the lowest candidate is explored first
            stack.extend((j, w | {c}) for c in reversed(choices))
        elif j < m:
            stack.append((j + 1, w))
        else:
            outcomes.add(tuple(sorted(w)))
    report.outcomes = sorted(outcomes)
    return report


@dataclass
class Theorem1Report:
    equal: bool
    tree_outcomes: list[CandidateSet]
    psc_committees: list[CandidateSet]
    only_in_tree: list[CandidateSet] = field(default_factory=list)
    only_psc: list[CandidateSet] = field(default_factory=list)

    def to_json(self, profile: PreferenceProfile) -> dict:
        return {
            "equal": self.equal,
            "only_in_tree": [profile.names(w) for w in self.only_in_tree],
            "only_psc": [profile.names(w) for w in self.only_psc],
            "psc_committees": [profile.names(w) for w in self.psc_committees],
            "tree_outcomes": [profile.names(w) for w in self.tree_outcomes],
        }


def check_theorem1(
    profile: PreferenceProfile, q: Fraction, node_budget: int = DEFAULT_NODE_BUDGET
) -> Theorem1Report:
    """Compare the tree's leaves with the brute-force PSC committees.

    A mismatch means a bug in one of the two paths.
    """
    tree = enumerate_outcomes(profile, q, node_budget).outcomes
    psc = psc_committees_bruteforce(profile, q)
    a, b = set(tree), set(psc)
    return Theorem1Report(a == b, tree, psc, sorted(a - b), sorted(b - a))


def reconstruct_path(profile: PreferenceProfile, q: Fraction, w: Iterable[int]) -> MDTrace:
    """An MD run that only ever picks members of ``w``.

    Raises :class:`NotPSC` when the run reaches an unmet demand that no
    remaining member of ``w`` can serve; that happens exactly when ``w``
    violates q-PSC.
    """
    target = frozenset(_committee(profile, w))
    selected: frozenset = frozenset()
    trace = MDTrace()
    for j in range(1, profile.m + 1):
        while True:
            unmet = unmet_demands(profile, q, selected, j)
            choices = _choices(unmet, selected)
            if not choices:
                break
            allowed = [c for c in choices if c in target]
            if not allowed:
                raise NotPSC(j, sorted(selected), unmet)
            c = allowed[0]
            selected = selected | {c}
            trace.steps.append(MDStep(j, trigger_for(unmet, c), c, tuple(sorted(selected))))
    if selected != target:
        raise NotPSC(profile.m, sorted(selected), unmet_demands(profile, q, target))
    return trace
