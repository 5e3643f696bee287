"""Proportionality of Solid Coalitions (q-PSC) toolkit.

Verify committees against q-PSC, run the Minimal Demand rule under a
chosen tie-break, and enumerate every committee the rule can reach.
"""

__version__ = "0.1.0"

from .coalitions import CoalitionWitness, active_coalitions, maximal_support, unmet_demands
from .errors import *  # noqa: F401,F403
from .generate import gen_blocs, gen_impartial, random_quota
from .md import (
    Borda,
    Lexicographic,
    MDStep,
    MDTrace,
    Scripted,
    SeededRandom,
    TieBreakPolicy,
    borda_scores,
    choice_set,
    parse_policy,
    run_md,
)
from .profile import (
    Ballot,
    PreferenceProfile,
    PrefixClass,
    demand_cap,
    format_quota,
    j_prefix,
    make_quota,
    parse_profile,
    prefix_classes,
    profile_from_rankings,
    serialize_profile,
)
from .tree import EnumerationReport, Theorem1Report, check_theorem1, enumerate_outcomes, reconstruct_path
from .verify import Verdict, psc_committees_bruteforce, verify_psc, verify_psc_definitional
