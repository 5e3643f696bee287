"""Exception hierarchy.

Everything raised on bad input derives from :class:`PSCError`, so callers
(the CLI in particular) can catch one type and map it to a usage error.
"""


class PSCError(Exception):
    """Base class for all package errors."""


class ProfileError(PSCError, ValueError):
    """The ballot file or profile data is invalid."""


class MalformedHeader(ProfileError):
    pass


class MalformedBallot(ProfileError):
    pass


class UnknownCandidate(ProfileError):
    pass


class IncompleteOrder(ProfileError):
    pass


class MultiplicityMismatch(ProfileError):
    pass


class DuplicateCandidateName(ProfileError):
    pass


class InvalidDimensions(ProfileError):
    pass


class OverlappingBlocs(ProfileError):
    pass


class IndexOutOfRange(PSCError, IndexError):
    pass


class QuotaError(PSCError, ValueError):
    pass


class QuotaOutOfRange(QuotaError):
    pass


class CommitteeWrongSize(PSCError, ValueError):
    pass


class TooManyCandidates(PSCError):
    pass


class SearchSpaceTooLarge(PSCError):
    pass


class NodeBudgetExceeded(PSCError):
    pass


class PolicyError(PSCError, ValueError):
    pass


class ScriptExhausted(PolicyError):
    pass


class ScriptInvalidChoice(PolicyError):
    pass


class NotPSC(PSCError):
    """No Dummett-tree path selects the committee.

    Carries the stage and partial committee where the restricted run got
    stuck, plus the unmet demands at that point.
    """

    def __init__(self, stage, committee_so_far, witnesses):
        self.stage = stage
        self.committee_so_far = tuple(committee_so_far)
        self.witnesses = list(witnesses)
        super().__init__(
            f"stuck at stage {stage} with {len(self.committee_so_far)} selected; "
            f"{len(self.witnesses)} unmet demand(s) cannot be served from the committee"
        )
