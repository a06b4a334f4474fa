"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all toolkit errors."""


class InvalidWord(ToolkitError):
    """Word is not alternating or contains a forbidden run for the given q."""


class OperatorUndefined(ToolkitError):
    """Neither removal nor a unique valid addition applies to the word."""


class QMismatch(ToolkitError):
    """Two representations built for different group parameters q."""


class InvalidBand(ToolkitError):
    """Cyclic word violates a band-module precondition."""


class NotInvertible(ToolkitError):
    """Twist matrix of a band module is singular."""


class UnsupportedSubgroup(ToolkitError):
    """Induction is only implemented from the two Klein-four subgroups."""


class PreconditionViolated(ToolkitError):
    """Pencil reduction requires (g1+I)(g2+I) = 0."""


class NotSignatureEligible(ToolkitError):
    """Module does not have exactly two odd Klein summands on one side."""


class CertificationFailed(ToolkitError):
    """Indecomposability could not be certified; result is inconclusive."""


class IsoUndecided(ToolkitError):
    """Isomorphism search exhausted its trial budget without a verdict."""


class UnknownSuite(ToolkitError):
    """Requested verification suite is not registered."""


class Unreachable(ToolkitError):
    """No word-level or homological path reaches the requested vertex."""
