"""Exception hierarchy.

Precondition failures are the caller's fault and derive from ``ValueError``.
Internal invariant failures signal a library bug or a corrupted weight
function; they derive from ``AssertionError`` and carry the walk trace.
"""


class CylPathError(Exception):
    """Base class for every error raised by this package."""


class ParseError(CylPathError, ValueError):
    """Malformed text representation of a word, cycle, weight function or lap sequence."""


class PreconditionError(CylPathError, ValueError):
    """An input violates the precondition of an operation."""


class NotZeroSum(PreconditionError):
    pass


class NotOriginStart(PreconditionError):
    pass


class NotACycle(PreconditionError):
    pass


class NotDownsFirst(PreconditionError):
    pass


class NotBalanced(PreconditionError):
    pass


class NotOriginConnected(PreconditionError):
    pass


class IllegalWord(PreconditionError):
    pass


class RankOutOfRange(PreconditionError):
    pass


class SizeGuardExceeded(CylPathError):
    """Brute-force enumeration refused because the search space is too big."""


class InternalInvariantViolation(CylPathError, AssertionError):
    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = list(trace) if trace is not None else []


class HigherWeldPoint(InternalInvariantViolation):
    """A downs-first walk from a weld point reached a higher weld point,
    or a lap extraction did not close after exactly a+b steps."""
