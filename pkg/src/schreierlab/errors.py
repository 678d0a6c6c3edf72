"""Exception hierarchy shared across the package.

The CLI maps these onto stable exit codes: invalid input -> 2,
truncation -> 3, oracle/size limits -> 4, failed verification -> 1.
"""


class SchreierLabError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(SchreierLabError, ValueError):
    """Malformed or out-of-domain input (non-positive index, bad set, ...)."""


class UnsupportedExponentError(InvalidInputError):
    """Exponent outside the valid range for the requested space."""


class TruncationError(SchreierLabError, LookupError):
    """An index set or partition was not materialized far enough."""


class OracleLimitError(SchreierLabError):
    """Input exceeds the configured bound for exhaustive computations."""


class SizeLimitError(OracleLimitError):
    """Input exceeds what the exact engines can certify at this size."""


class CannotSelectError(InvalidInputError):
    """Subsequence selection preconditions are violated."""


class VerificationError(SchreierLabError):
    """An internally re-checked certificate failed to verify."""
