"""Exception hierarchy shared by all saxlkit packages."""

from typing import Any, Optional


class SaxlkitError(Exception):
    """Base class for every error raised on purpose by saxlkit."""


class SizeMismatchError(SaxlkitError, ValueError):
    """Partitions that must have equal size do not."""


class ParameterRangeError(SaxlkitError, ValueError):
    """A shape or search parameter is outside its valid range."""


class PartitionSyntaxError(SaxlkitError, ValueError):
    """Text could not be parsed as a partition."""


class OracleLimitError(SaxlkitError):
    """A computation exceeds the configured size cap."""


class CertificateError(SaxlkitError):
    """A certificate document is malformed or a constructor precondition fails."""


class ReductionError(SaxlkitError):
    """No certificate could be derived for a staircase target."""

    def __init__(self, m: int, mu: Any, detail: Optional[str] = None):
        self.m = m
        self.mu = mu
        message = f"reduction stuck at m={m}, mu={mu}"
        if detail:
            message += f": {detail}"
        super().__init__(message)
