"""
Exception hierarchy for gbl_audit.

Library code raises these; the CLI maps them to exit codes. A printed inequality that
fails is never an exception, it is a row with holds=false.
"""

from typing import Optional


class GblAuditError(Exception):
    """Base class for every error raised by gbl_audit."""


class InvalidArgumentError(GblAuditError, ValueError):
    """An argument violates an operation's precondition."""


class OutOfRangeError(GblAuditError):
    """A value exceeds the cache limit or the 64-bit arithmetic ceiling."""


class OutOfScopeError(GblAuditError):
    """An input lies below the threshold where the audited statement applies."""


class DomainError(GblAuditError):
    """A function was evaluated on a singularity or a branch cut."""


class DataError(GblAuditError):
    """Rows handed to the reporting layer are missing fields or hold non-finite values."""


class ZeroSourceError(GblAuditError):
    """A zeros file could not be read or downloaded."""


class MalformedDataError(GblAuditError):
    """A zeros file parsed but broke the ordering or positivity rules."""

    def __init__(self, message: str, line_number: Optional[int] = None, source: Optional[str] = None):
        self.line_number = line_number
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}"
        if line_number is not None:
            where += f":{line_number}" if where else f"line {line_number}"
        super().__init__(f"{where}: {message}" if where else message)
