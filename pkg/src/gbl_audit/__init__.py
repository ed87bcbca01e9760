"""
gbl_audit - numerical audit toolkit for an RH-conditional Goldbach argument.

Exact prime counting, a zeta-zero table, the truncated explicit formula for π(x),
the two conjecture verifiers and a harness for the supporting inequalities.
"""

__version__ = "0.1.0"

from .errors import (DataError, DomainError, GblAuditError, InvalidArgumentError, MalformedDataError,
                     OutOfRangeError, OutOfScopeError, ZeroSourceError)
from .prime_core import PrimeCache, build_cache, prime_pi_interval

__all__ = [
    "GblAuditError", "InvalidArgumentError", "OutOfRangeError", "OutOfScopeError", "DomainError",
    "DataError", "ZeroSourceError", "MalformedDataError",
    "PrimeCache", "build_cache", "prime_pi_interval",
]
