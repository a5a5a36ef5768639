"""
Exception hierarchy shared by the library and the command line
"""
from typing import Optional

from config import EXIT_CAP, EXIT_FAILURE, EXIT_INVALID, EXIT_MISMATCH


class TamariError(Exception):
    """Base class for every error raised by the toolkit"""

    exit_code: int = EXIT_FAILURE


class InvalidInputError(TamariError, ValueError):
    """Malformed words, parking functions, options or poset elements"""

    exit_code = EXIT_INVALID


class ResourceCapExceeded(TamariError):
    """A configured size limit would be exceeded"""

    exit_code = EXIT_CAP

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} needs {size}, above the cap of {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class VerificationMismatch(TamariError):
    """A computed quantity disagrees with its independent counterpart"""

    exit_code = EXIT_MISMATCH

    def __init__(self, check: str, detail: str, order: Optional[int] = None):
        where = f" at order {order}" if order is not None else ""
        super().__init__(f"{check}: {detail}{where}")
        self.check = check
        self.detail = detail
        self.order = order


class LatticeViolation(VerificationMismatch):
    """Meet or join is missing or not unique"""


class CancellationFailure(VerificationMismatch):
    """A denominator that must cancel did not"""
