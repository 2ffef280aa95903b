"""Exception taxonomy shared by all modules.

CLI maps UsageError/DomainError to exit code 2 and everything else
numerical to exit code 1.
"""

from __future__ import annotations


class QasympError(Exception):
    """Base class for package errors."""


class UsageError(QasympError):
    """Inconsistent arguments: mismatched base points, conflicting flags."""


class DomainError(QasympError):
    """Input outside the mathematical domain (q not in (0,1), x <= 0, ...)."""


class CapacityError(QasympError):
    """Requested index beyond what the value cache is built to hold."""


class PoleError(QasympError):
    """Scalar evaluation requested at (or too close to) a pole.

    `location` is the offending pole: an integer n for Gamma's pole at -n,
    or the complex point for zeta's pole at 1.
    """

    def __init__(self, message: str, location):
        super().__init__(message)
        self.location = location


class NotInvertibleError(QasympError):
    """Series inversion needs a nonzero constant leading coefficient."""


class InsufficientOrderError(QasympError):
    """A coefficient was requested outside the trusted window."""


class PreconditionError(QasympError):
    """A numerical routine's validity condition fails (e.g. contour line
    not to the right of the convergence threshold)."""


class OracleFailure(QasympError):
    """The reference evaluation cannot reach the requested tolerance.

    `achievable` reports the tolerance the oracle could certify.
    """

    def __init__(self, message: str, achievable: float | None = None):
        super().__init__(message)
        self.achievable = achievable
