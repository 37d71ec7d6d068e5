"""Exception hierarchy for claspkit.

Every error raised on purpose by the library derives from ``ClaspKitError``,
which is a ``ValueError`` so callers that already guard on ``ValueError``
(the HTTP layer maps it to 400) keep working.
"""
from typing import Any, Optional


class ClaspKitError(ValueError):
    """Base class for all library errors"""


class DivisionByZero(ClaspKitError, ZeroDivisionError):
    """Division by the zero rational function or zero cyclotomic number"""


class UnknownWeight(ClaspKitError):
    """Weight is not one of the nine weights of V(w1) and V(w2)"""


class NotDominant(ClaspKitError):
    """A dominant weight was required"""


class OutOfDomain(ClaspKitError):
    """A kappa value was requested outside S_{lambda, a}"""


class CycleDetected(ClaspKitError):
    """The memoized recursion revisited a key that is still being computed"""


class BadPath(ClaspKitError):
    """A clasp path does not sum to its target or leaves the dominant cone"""


class EllTooSmall(ClaspKitError):
    """Root-of-unity analysis needs ell > 4"""


class ConfigError(ClaspKitError):
    """Invalid environment configuration"""


class IdentityFailed(ClaspKitError):
    """A symbolic identity did not reduce to zero"""

    def __init__(self, message: str, certificate: Any = None, difference: Optional[Any] = None):
        super().__init__(message)
        self.certificate = certificate
        self.difference = difference
