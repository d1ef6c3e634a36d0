"""Exception hierarchy shared by every module."""

from __future__ import annotations


class HarmoniousError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(HarmoniousError, ValueError):
    pass


class InvalidAction(InvalidArgument):
    """A proposed action is not a homomorphism into the automorphism group."""


class InvalidTable(InvalidArgument):
    """A Cayley table failed one of the group axioms."""


class UnsupportedLength(HarmoniousError, ValueError):
    """No closed-form matched integer sequence is known for this length."""


class UnsupportedQuotient(HarmoniousError, ValueError):
    pass


class CertificationError(HarmoniousError, RuntimeError):
    """A constructed object failed re-verification; always a bug."""


class BudgetExceeded(HarmoniousError):
    pass


class NotConstructed(HarmoniousError):
    """Every strategy failed without proving nonexistence."""

    def __init__(self, message: str, reasons: dict[str, str] | None = None):
        super().__init__(message)
        self.reasons = dict(reasons or {})


class Impossible(HarmoniousError):
    """The requested object provably does not exist in the group."""
