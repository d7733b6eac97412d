"""Exception types and the enumeration guard shared by all sweeps."""

from __future__ import annotations

class MooreCodesError(Exception):
    """Base class for errors raised by this package."""


class InvalidInput(MooreCodesError, ValueError):
    """Malformed or inconsistent user input (bad field spec, dependent basis, ...)."""


class GuardExceeded(MooreCodesError):
    """An enumeration would exceed the configured step budget."""

    def __init__(self, what: str, needed: int, limit: int):
        super().__init__(f"{what}: {needed} steps exceed the guard of {limit}")
        self.what = what
        self.needed = needed
        self.limit = limit


class NoMonomial(MooreCodesError):
    """The code contains no monomial x^(q^t), so its index is undefined."""


class InternalError(MooreCodesError, AssertionError):
    """A consistency check failed; this signals a bug, never bad input."""


DEFAULT_MAX_STEPS = 2**24


def check_guard(what: str, needed: int, limit: int | None) -> None:
    limit = DEFAULT_MAX_STEPS if limit is None else limit
    if needed > limit:
        raise GuardExceeded(what, needed, limit)
