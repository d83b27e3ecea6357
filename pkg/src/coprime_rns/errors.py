"""Exception hierarchy shared by the library and the CLI."""


class CoprimeRnsError(Exception):
    """Base class for all library errors."""


class RangeError(CoprimeRnsError, ValueError):
    """An integer range or value lies outside the accepted interval."""


class DomainError(CoprimeRnsError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class ContextError(CoprimeRnsError, ValueError):
    """A moduli set cannot back an RNS context (shared prime factor)."""

    def __init__(self, a, b, shared):
        self.pair = (a, b)
        self.shared = shared
        super().__init__(f"moduli {a} and {b} are not co-prime (shared factor {shared})")


class ShapeError(CoprimeRnsError, ValueError):
    """Residue vectors do not match the channel layout of a context."""


class GuardError(CoprimeRnsError, ValueError):
    """Input is too large for an exponential-time search."""
