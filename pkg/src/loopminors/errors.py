"""Exception types shared across the package."""


class LoopMinorsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LoopMinorsError, ValueError):
    """An argument violates an operation's stated precondition."""


class InvalidWindowError(DomainError):
    """An index window is too small and would silently truncate a partition."""


class ResourceLimitError(LoopMinorsError, RuntimeError):
    """A brute-force guard (dimension or field size) was exceeded."""
