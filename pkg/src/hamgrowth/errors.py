"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """An argument violates an operation's precondition."""


class InternalError(RuntimeError):
    """A run exceeded its step budget; this indicates a bug, never bad input."""


class Inconsistency(AssertionError):
    """A computed value contradicts a proven bound or a cross-check."""
