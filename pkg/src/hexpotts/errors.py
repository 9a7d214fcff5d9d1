"""Error types shared across the package."""


class InvalidParameterError(ValueError):
    """An argument violates an operation's contract."""


class CapacityError(RuntimeError):
    """A size cap would be exceeded; the message names the cap."""


class InternalInvariantError(RuntimeError):
    """An internal consistency check failed: a bug, never a bad input."""
