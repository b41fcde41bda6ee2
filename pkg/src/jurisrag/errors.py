"""Shared exception base classes.

Concrete error types live next to the code that raises them; everything
inherits from :class:`JurisragError` so callers (CLI, HTTP service) can map
failures to exit codes / status codes in one place.
"""


class JurisragError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(JurisragError):
    """A vector's dimensionality does not match what the consumer expects."""
