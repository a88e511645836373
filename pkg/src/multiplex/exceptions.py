"""Exception hierarchy shared by every module."""


class MultiplexError(Exception):
    """Base class for library errors."""


class DomainError(MultiplexError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class CapacityError(MultiplexError):
    """A request would enumerate more objects than the library allows."""


class FixtureError(MultiplexError):
    """A fixture table is unknown or malformed."""
