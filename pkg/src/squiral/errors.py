"""Exception types shared across the package."""


class SquiralError(Exception):
    """Base class for all errors raised by this package."""


class ResourceLimitError(SquiralError):
    """A configured size, level or memory budget would be exceeded."""


class WindowBoundsError(SquiralError, IndexError):
    """A requested window does not fit inside its grid."""


class UnverifiedCountError(SquiralError):
    """A brute-force count was requested but saturation was never certified."""
