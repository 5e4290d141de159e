"""Exception hierarchy.

``MalformedInput`` (and subclasses of ``ValueError``) flag bad caller data;
the rest flag a mathematical precondition that does not hold.
"""


class NSGSError(Exception):
    """Base class for every error raised by this package."""


class MalformedInput(NSGSError, ValueError):
    pass


class NotASemigroup(NSGSError):
    pass


class NotSymmetric(NSGSError):
    pass


class NotPseudoSymmetric(NSGSError):
    pass


class ExcludedCase(NSGSError):
    pass


class IndexOutOfRange(NSGSError, IndexError):
    pass


class BoundExceeded(NSGSError, ValueError):
    pass


class UnknownTheorem(NSGSError, KeyError):
    pass


class InvalidHighlight(NSGSError, ValueError):
    pass
