"""Exception hierarchy shared by every module."""


class RcompError(Exception):
    """Base class for all errors raised by this package."""


class InvalidAlpha(RcompError, ValueError):
    """The heaviness threshold is below the supported minimum of 16."""


class SentinelInput(RcompError, ValueError):
    """A sentinel symbol was passed where a text character was expected."""


class MalformedRlbwt(RcompError, ValueError):
    """A run sequence violates the RLBWT invariants or does not decode."""


class MalformedFile(RcompError, ValueError):
    """An on-disk RLBWT file cannot be parsed."""


class NotMember(RcompError, KeyError):
    """A search-tree operation referenced a handle that is not stored."""


class NotHeavy(RcompError, ValueError):
    """A split was requested for a node pair where neither side is heavy."""


class CorruptState(RcompError, RuntimeError):
    """An internal consistency check failed."""
