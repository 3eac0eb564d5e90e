class BexsamError(Exception):
    """Base class for all errors raised by this package."""


class DataError(BexsamError, ValueError):
    """Input data is malformed (non-binary cell, ragged rows, unknown label)."""


class ResourceLimitError(BexsamError, MemoryError):
    """A frequency table would exceed the configured width cap."""


class NotFittedError(BexsamError, AttributeError):
    pass
