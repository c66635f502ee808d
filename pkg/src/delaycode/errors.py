"""Exception types shared across the package."""


class DelayCodeError(Exception):
    """Base class for every error raised by delaycode."""


class DomainError(DelayCodeError, ValueError):
    """An argument lies outside the domain of an operation."""


class ResourceError(DelayCodeError):
    """A combinatorial guard was exceeded."""


class NotRegularError(DelayCodeError):
    """The code-tuple has no unique stationary distribution."""


class InternalError(DelayCodeError):
    """An invariant that should always hold was violated."""


class CorruptInputError(DelayCodeError):
    """A codeword stream cannot be parsed."""

    def __init__(self, message, offset=None):
        super().__init__(message if offset is None else f"{message} (bit offset {offset})")
        self.offset = offset


class InvalidCodeError(DelayCodeError):
    """Decoding found two candidate symbols, so the code is not decodable."""


class InvalidRctError(DelayCodeError):
    """An RCT does not satisfy the flags an operation requires."""


class FlushError(DelayCodeError):
    """No terminating k-bit tail exists for the current state."""


class FormatError(DelayCodeError):
    """A document could not be parsed into the expected structure."""

    def __init__(self, message, where=None):
        super().__init__(message if where is None else f"{where}: {message}")
        self.where = where
