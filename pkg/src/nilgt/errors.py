"""Exception types raised by nilgt."""


class NilGTError(Exception):
    """Base class for all library errors."""


class InvalidParameter(NilGTError, ValueError):
    pass


class InvalidMove(NilGTError, ValueError):
    """Raised when two adjacent letters do not commute."""


class ParseError(NilGTError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at token {position})"
        super().__init__(message)
        self.position = position


class ResourceError(NilGTError):
    """Raised when a computation would exceed the configured size guard."""


class ConsistencyError(NilGTError, AssertionError):
    """Two routes that must agree produced different answers."""
