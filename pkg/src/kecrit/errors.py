"""Exception hierarchy shared by every module."""


class KecritError(Exception):
    """Base class for library errors."""


class GraphInputError(KecritError, ValueError):
    """A vertex or edge is out of range, or a graph is not simple."""


class ParseError(KecritError, ValueError):
    """Malformed graph6 or edge-list input."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)


class SizeLimitError(KecritError):
    """The graph is too large for an exponential-time routine."""


class DomainError(KecritError, ValueError):
    """Argument outside the mathematical domain of an operation."""
