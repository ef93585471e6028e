"""Exception hierarchy shared by the library and the CLI."""


class SchedulingError(ValueError):
    """Base class for all errors raised by this package."""


class InstanceError(SchedulingError):
    """Invalid job data: negative or oversized values, duplicate ids, overflow."""


class SequenceError(SchedulingError):
    """A sequence references unknown ids, repeats an id, or is not a full schedule."""


class ParseError(InstanceError):
    """Malformed instance text. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(SchedulingError):
    """An operation was called on input outside its guaranteed domain."""


class OracleCapError(PreconditionError):
    """The brute-force oracle was asked to enumerate more jobs than its cap allows."""
