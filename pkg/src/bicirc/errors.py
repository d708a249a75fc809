"""Shared exception types."""


class GraphFormatError(ValueError):
    """Malformed graph text input; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitError(RuntimeError):
    """An exhaustive scan would exceed its guard; fail loudly, never sample."""


class GenerationError(RuntimeError):
    """Rejection sampling gave up before meeting its constraint."""


class InternalInvariantError(RuntimeError):
    """A law that must hold for every matroid failed; this is a bug trap."""
