"""Exception hierarchy shared by every module."""


class VNumberError(Exception):
    """Base class for errors raised by this package."""


class InputError(VNumberError, ValueError):
    """Malformed input: bad exponent vectors, unknown variables, bad parameters."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class DomainError(VNumberError, ValueError):
    """The operation is undefined for this ideal or prime (zero/unit ideal, P not in Ass)."""


class ConsistencyError(VNumberError, RuntimeError):
    """An invariant guaranteed by theory failed at runtime. Always a bug."""


class ExponentOverflowError(VNumberError, OverflowError):
    """Exponent arithmetic left the fixed-width range."""
