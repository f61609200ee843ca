"""Exception hierarchy shared by all modules."""


class SGapError(Exception):
    """Base class for every error raised by this package."""


class InputError(SGapError):
    """Unreadable or malformed external input (gap-set files, CSVs)."""


class DomainError(SGapError, ValueError):
    """Arguments outside an operation's domain."""


class NumericError(SGapError, ArithmeticError):
    """A numeric budget (bracket, series cut, integer width) was exhausted."""


class UndefinedPressure(SGapError, ArithmeticError):
    """Finite-n pressure requested where the weighted sum is zero."""


class ConfigError(SGapError):
    """Invalid scenario configuration."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
