"""Exception types raised across the package."""


class StochTensorError(Exception):
    """Base class for all package errors."""


class DimensionError(StochTensorError, ValueError):
    """Shapes or sizes that do not fit together."""


class TensorSyntaxError(StochTensorError, ValueError):
    """Malformed tensor text, with the offending position when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column or 1}: {message}"
        super().__init__(message)


class NotStochasticError(StochTensorError, ValueError):
    pass


class NotPermutationTensorError(StochTensorError, ValueError):
    pass


class ResourceGuardError(StochTensorError):
    """A size cap would be exceeded; pass an explicit override to continue."""


class IntegrityError(StochTensorError):
    """An internal consistency check failed. This indicates a bug."""
