"""Exception types shared across the package."""


class SiftmineError(Exception):
    """Base class for every error raised by this package."""


class InputError(SiftmineError):
    """Malformed data, file content, or argument value."""


class ConstraintSyntaxError(InputError):
    """Constraint text that does not follow the grammar.

    Carries the 1-based line and column of the offending fragment when
    they are known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class KindMismatchError(InputError):
    """An operation was applied across different pattern kinds."""


class BoundExceededError(SiftmineError):
    """An exhaustive search was asked to exceed its configured size bound."""
