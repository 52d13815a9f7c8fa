"""Exception hierarchy shared by the library and the command line tool."""


class AntiprismError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(AntiprismError, ValueError):
    """Input data does not describe a valid object (duplicate vertices, bad syntax, ...)."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotAFaceError(AntiprismError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "not a face"


class DisjointnessError(AntiprismError, ValueError):
    pass


class CapacityError(AntiprismError, RuntimeError):
    """A configured enumeration or search bound was exceeded."""


class IntegrityError(AntiprismError, ArithmeticError):
    """An exactness assumption failed; this signals a formula bug, never bad input."""
