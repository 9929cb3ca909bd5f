"""Exception hierarchy shared by the library and the CLI."""


class DoublewedgeError(ValueError):
    """Base class for every error raised by this package."""


class DimensionError(DoublewedgeError):
    """Operands have incompatible dimensions."""


class DegenerateError(DoublewedgeError):
    """A geometric input is degenerate (zero axis, parallel directions, ...)."""


class NumericalError(DoublewedgeError):
    """A numerical precondition or tolerance check failed."""


class FieldEvaluationError(NumericalError):
    """A field returned a non-finite or malformed value."""
