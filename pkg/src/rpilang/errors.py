"""Exception hierarchy shared by every layer of the package."""


class RpiError(Exception):
    """Base class for all domain errors raised by this package."""


class TypeMismatch(RpiError):
    """Two types (or typed objects) that must agree do not."""


class AmbiguousType(RpiError):
    """A type variable survived inference and no annotation pins it."""


class IllTypedValue(RpiError):
    """A value does not inhabit the type required by the operation."""


class NotEnumerable(RpiError):
    """The type contains a relation type, so it has no finite value listing."""


class DimensionMismatch(RpiError):
    """Vector/matrix shapes are incompatible for the requested operation."""


class ZeroVector(RpiError):
    """The empty set appeared where a valid quantum state is required."""


class NoOutcome(RpiError):
    """No dual basis vector matches the measured state."""


class NotInvertible(RpiError):
    """An evolution step denotes a non-invertible matrix."""


class DepthExceeded(RpiError):
    """Resolution gave up after the configured number of steps."""


class UnknownPredicate(RpiError):
    """A goal refers to a predicate with no clauses."""


class UnknownName(RpiError):
    """A source program refers to a name that is not defined."""


class ParseError(RpiError):
    """Source text could not be parsed; carries line and column when known."""

    def __init__(self, message, line=None, col=None):
        if line is not None:
            message = f"{line}:{col}: {message}"
        super().__init__(message)
        self.line = line
        self.col = col
