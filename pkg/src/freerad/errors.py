"""Exception types shared across the package."""


class FreeradError(Exception):
    """Base class for every error raised by this package."""


class BadInput(FreeradError, ValueError):
    """Input violates a documented precondition."""


class CapExceeded(FreeradError):
    """A requested enumeration or matrix would exceed the configured size cap."""


class InsufficientDepth(FreeradError):
    """A radial value table is too short for the requested radius."""


class InsufficientRadius(FreeradError):
    """Convolution supports do not fit inside the requested ball."""


class NotRadial(FreeradError):
    """A convolution result failed the radiality cross-check (bug signal)."""


class InternalDisagreement(FreeradError):
    """Two equivalent test forms disagreed beyond tolerance (bug signal)."""


class NonzeroRemainder(FreeradError):
    """Synthetic division left a nonzero remainder (numeric drift)."""


class SingularMoments(FreeradError):
    """Hankel matrix is not strictly positive definite for the requested
    number of atoms; retry with fewer atoms."""


class ConditionLoss(FreeradError):
    """A floating-point solve amplified roundoff too much to be trusted."""


class ExactnessError(FreeradError):
    """The requested computation cannot be carried out in exact rational
    arithmetic (an irrational intermediate is required)."""


class SchemaError(FreeradError, ValueError):
    """A JSON payload does not match the expected schema.

    ``pointer`` locates the offending element as a JSON pointer string.
    """

    def __init__(self, message: str, pointer: str = ""):
        self.pointer = pointer or "/"
        super().__init__(f"{self.pointer}: {message}")
