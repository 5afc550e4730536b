"""Exception hierarchy shared by all modules."""


class HSPolyError(Exception):
    """Base class for every error raised by the package."""


class HypothesisViolation(HSPolyError):
    """Input does not satisfy the hypotheses an operation relies on."""


class NumericalFailure(HSPolyError):
    """A numeric procedure did not reach its accuracy target."""


class ZeroPolynomialError(HSPolyError, ValueError):
    pass


class ZeroStepError(HSPolyError, ValueError):
    pass


class PoleError(HSPolyError, ZeroDivisionError):
    """Division by a coefficient that vanishes at a lattice point."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class InputError(HSPolyError, ValueError):
    """Malformed serialized input; ``field`` names the offending location."""

    def __init__(self, message, field=None):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field
