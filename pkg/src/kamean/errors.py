"""Exception and warning types raised across the package."""


class KameanError(ValueError):
    """Base class for all errors raised by kamean."""


class DimensionMismatch(KameanError):
    pass


class AlgebraMismatch(KameanError):
    pass


class OddDimension(KameanError):
    pass


class NotHermitian(KameanError):
    pass


class NotPositiveDefinite(KameanError):
    pass


class NotInImage(KameanError):
    """The matrix is not in the image of the requested embedding."""


class FunctionDomainError(KameanError):
    """A scalar function returned a non-finite value on the spectrum."""


class InvalidSpectrumData(KameanError):
    pass


class WeightMismatch(KameanError):
    pass


class UnknownSuite(KameanError):
    pass


class ParseError(KameanError):
    pass


class ShapeError(ParseError):
    pass


class ArityError(ParseError):
    pass


class ConvergenceFailure(ArithmeticError):
    """An iterative numerical kernel hit its iteration cap or could not pair
    eigenvalues."""


class DegenerateFit(UserWarning):
    """Emitted when an affine fit falls back to a one-parameter fit."""


class MonotonicitySmokeWarning(UserWarning):
    """A representing function failed the sampled monotonicity check."""
