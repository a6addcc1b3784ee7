"""Exception hierarchy shared by every module of the package."""


class RiordanError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatch(RiordanError):
    pass


class NotAUnit(RiordanError, ZeroDivisionError):
    pass


class InvalidRing(RiordanError, ValueError):
    pass


class IndexBeyondPrecision(RiordanError, IndexError):
    pass


class PrecisionMismatch(RiordanError):
    pass


class InnerSeriesHasConstantTerm(RiordanError, ValueError):
    pass


class NotInvertible(RiordanError, ValueError):
    pass


class DenominatorNotUnit(RiordanError, ValueError):
    pass


class NotRiordan(RiordanError, ValueError):
    """A (g, f) pair violating the order/unit conditions of a proper array."""


class SizeBeyondPrecision(RiordanError, ValueError):
    pass


class SizeMismatch(RiordanError, ValueError):
    pass


class InvalidParams(RiordanError, ValueError):
    pass


class NotNormalized(RiordanError, ValueError):
    """Jennings input whose f-parts do not both start with -t."""


class PrecisionTooSmall(RiordanError):
    pass


class BudgetExceeded(RiordanError):
    pass


class NotLowerTriangular(RiordanError, ValueError):
    pass


class PresentationSyntaxError(RiordanError, SyntaxError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class PresentationValidationError(RiordanError, ValueError):
    pass


class UnsupportedPresentation(RiordanError):
    pass


class InvalidParameter(RiordanError, ValueError):
    pass
