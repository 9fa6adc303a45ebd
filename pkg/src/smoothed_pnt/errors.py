"""Exception hierarchy shared by all numeric modules."""


class NumericsError(Exception):
    """Base class for every error raised by this package."""


class PoleError(NumericsError):
    """Evaluation requested at (or numerically on top of) a pole."""


class AccuracyError(NumericsError):
    """The requested accuracy cannot be certified with the given resources."""


class NearSingularError(NumericsError):
    """Evaluation too close to a zero or pole for a meaningful quotient."""


class CapacityError(NumericsError):
    """A table or truncation limit is too small for the request."""


class RangeError(NumericsError):
    """Argument outside the supported domain of a table or function."""


class DomainError(NumericsError):
    """Argument violates a mathematical precondition (sign, interval, ...)."""


class ParseError(NumericsError):
    """Malformed input file; carries the 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class OrderError(NumericsError):
    """Entries that must be strictly ascending are not."""


class EmptySetError(NumericsError):
    """An operation that needs at least one zero received none."""


class ToleranceError(NumericsError):
    """A computed error estimate exceeds the allowed tolerance."""


class AliasError(NumericsError):
    """Too few quadrature nodes on the circle; coefficients would alias."""


class NormalizationError(NumericsError):
    """Exponent list not normalized (max real part must be 0, at index 0)."""
