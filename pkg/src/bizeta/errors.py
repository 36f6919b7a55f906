"""Exception hierarchy shared by every module."""


class BizetaError(Exception):
    """Base class for library errors."""


class DomainError(BizetaError, ValueError):
    """Input lies outside the region where an operation is defined."""


class BoundaryError(DomainError):
    """Point sits within the geometric margin of a region boundary."""


class PoleError(DomainError):
    """Evaluation requested at (or numerically too close to) a pole."""


class RangeError(BizetaError, ValueError):
    """Index or order outside the supported table range."""


class ConvergenceError(BizetaError, ArithmeticError):
    """A series could not be summed to the requested tolerance."""


class ReductionError(BizetaError, ArithmeticError):
    """Shift reduction failed to move a point into the open cone."""


class ZeroFactorError(DomainError):
    """An infinite product contains an exactly vanishing factor."""


class UnknownSuiteError(BizetaError, KeyError):
    """A verification suite name is not in the catalog."""

    def __str__(self):
        return Exception.__str__(self)
