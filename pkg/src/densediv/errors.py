"""Exception types shared across the package."""


class DenseDivError(Exception):
    """Base class for all densediv errors."""


class DomainError(DenseDivError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class ResourceLimitError(DenseDivError):
    """A configured budget (sieve size, divisor count, node count) was exceeded."""


class SearchFailureError(DenseDivError):
    """A bracketed-root scan exhausted its search range without a sign change."""


class NumericalConsistencyError(DenseDivError):
    """Two independent evaluation routes disagreed beyond tolerance."""


class BoundaryZeroError(DenseDivError):
    """A zero is suspected on (or too close to) a counting contour."""
