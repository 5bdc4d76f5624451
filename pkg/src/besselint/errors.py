"""Exception hierarchy.

Every failure raised by the library derives from :class:`BesselIntError` so
that callers (and the CLI exit-code mapping) can catch by category.
"""


class BesselIntError(Exception):
    """Base class for all library errors."""


class DomainError(BesselIntError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class OrderError(DomainError):
    """The order is not admissible for this evaluation path (e.g. integer b)."""


class DivergenceError(DomainError):
    """The requested integral does not converge."""


class DegenerateError(DomainError):
    """K and k coincide (to tolerance) where a K != k formula was requested.

    ``delta_coeff`` carries the coefficient of delta(K-k) when one is defined,
    so callers can still report the distributional part.
    """

    def __init__(self, message, delta_coeff=None):
        super().__init__(message)
        self.delta_coeff = delta_coeff


class PathError(DomainError):
    """The straight integration path passes through a singular point."""


class OverflowRangeError(BesselIntError, OverflowError):
    """A result or intermediate exceeds the double-precision range."""


class AccuracyLossError(BesselIntError, ArithmeticError):
    """Cancellation destroyed too many digits for the result to be trusted."""


class NonConvergenceError(BesselIntError, ArithmeticError):
    """Adaptive quadrature exhausted its interval budget above tolerance."""

    def __init__(self, message, value=None, err_estimate=None):
        super().__init__(message)
        self.value = value
        self.err_estimate = err_estimate


class UnboundedGrowthError(NonConvergenceError):
    """The Gaussian factor cannot tame the integrand's exponential growth."""
