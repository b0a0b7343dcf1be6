"""Error types shared across the package."""


class DomainError(ValueError):
    """Coordinate lies outside the interval on which the quantity is defined."""


class ParameterError(ValueError):
    """Parameter combination violates a documented precondition."""


class StabilityError(ValueError):
    """Evaluation refused too close to a removable singularity.

    Raised by the identity right-hand sides inside the node-exclusion
    margin; the polynomial left-hand side remains valid there and should
    be used instead.
    """


class ConvergenceError(RuntimeError):
    """An iterative solver failed to converge (internal error)."""


class EvaluationError(ValueError):
    """An integrand produced a non-finite value."""
