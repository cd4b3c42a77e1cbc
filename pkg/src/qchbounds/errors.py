"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the function."""


class NoSignChangeError(ValueError):
    """The bracket endpoints do not straddle a root."""


class TargetOutOfRangeError(ValueError):
    """The inversion target is not attained on the given interval."""


class ConvergenceError(RuntimeError):
    """An iterative method failed to meet its tolerance."""
