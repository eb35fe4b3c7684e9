"""Package-wide exception types."""


class StableConcError(Exception):
    """Base class for all package errors."""


class NoPositiveRootError(StableConcError, ValueError):
    """The defining equation has no positive root for these parameters."""


class NonConvergenceError(StableConcError, RuntimeError):
    """A bracketed solver failed to converge within its iteration budget."""


class UnsupportedRegimeError(StableConcError, ValueError):
    """The requested regime is outside the supported parameter domain."""


class MCBudgetError(StableConcError, RuntimeError):
    """Monte Carlo budget too small to resolve a bracket decision.

    Carries the achieved confidence-interval width so callers can retry
    with a larger budget.
    """

    def __init__(self, message: str, ci_width: float):
        super().__init__(f"{message} (achieved CI width {ci_width:.3g})")
        self.ci_width = ci_width
