"""Exception taxonomy shared across the package.

The CLI maps these onto process exit codes: validation/configuration
problems exit 2, numerical/solver problems exit 3, checkpoint
incompatibilities exit 4.
"""


class SuperarrayError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(SuperarrayError, ValueError):
    """Invalid argument, configuration value, or violated invariant."""


class InfeasibleError(ValidationError):
    """Problem constraints admit no feasible array configuration."""


class SolverError(SuperarrayError, RuntimeError):
    """Numerical failure while assembling or solving a design system."""


class UnderDeterminedError(SolverError):
    """Too few microphones for the requested truncation order."""


class TruncationTooSmallError(SolverError):
    """Truncation order below the target pattern order."""


class RankDeficiencyError(SolverError):
    """Gram matrix numerically singular with no regularization.

    Carries the estimated condition number in ``condition``.
    """

    def __init__(self, message, condition=float("inf")):
        super().__init__(message)
        self.condition = condition


class DegenerateQuotientError(SolverError):
    """Rayleigh-quotient denominator vanished to rounding level."""


class CheckpointError(SuperarrayError):
    """Checkpoint file incompatible with this version or problem."""
