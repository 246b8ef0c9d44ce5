"""Exception types shared across the package."""


class HabitPlanError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(HabitPlanError, ValueError):
    """A model parameter violates its admissibility condition."""


class DomainError(HabitPlanError, ValueError):
    """A pointwise evaluation was requested outside the valid domain."""


class GridError(HabitPlanError, ValueError):
    """A habit grid violates the truncation/inflow conditions."""


class ConfigError(HabitPlanError, ValueError):
    """A configuration file failed to parse or validate."""


class ConvergenceError(HabitPlanError, RuntimeError):
    """An iterative solver exhausted its budget.

    Carries the residual history accumulated so far in ``history``.
    """

    def __init__(self, message, history=None):
        super().__init__(message)
        self.history = list(history) if history is not None else []


class ToleranceError(HabitPlanError, RuntimeError):
    """A certified error bound could not be pushed below the request."""


class CFLError(HabitPlanError, ValueError):
    """An explicit pseudo-time step violates the CFL stability bound."""


class DomainEscapeError(HabitPlanError, RuntimeError):
    """A simulated trajectory left the truncated habit grid."""


class SaddlePathError(HabitPlanError, RuntimeError):
    """Base class for failed saddle-path constructions."""


class NoCrossingError(SaddlePathError):
    """Backward integration never reached the requested initial habit."""


class UnstableClassificationError(SaddlePathError):
    """The linearized steady state does not have exactly one stable direction."""
