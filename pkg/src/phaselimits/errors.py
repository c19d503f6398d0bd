"""Exception types raised across the package."""


class PhaseLimitsError(Exception):
    """Base class for all package errors."""


class ValidationError(PhaseLimitsError, ValueError):
    """Input violates a documented precondition (e.g. unnormalized state)."""


class DimensionError(PhaseLimitsError, ValueError):
    """Mode counts of two objects do not agree."""


class UndefinedManifoldError(PhaseLimitsError, ValueError):
    """A quantity was requested on a photon-number manifold with zero weight."""


class NoBoundError(PhaseLimitsError, ValueError):
    """No finite lower limit exists for the requested arguments."""


class ConstructionError(PhaseLimitsError, ValueError):
    """A state constructor received arguments outside its domain."""


class PreconditionError(PhaseLimitsError, ValueError):
    """Input to the manifold reduction is not orthogonality-feasible."""


class NonOptimalInputError(PhaseLimitsError, ValueError):
    """A manifold phase average is not real, so the input cannot be a stationary state."""


class DegenerateError(PhaseLimitsError, ValueError):
    """The reduction denominator vanishes."""


class SpecError(PhaseLimitsError, ValueError):
    """A search specification is invalid or describes an empty search space."""
