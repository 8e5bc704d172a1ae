"""Exception types shared across the package."""


class NKerrError(Exception):
    """Base class for every error raised by this package."""


class DegeneracyError(NKerrError):
    """Unperturbed spectrum too close to degenerate for a non-degenerate series."""


class MissingOrderError(NKerrError):
    """A required lower-order series entry has not been computed yet."""


class PoleError(NKerrError):
    """A closed-form denominator vanishes at the requested parameters."""


class NotResonantError(NKerrError):
    """Raman resonance (delta_2 = 0) required but not satisfied."""


class NotHermitianError(NKerrError):
    """Operation restricted to the lossless (gamma = 0) regime."""


class ConvergenceError(NKerrError):
    """Dense eigensolver failed to meet its residual contract."""


class TrackingError(NKerrError):
    """Continuity tracking of an eigenbranch lost its target."""


class StepError(NKerrError):
    """Finite-difference extrapolations disagree; the step is badly chosen."""


class ScenarioError(NKerrError):
    """Scenario file failed schema validation."""
