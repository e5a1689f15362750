"""Exception types shared across the package."""


class HarmonicZerosError(Exception):
    """Base class for every error raised by this package."""


class DomainError(HarmonicZerosError, ValueError):
    """A parameter or precondition violation (bad degree, out-of-range value, ...)."""


class ConvergenceFailure(HarmonicZerosError):
    """An iterative solver hit its iteration cap before converging.

    ``partial`` carries whatever results were obtained so callers can report
    them instead of dropping the row silently.
    """

    def __init__(self, message: str, partial=()):
        super().__init__(message)
        self.partial = tuple(partial)


class IndeterminateValue(HarmonicZerosError):
    """Numerator and denominator vanish together; coprime reduction failed."""


class DegenerateResult(HarmonicZerosError):
    """An operation collapsed below its guaranteed degree or lost isolation."""


class SingularPoint(HarmonicZerosError):
    """A transformation is not invertible at the requested point."""


class PoleEvaluation(HarmonicZerosError):
    """The function was evaluated at a pole where it has no finite value."""


class OnCurveZero(HarmonicZerosError):
    """The winding integrand has a zero (or non-finite value) on the contour."""


class RefinementExhausted(HarmonicZerosError):
    """Adaptive sampling hit its cap without meeting the phase-step bound."""


class IsolationFailure(HarmonicZerosError):
    """No isolating circle exists (e.g. index requested at a singular zero)."""


class NotAZero(HarmonicZerosError):
    """A point claimed to be a zero fails the residual check."""


class ViolationSuspected(HarmonicZerosError):
    """A numerically extremal function shows a singular flag; needs manual review."""
