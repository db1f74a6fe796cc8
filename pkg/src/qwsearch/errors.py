"""Exception types shared across the package."""


class QwSearchError(Exception):
    """Base class for all package-specific failures."""


class SymmetryViolationError(QwSearchError, ValueError):
    """A full-space vector is not uniform across the unmarked vertices."""

    def __init__(self, max_deviation: float, tolerance: float):
        self.max_deviation = max_deviation
        self.tolerance = tolerance
        super().__init__(
            f"state is not symmetric across unmarked vertices: "
            f"max deviation {max_deviation:.3e} exceeds tolerance {tolerance:.1e}"
        )


class UnsupportedParameterError(QwSearchError, ValueError):
    """A parameter is outside the domain of a closed-form expression."""


class SingularPointError(QwSearchError, ArithmeticError):
    """A closed-form expression hit a vanishing denominator."""


class HermiticityViolationError(QwSearchError, ArithmeticError):
    """A supposedly real expectation value came out with an imaginary part."""


class NumericOverflowError(QwSearchError, FloatingPointError):
    """An integration step produced non-finite values."""


class IntegrationDivergedError(QwSearchError, RuntimeError):
    """Norm drift exceeded the divergence threshold; reduce the step size."""


class NoPeakError(QwSearchError, RuntimeError):
    """No local maximum above the initial value was found; extend t_max."""


class ThresholdInconsistencyError(QwSearchError, RuntimeError):
    """A run inside the guaranteed-success region failed to reach the target."""
