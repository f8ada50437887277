"""Exception types shared across the package."""


class SphereBoundsError(Exception):
    """Base class for all package-specific failures."""


class UnsupportedDegreeError(SphereBoundsError, ValueError):
    """Polynomial degree beyond the double-precision comfort cap."""


class RootBracketError(SphereBoundsError, RuntimeError):
    """Root isolation could not bracket the expected sign changes."""


class InvalidCardinalityError(SphereBoundsError, ValueError):
    """Cardinality M outside the admissible range."""


class BranchDomainError(SphereBoundsError, ValueError):
    """Argument s outside the branch interval of a Levenshtein bound."""


class ConvergenceError(SphereBoundsError, RuntimeError):
    """Iteration cap reached without meeting the target tolerance."""


class RuleConstructionError(SphereBoundsError, RuntimeError):
    """Quadrature rule failed a construction-time guarantee (positivity, exactness)."""


class InvalidUError(SphereBoundsError, ValueError):
    """Interpolation endpoint u not strictly between the largest node and 1."""


class DerivativeOrderError(SphereBoundsError, ValueError):
    """Potential cannot supply a derivative of the requested order."""


class BoundConstructionError(SphereBoundsError, RuntimeError):
    """An energy bound failed its certification check and must not be emitted."""


class DegenerateConfigurationError(SphereBoundsError, ArithmeticError):
    """Closed-form bound hit a vanishing denominator."""


class UserInputRequiredError(SphereBoundsError, ValueError):
    """No built-in structural bound exists; an explicit value is required."""


class NumericalInconsistencyError(SphereBoundsError, RuntimeError):
    """A quantity that is nonnegative by theory came out significantly negative."""


class AbsoluteMonotonicityWarning(UserWarning):
    """Potential failed the absolute-monotonicity probe; bound emitted anyway."""
