"""Exception types shared across the package."""


class PolybergError(Exception):
    """Base class for all package-specific errors."""


class LengthMismatch(PolybergError, ValueError):
    """Vector arguments have incompatible lengths."""


class DomainViolation(PolybergError, ValueError):
    """A point fails the defining inequality of the Hartogs domain."""


class NonConvergent(PolybergError, ArithmeticError):
    """Series argument lies outside the guaranteed convergence region."""


class IterationCap(PolybergError, ArithmeticError):
    """Series failed to meet its tail bound within the iteration limit."""


class PoleProximity(PolybergError, ArithmeticError):
    """Evaluation point is too close to the pole at t = 1."""


class RootFindingFailure(PolybergError, ArithmeticError):
    """Polynomial roots could not be certified to the requested residual."""
