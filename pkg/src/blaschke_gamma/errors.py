"""Exception hierarchy.

Every error the library raises deliberately derives from BlaschkeGammaError so
callers (CLI, service) can map failures to exit codes / HTTP statuses without
catching bare exceptions.
"""
from __future__ import annotations


class BlaschkeGammaError(Exception):
    """Base class for all library errors."""


class SpecParseError(BlaschkeGammaError):
    """A function-spec document failed to parse; carries a JSON path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class DomainError(BlaschkeGammaError):
    """Input outside an operation's mathematical domain."""


class DegreeZero(DomainError):
    """Polynomial degree too small for the requested operation."""


class BoundaryRoot(DomainError):
    """A root sits within tolerance of the counting circle."""


class FloatBackend(DomainError):
    """Operation requires the exact backend (got float coefficients)."""


class OutsideDomain(DomainError):
    """Evaluation point outside the permitted region."""


class DegenerateLeading(DomainError):
    """Fiber polynomial's leading coefficient vanished at the base point."""


class InconsistentFiber(DomainError):
    """Symmetric-function recursion disagrees with directly computed values."""


class EvaluationFailure(DomainError):
    """An oracle could not be evaluated at the requested point."""


class NotRational(BlaschkeGammaError):
    """Exact rational form requested for a non-algebraic oracle."""


class NotAZero(DomainError):
    """Witness requested at a point where the function is not small."""


class NoWitness(BlaschkeGammaError):
    """No vanishing mechanism could be certified at a numerical zero."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        self.diagnostics = diagnostics or {}
        super().__init__(message)


class NearCircleZero(BlaschkeGammaError):
    """Winding-number refinement stalled: a zero hugs the contour."""


class ZeroAtOrigin(DomainError):
    """Origin zero could not be divided out before defect estimation."""


class Inconclusive(BlaschkeGammaError):
    """Classification could not be certified; diagnostics attached."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        self.diagnostics = diagnostics or {}
        super().__init__(message)


class StructureNotFound(BlaschkeGammaError):
    """Fibers did not partition into equal-size level sets."""


class NearCriticalPoint(DomainError):
    """Fiber points too close together for a stable interpolation."""


class NearDegenerate(BlaschkeGammaError):
    """Interpolation nodes collide on most of the grid (g nearly a function
    of the generator); decomposition output is vacuous."""


class DegreeNotTwo(DomainError):
    """Operation only defined for degree-2 generators."""


class NotCoprime(DomainError):
    """Monomial exponents share a nontrivial factor."""


class BoundaryResolutionExceeded(BlaschkeGammaError):
    """Boundary zero scan could not certify the minimum either way."""


class BudgetExceeded(BlaschkeGammaError):
    """Zero search exceeded the configured budget."""
