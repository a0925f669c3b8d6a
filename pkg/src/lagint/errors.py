"""Exception hierarchy shared by every lagint module."""

from __future__ import annotations


class LagintError(Exception):
    """Base class for all library errors."""


class DomainError(LagintError, ValueError):
    """Argument outside the evaluator or ODE domain."""


class PoleError(DomainError):
    """Evaluation requested at a pole (e.g. Gamma at a nonpositive integer)."""


class ConvergenceError(LagintError, ArithmeticError):
    """A series or iteration is not convergent for the requested argument."""


class UnsupportedOrderError(DomainError):
    """Order outside the supported range of an evaluator."""


class ConventionError(LagintError, ValueError):
    """Request falls outside the implemented branch/normalization convention."""


class ParameterError(DomainError):
    """Parameters make a defining series or construction degenerate."""


class UnknownIdError(LagintError, KeyError):
    """Catalog, gauge, or corpus identifier is not registered."""

    def __str__(self) -> str:  # KeyError quotes its message; keep it readable.
        return str(self.args[0]) if self.args else ""


class SingularityError(DomainError):
    """An integration range crosses (or touches) a registered singularity."""


class EmptyDomainError(DomainError):
    """Domains of the combined objects do not overlap."""


class NotConjugateError(LagintError, ValueError):
    """Two ODEs do not share the same first-derivative coefficient p(x)."""


class NonPositiveFactorError(DomainError):
    """An integrating factor is not positive where a square root is needed."""


class DegenerateError(LagintError, ValueError):
    """A Wronskian vanishes: the solutions are linearly dependent."""


class MarginError(DomainError):
    """Finite-difference stencil would leave the domain."""


class BudgetExceededError(LagintError, RuntimeError):
    """Adaptive quadrature exhausted its interval budget."""


class NonFiniteIntegrandError(LagintError, ArithmeticError):
    """The integrand produced NaN or infinity."""


class EvaluatorUnsupportedError(LagintError):
    """A required evaluator is unavailable; corpus entries are skipped, not failed."""
