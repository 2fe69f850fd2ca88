"""Exception hierarchy shared by the library and the CLI."""


class ZernkitError(Exception):
    """Base class for all errors raised by zernkit."""


class DomainError(ZernkitError, ValueError):
    """An argument lies outside the domain of the operation."""


class ValidationError(ZernkitError, ValueError):
    """Input data is malformed, incomplete or inconsistent."""


class ComputationError(ZernkitError, ArithmeticError):
    """A numerical computation failed (non-finite samples, no convergence)."""


class ConvergenceError(ComputationError):
    """An iterative method did not reach its tolerance."""
