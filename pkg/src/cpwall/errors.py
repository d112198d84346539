"""Exception types shared across the package."""


class CpwallError(Exception):
    """Base class for all package-specific errors."""


class DomainError(CpwallError):
    """Input outside the mathematical domain of an operation."""


class ConvergenceError(CpwallError):
    """An iterative scheme failed to reach its accuracy target."""


class ValidityError(CpwallError):
    """An expansion was requested outside its regime of validity."""
