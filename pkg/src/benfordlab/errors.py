"""Exception hierarchy shared by all modules."""


class BenfordLabError(Exception):
    """Base class for all library errors."""


class DomainError(BenfordLabError, ValueError):
    """Input outside the documented domain of an operation."""


class SizeGuardError(BenfordLabError, ValueError):
    """Request exceeds a hard size guard (quadratic oracles, huge grids)."""


class ConvergenceError(BenfordLabError, RuntimeError):
    """A truncated sum or adaptive quadrature could not certify its tolerance."""


class ConfigError(BenfordLabError, ValueError):
    """Inconsistent experiment configuration."""
