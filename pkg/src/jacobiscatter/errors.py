"""Exception types shared across the package."""


class CoefficientError(ValueError):
    """Coefficient data violates an admissibility rule."""


class SpectralDomainError(ValueError):
    """Spectral argument lies outside the supported domain."""


class NumericalFault(ArithmeticError):
    """A computation is too ill-conditioned to trust."""
