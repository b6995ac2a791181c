"""Exception types raised by the library."""


class CoherentEntropyError(ValueError):
    """Base class for all errors raised by this package."""


class OverlapError(CoherentEntropyError):
    """Raw norms or inner products are inconsistent (e.g. Cauchy-Schwarz fails)."""


class DimensionError(CoherentEntropyError):
    """Point dimensions do not match each other or the backend configuration."""


class TruncationError(CoherentEntropyError):
    """A coherent vector cannot be truncated to the requested tail tolerance."""


class ConvergenceError(CoherentEntropyError):
    """An iterative numerical routine failed to converge within its budget."""
