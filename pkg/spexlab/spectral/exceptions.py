class PartitionNotEquitableError(ValueError):
    """Raised when a quotient matrix is requested for a partition which is not equitable."""
    pass


class NoRootError(ValueError):
    """Raised when a polynomial has no real root in the requested range."""
    pass


class SpectralConvergenceError(RuntimeError):
    """Raised when an eigenpair fails its residual check."""
    pass
