"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Operands live in different coordinate dimensions."""


class CapExceededError(ValueError):
    """A requested enumeration or rule would exceed the configured size cap."""


class UnsupportedPatternError(ValueError):
    """The operation is only defined for patterns with at most one group."""


class NullspaceError(RuntimeError):
    """Nullspace extraction left a residual above tolerance.

    Carries the offending residual so callers can decide whether to retry
    with a different column ordering.
    """

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = float(residual)


class CertificateError(RuntimeError):
    """A certificate failed one of its verification checks.

    ``residuals`` maps check names to the measured deviations.
    """

    def __init__(self, message, residuals):
        super().__init__(message)
        self.residuals = dict(residuals)


class RefusalError(Exception):
    """The rule has enough nodes that no lower-bound certificate exists.

    Certifying is refused once the node count reaches the critical count for
    the pattern; ``upper_bound_error`` (when available) is the worst-case
    error the folded rectangle rule guarantees at that size.
    """

    def __init__(self, n_nodes, threshold, upper_bound_error=None):
        self.n_nodes = int(n_nodes)
        self.threshold = int(threshold)
        self.upper_bound_error = upper_bound_error
        msg = (
            f"rule uses {n_nodes} nodes, but the lower-bound construction "
            f"requires fewer than {threshold}"
        )
        if upper_bound_error is not None:
            msg += f"; at {threshold} nodes the folded rule achieves error <= {upper_bound_error:.6g}"
        super().__init__(msg)
