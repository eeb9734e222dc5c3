"""Exception types shared across the package."""


class NumericalIntegrityError(RuntimeError):
    """A computed quantity violated a bound the math guarantees.

    Raised when a result that should hold to known precision (probability
    bounds, cross-checks between independent computation routes, quadrature
    targets) misses by more than the allowed slack. Getting one of these
    means the computation cannot be trusted, not that the input was wrong.
    """


class NullCollapseError(ValueError):
    """Projective collapse was requested on an outcome of ~zero probability.

    Callers must branch on the outcome probability before collapsing.
    """


class DegenerateConditioningError(ValueError):
    """A conditional probability was requested on a ~zero-probability event."""
