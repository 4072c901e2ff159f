"""Exception types shared across the package."""


class MalformedInstanceError(ValueError):
    """Weight matrix is not a valid instance (asymmetric, negative, NaN, ...)."""


class EmptyPoolError(ValueError):
    """An edge was requested from a pool that has no active edges."""


class BudgetError(ValueError):
    """An exact oracle call exceeded its size or time budget."""
