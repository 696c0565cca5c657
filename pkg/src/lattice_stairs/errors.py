"""Exception types shared across the package."""


class DomainError(ValueError):
    """A precondition on the mathematical domain was violated."""


class ExpansionDirectionError(DomainError):
    """The expansion direction is orthogonal to a denominator vector.

    The caller must pick a generic direction: every denominator vector of
    every term needs a nonzero inner product with it.
    """


class UndefinedParameterError(DomainError):
    """A derived parameter falls outside the range where the operation is defined."""
