"""Exception types shared across the package."""


class EhrhartError(Exception):
    """Base class for all package errors."""


class DimensionError(EhrhartError):
    """Matrix or point dimensions do not match the operation's requirements."""


class SingularMatrixError(EhrhartError):
    """A nonsingular matrix was required but det = 0."""


class DegenerateSimplexError(EhrhartError):
    """Vertex set is affinely dependent; the offending index is attached."""

    def __init__(self, index: int):
        super().__init__(f"vertex {index} is affinely dependent on the previous vertices")
        self.index = index


class ParameterError(EhrhartError):
    """A construction was called with parameters outside its family."""


class BudgetExceededError(EhrhartError):
    """Brute-force enumeration would exceed the configured candidate budget."""

    def __init__(self, needed: int, budget: int):
        super().__init__(f"bounding-box scan needs {needed} candidates, budget is {budget}")
        self.needed = needed
        self.budget = budget


class InconsistentCountsError(EhrhartError):
    """A counting sequence produced a negative delta entry, so it cannot come
    from an integral polytope."""


class NotRealizableError(EhrhartError):
    """realize() was called on a candidate the classifier rejects."""


class OutOfScopeError(EhrhartError):
    """The request falls outside the classified range (sum > 3 or d < 3)."""


class InternalInconsistencyError(EhrhartError):
    """Two methods that must agree disagreed; indicates a bug, never bad input."""
