class FamilyError(ValueError):
    """An assignment of variable sets that is not a rank-preserving isotone family."""

    def __init__(self, message, kind=None, color=None, point=None, other=None):
        super().__init__(message)
        self.kind = kind
        self.color = color
        self.point = point
        self.other = other


class IncompleteFamily(FamilyError):
    """Some (color, point) pair has no variable set assigned."""


class BudgetExceeded(RuntimeError):
    """A brute-force computation would exceed its configured size budget."""
