"""Exception hierarchy shared by every module."""


class GFPolyError(Exception):
    """Base class for all library errors."""


class CycleDetected(GFPolyError, ValueError):
    pass


class NotAnIdeal(GFPolyError, ValueError):
    pass


class DimensionMismatch(GFPolyError, ValueError):
    pass


class NotFullDimensional(GFPolyError, ValueError):
    pass


class EmptyInput(GFPolyError, ValueError):
    pass


class NoCommonLinearExtension(GFPolyError, ValueError):
    pass


class ParseError(GFPolyError, ValueError):
    pass


class BudgetExceeded(GFPolyError, RuntimeError):
    """A search or enumeration ran past its configured budget."""

    def __init__(self, message: str, budget: int | None = None):
        super().__init__(message)
        self.budget = budget


class SearchBudgetExceeded(BudgetExceeded):
    pass
