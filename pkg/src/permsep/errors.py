"""Exceptions shared across the package."""


class InvariantError(RuntimeError):
    """A mathematical identity the code relies on failed to hold.

    This is never expected: it signals an implementation bug, not bad input.
    """


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration was aborted because it exceeded its budget.

    The partial work is discarded; counts are never silently truncated.
    """
