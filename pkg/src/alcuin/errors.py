"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An exact computation would exceed its configured size budget."""
