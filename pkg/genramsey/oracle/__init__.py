"""Exhaustive isomorph-free search over small graphs."""

from genramsey.errors import BudgetExceeded

# Orders above this are never enumerated (order 11 already has about 10^9 classes).
HARD_CAP = 11

# The default largest order a single oracle query may reach.
DEFAULT_PMAX = 10


def check_budget(p: int, budget: int = HARD_CAP) -> None:
    """Raise BudgetExceeded if order p is above the budget or the hard cap."""
    limit = min(budget, HARD_CAP)
    if p > limit:
        raise BudgetExceeded(f"order {p} exceeds the enumeration budget of {limit}")
