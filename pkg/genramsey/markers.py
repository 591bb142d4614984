"""Custom pytest markers for genramsey."""

from typing import Optional

import pytest

from genramsey.errors import BudgetExceeded
from genramsey.oracle import HARD_CAP

SLOW_INI = (
    "slow: exhaustive run at acceptance scale (order 8 or 9 enumeration, full sweeps). "
    'Skipped unless pytest is run with "--run-slow".'
)

BUDGET_INI = (
    "budget(pmax): "
    "override the oracle budget for the marked test. The oracle_budget fixture then "
    "reports this pmax instead of the --genramsey-pmax option. The value may not "
    f"exceed the hard cap of {HARD_CAP}."
)


def register(config) -> None:
    """Register genramsey markers with pytest.

    Args:
        config: The pytest config that markers will be registered to.
    """
    config.addinivalue_line("markers", SLOW_INI)
    config.addinivalue_line("markers", BUDGET_INI)


def budget_from_marker(item: pytest.Item) -> Optional[int]:
    """Get the pmax set by the closest ``pytest.mark.budget`` marker.

    Args:
        item: The pytest test item.

    Returns:
        The marked pmax, or None if the test is not marked.

    Raises:
        BudgetExceeded: The marked pmax exceeds the hard cap.
    """
    mark = item.get_closest_marker("budget")
    if mark is None:
        return None
    pmax = mark.args[0] if mark.args else mark.kwargs["pmax"]
    if pmax > HARD_CAP:
        raise BudgetExceeded(f"budget marker pmax={pmax} exceeds the hard cap {HARD_CAP}")
    return pmax
