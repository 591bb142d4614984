"""Brute-force extremal quantities over (n, m) graphs and girth classes."""

import logging

from genramsey.errors import DomainError
from genramsey.graph import independence_number
from genramsey.oracle import HARD_CAP
from genramsey.oracle.augment import EnumerationStats, enumerate_nodes
from genramsey.oracle.filters import GirthFilter, NMFilter
from genramsey.oracle.verdict import OracleVerdict, select_extreme

log = logging.getLogger("genramsey")


def _check_order(n: int, p: int) -> None:
    if n < 1:
        raise DomainError(f"subset size must be positive (n={n})")
    if p < n:
        raise DomainError(f"order must be at least n (p={p}, n={n})")


def brute_extremal_e(n: int, m: int, p: int, *, jobs: int = 1,
                     budget: int = HARD_CAP) -> OracleVerdict:
    """e(n, m; p): the most edges in an (n, m) graph of order p.

    Raises:
        DomainError: p < n or m < 0.
        BudgetExceeded: p exceeds the budget.
    """
    _check_order(n, p)
    if m < 0:
        raise DomainError(f"edge budget must be nonnegative (m={m})")
    stats = EnumerationStats()
    nodes = enumerate_nodes(p, NMFilter(n, m), jobs=jobs, stats=stats, budget=budget)
    value, cert = select_extreme(nodes, lambda g: g.edge_count)
    log.debug(f"e({n},{m};{p}) = {value}")
    return OracleVerdict(
        quantity="extremal_e",
        params={"n": n, "m": m, "p": p},
        value=value,
        witness=cert.decode("ascii") if cert else None,
        stats=stats,
    )


def brute_alpha_min(n: int, m: int, p: int, *, jobs: int = 1,
                    budget: int = HARD_CAP) -> OracleVerdict:
    """The least independence number among (n, m) graphs of order p.

    Raises:
        DomainError: p < n or m < 0.
        BudgetExceeded: p exceeds the budget.
    """
    _check_order(n, p)
    if m < 0:
        raise DomainError(f"edge budget must be nonnegative (m={m})")
    stats = EnumerationStats()
    nodes = enumerate_nodes(p, NMFilter(n, m), jobs=jobs, stats=stats, budget=budget)
    value, cert = select_extreme(nodes, independence_number, maximize=False)
    log.debug(f"min alpha over ({n},{m}) graphs of order {p} = {value}")
    return OracleVerdict(
        quantity="alpha_min",
        params={"n": n, "m": m, "p": p},
        value=value,
        witness=cert.decode("ascii") if cert else None,
        stats=stats,
    )


def brute_girth_extremal(n: int, p: int, *, jobs: int = 1,
                         budget: int = HARD_CAP) -> OracleVerdict:
    """The most edges in a graph of order p with no cycle of length 3..n.

    Raises:
        DomainError: Unless p >= n >= 3.
        BudgetExceeded: p exceeds the budget.
    """
    if not p >= n >= 3:
        raise DomainError(f"needs p >= n >= 3 (n={n}, p={p})")
    stats = EnumerationStats()
    nodes = enumerate_nodes(p, GirthFilter(n), jobs=jobs, stats=stats, budget=budget)
    value, cert = select_extreme(nodes, lambda g: g.edge_count)
    return OracleVerdict(
        quantity="girth_extremal",
        params={"n": n, "p": p},
        value=value,
        witness=cert.decode("ascii") if cert else None,
        stats=stats,
    )
