"""Exhaustive computation of generalized Ramsey numbers R(n, r; k, s).

A graph G of order p defeats both clauses of the definition exactly when its
complement H is an (n, r*) graph, r* = C(n,2) - r, satisfying the (k, s)
condition. Both properties are induced-hereditary, so R is the first order at
which the filtered augmentation tree has an empty level.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple

from genramsey import graph6
from genramsey.canonical import canonical_certificate
from genramsey.closed_forms import RamseyQuery, RecursiveBound, ramsey_recursive_bound
from genramsey.graph import Graph, complement
from genramsey.oracle import DEFAULT_PMAX, HARD_CAP, check_budget
from genramsey.oracle.augment import EnumerationStats, Node, iter_levels
from genramsey.oracle.filters import (
    AlphaBelowFilter,
    DegreeWindowFilter,
    FilterChain,
    KSConditionFilter,
    NMFilter,
)
from genramsey.oracle.verdict import OracleVerdict

log = logging.getLogger("genramsey")


class DegreeWindow(NamedTuple):
    """Closed degree interval [lo, hi]."""

    lo: int
    hi: int


def degree_prune_bounds(p: int, r_sub_k: int, r_sub_n: int) -> DegreeWindow:
    """Degrees every counterexample graph of order p must have.

    Args:
        p: The order of the counterexample.
        r_sub_k: R(n, r; k-1, s).
        r_sub_n: R(n-1, r; k, s).

    Returns:
        The interval [max(0, p - r_sub_k), r_sub_n - 1].
    """
    return DegreeWindow(max(0, p - r_sub_k), r_sub_n - 1)


def counterexample_chain(q: RamseyQuery) -> FilterChain:
    """Filters selecting the complements of graphs that defeat both clauses."""
    second = AlphaBelowFilter(q.k) if q.s == 1 else KSConditionFilter(q.k, q.s)
    return FilterChain([NMFilter(q.n, q.r_star), second])


def sub_queries(q: RamseyQuery) -> Optional[Tuple[RamseyQuery, RamseyQuery]]:
    """(R(n-1, r; k, s), R(n, r; k-1, s)) when the degree lemma applies, else None."""
    if q.n < 3 or q.k < 3:
        return None
    if q.r >= comb(q.n, 2) or q.s >= comb(q.k, 2):
        return None
    if q.r > comb(q.n - 1, 2) or q.s > comb(q.k - 1, 2):
        return None
    return RamseyQuery(q.n - 1, q.r, q.k, q.s), RamseyQuery(q.n, q.r, q.k - 1, q.s)


def query_params(q: RamseyQuery, pmax: int) -> Dict[str, int]:
    """The parameter record of an oracle query, as stored in verdicts and cache keys."""
    return {"n": q.n, "r": q.r, "k": q.k, "s": q.s, "r_star": q.r_star, "pmax": pmax}


def _critical_witness(nodes: Iterable[Node]) -> Optional[str]:
    best: Optional[bytes] = None
    for h, _ in nodes:
        cert = canonical_certificate(complement(h))
        if best is None or cert < best:
            best = cert
    return best.decode("ascii") if best is not None else None


def _window_for(q: RamseyQuery, known: Mapping[RamseyQuery, int]) -> Optional[Tuple[int, int]]:
    subs = sub_queries(q)
    if subs is None:
        return None
    q_n, q_k = subs
    if q_n not in known or q_k not in known:
        return None
    return known[q_k], known[q_n]


def brute_generalized_ramsey(q: RamseyQuery, pmax: int = DEFAULT_PMAX, *, jobs: int = 1,
                             known: Optional[Mapping[RamseyQuery, int]] = None,
                             degree_pruning: bool = True) -> OracleVerdict:
    """The least p <= pmax such that every graph of order p satisfies a clause.

    Graphs of order below n (or k) cannot satisfy the first (or second)
    clause, so the corresponding filters pass them vacuously.

    Args:
        q: The query.
        pmax: The largest order to search.
        jobs: Worker processes.
        known: Exactly known values of other queries. When both
            R(n-1, r; k, s) and R(n, r; k-1, s) are present, searches at
            orders p >= max(n, k) discard partial graphs whose degrees cannot
            complete into the window from ``degree_prune_bounds``.
        degree_pruning: Set False to ignore ``known``.

    Returns:
        A verdict whose witness (graph6) is a graph of order value - 1
        defeating both clauses, or a verdict with value None when every order
        up to pmax has such a graph.

    Raises:
        BudgetExceeded: pmax exceeds the hard cap.
    """
    check_budget(pmax, HARD_CAP)
    chain = counterexample_chain(q)
    stats = EnumerationStats()
    window = _window_for(q, known or {}) if degree_pruning else None
    params = query_params(q, pmax)
    log.info(f"oracle R({q.key()}) up to order {pmax} ({chain})")

    value: Optional[int] = None
    last: List[Node] = []

    unpruned_until = pmax if window is None else min(pmax, max(q.n, q.k) - 1)
    for level in iter_levels(chain, unpruned_until, jobs=jobs, stats=stats):
        if not level.nodes:
            value = level.order
            break
        last = level.nodes

    if value is None and window is not None:
        r_sub_k, r_sub_n = window
        for p in range(unpruned_until + 1, pmax + 1):
            lo, hi = degree_prune_bounds(p, r_sub_k, r_sub_n)
            pruned = FilterChain(chain.filters + [DegreeWindowFilter(p, lo, hi)])
            run = EnumerationStats()
            top: List[Node] = []
            for level in iter_levels(pruned, p, jobs=jobs, stats=run):
                top = level.nodes if level.order == p else []
            stats.absorb(run)
            stats.order = p
            log.debug(f"order {p}: {len(top)} counterexamples with degrees in [{lo}, {hi}]")
            if not top:
                value = p
                break
            last = top

    stats.graphs_after_filter = len(last)
    verdict = OracleVerdict(
        quantity="generalized_ramsey",
        params=params,
        value=value,
        witness=_critical_witness(last) if value is not None else None,
        stats=stats,
    )
    if value is None:
        log.info(f"R({q.key()}) exceeds budget {pmax}")
    else:
        log.info(f"R({q.key()}) = {value}")
    return verdict


def theorem42_equality_regular(verdict: OracleVerdict, r_sub_n: int) -> bool:
    """True when the critical witness's complement is regular of degree r_sub_n - 1."""
    if verdict.witness is None:
        return False
    h = complement(graph6.decode(verdict.witness))
    return all(d == r_sub_n - 1 for d in h.degrees())


@dataclass
class TableEntry:
    """One computed value with its recursive-bound check."""

    query: RamseyQuery
    verdict: OracleVerdict
    bound: Optional[RecursiveBound] = None
    violation: bool = False
    equality: bool = False
    regular: Optional[bool] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "query": self.query.key(),
            "verdict": self.verdict.to_dict(),
            "bound": None if self.bound is None else self.bound._asdict(),
            "violation": self.violation,
            "equality": self.equality,
            "regular": self.regular,
        }


def ramsey_table(ns: Iterable[int], ks: Iterable[int], rs: Iterable[int], ss: Iterable[int],
                 pmax: int = DEFAULT_PMAX, *, jobs: int = 1) -> List[TableEntry]:
    """Compute R(n, r; k, s) over a grid and check the recursive sum bound.

    Queries are computed in increasing (n, k) so the two smaller values are
    already known when a query is reached; they then drive degree pruning and
    the check R(n,r;k,s) <= R(n-1,r;k,s) + R(n,r;k-1,s), strict when both
    summands are even. Where equality holds, the critical witness is checked
    for regularity. Invalid parameter combinations are skipped.
    """
    queries = []
    for n in sorted(set(ns)):
        for k in sorted(set(ks)):
            for r in sorted(set(rs)):
                for s in sorted(set(ss)):
                    if 1 <= r <= comb(n, 2) and 1 <= s <= comb(k, 2) and n >= 2 and k >= 2:
                        queries.append(RamseyQuery(n, r, k, s))

    known: Dict[RamseyQuery, int] = {}
    entries: List[TableEntry] = []
    for q in queries:
        verdict = brute_generalized_ramsey(q, pmax, jobs=jobs, known=known)
        entry = TableEntry(query=q, verdict=verdict)
        if verdict.value is not None:
            known[q] = verdict.value
            subs = sub_queries(q)
            if subs is not None and all(sub in known for sub in subs):
                q_n, q_k = subs
                entry.bound = ramsey_recursive_bound(known[q_n], known[q_k])
                limit = entry.bound.bound - (1 if entry.bound.strict else 0)
                entry.violation = verdict.value > limit
                entry.equality = verdict.value == entry.bound.bound
                if entry.equality:
                    entry.regular = theorem42_equality_regular(verdict, known[q_n])
                if entry.violation:
                    log.error(f"R({q.key()}) = {verdict.value} breaks the sum bound {entry.bound}")
        entries.append(entry)
    return entries
