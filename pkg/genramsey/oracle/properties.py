"""Exhaustive checks of the structural lemmas and the edge-threshold bounds.

Every check returns a record with the number of cases examined and the
counterexamples found (as graph6), so a sweep can report exact counts.
"""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from genramsey import bounds, graph6
from genramsey.bounds import BoundKind, BoundResult, CorollaryVariant
from genramsey.closed_forms import extremal_recursion_bound, min_degree_lower_bound
from genramsey.errors import DomainError
from genramsey.graph import (
    Graph,
    has_tree_component,
    independence_number,
    induced_edge_extrema,
    is_tree,
    leaves,
)
from genramsey.oracle import HARD_CAP
from genramsey.oracle.augment import enumerate_graphs, enumerate_nodes
from genramsey.oracle.extremal import brute_extremal_e
from genramsey.oracle.filters import EdgeCapFilter, NMFilter

log = logging.getLogger("genramsey")


@dataclass
class PropertyCheck:
    """The outcome of one exhaustive property check."""

    name: str
    params: Dict[str, int]
    checked: int = 0
    counterexamples: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def record(self, ok: bool, g: Optional[Graph] = None) -> None:
        self.checked += 1
        if not ok:
            self.counterexamples.append(graph6.encode(g) if g is not None else "")
            log.error(f"{self.name} {self.params} fails on {self.counterexamples[-1]!r}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "params": dict(self.params),
            "checked": self.checked,
            "passed": self.passed,
            "counterexamples": list(self.counterexamples),
        }


# ****** structural lemmas ******


def check_lemma31(n: int, m: int, *, jobs: int = 1, budget: int = HARD_CAP) -> PropertyCheck:
    """e(n, m; n+1) <= m + 1 for m <= n - 2."""
    if m > n - 2:
        raise DomainError(f"needs m <= n - 2 (n={n}, m={m})")
    check = PropertyCheck("edges_after_one_more_vertex", {"n": n, "m": m})
    verdict = brute_extremal_e(n, m, n + 1, jobs=jobs, budget=budget)
    check.checked = verdict.stats.graphs_after_filter
    if verdict.value is not None and verdict.value > m + 1:
        check.counterexamples.append(verdict.witness or "")
    return check


def check_lemma32(n: int, m: int, p: int, *, jobs: int = 1,
                  budget: int = HARD_CAP) -> PropertyCheck:
    """Every (n, m) graph of order p >= n >= m + 2 has a tree component."""
    if not p >= n >= m + 2:
        raise DomainError(f"needs p >= n >= m + 2 (n={n}, m={m}, p={p})")
    check = PropertyCheck("tree_component", {"n": n, "m": m, "p": p})
    for g in enumerate_graphs(p, NMFilter(n, m), jobs=jobs, budget=budget):
        check.record(has_tree_component(g), g)
    return check


def leaf_pair_drops_alpha(tree: Graph) -> bool:
    """Some leaf u with neighbor v has alpha(T) > alpha(T - {u, v})."""
    alpha = independence_number(tree)
    for u in leaves(tree):
        v = tree.neighbors(u)[0]
        if independence_number(tree.delete_vertices([u, v])) < alpha:
            return True
    return False


def check_lemma33(order: int, *, jobs: int = 1, budget: int = HARD_CAP) -> PropertyCheck:
    """Leaf-pair deletion lowers alpha for every tree of the given order >= 3."""
    if order < 3:
        raise DomainError(f"trees need at least 3 vertices here (order={order})")
    check = PropertyCheck("leaf_pair_deletion", {"order": order})
    for g in enumerate_graphs(order, EdgeCapFilter(order - 1), final=is_tree,
                              jobs=jobs, budget=budget):
        check.record(leaf_pair_drops_alpha(g), g)
    return check


def check_min_degree_lemma(n: int, m: int, p: int, *, jobs: int = 1,
                           budget: int = HARD_CAP) -> PropertyCheck:
    """Every maximizer of e over (n, m) graphs of order p has min degree >= e_p - e_{p-1}."""
    if p <= n:
        raise DomainError(f"needs p > n (n={n}, p={p})")
    check = PropertyCheck("extremal_min_degree", {"n": n, "m": m, "p": p})
    prev = brute_extremal_e(n, m, p - 1, jobs=jobs, budget=budget).value
    graphs = list(enumerate_graphs(p, NMFilter(n, m), jobs=jobs, budget=budget))
    top = max(g.edge_count for g in graphs)
    floor = min_degree_lower_bound(top, prev)
    for g in graphs:
        if g.edge_count == top:
            check.record(min(g.degrees()) >= floor, g)
    return check


def check_recursion_bound(n: int, m: int, p: int, *, jobs: int = 1,
                          budget: int = HARD_CAP) -> PropertyCheck:
    """e(n, m; p) <= floor(p e(n, m; p-1) / (p-2))."""
    if p <= max(n, 2):
        raise DomainError(f"needs p > n and p > 2 (n={n}, p={p})")
    check = PropertyCheck("extremal_recursion", {"n": n, "m": m, "p": p})
    prev = brute_extremal_e(n, m, p - 1, jobs=jobs, budget=budget)
    cur = brute_extremal_e(n, m, p, jobs=jobs, budget=budget)
    check.checked = 1
    if cur.value > extremal_recursion_bound(prev.value, p):
        check.counterexamples.append(cur.witness or "")
    return check


def check_composition(n: int, r: int, m: int, p: int, *, jobs: int = 1,
                      budget: int = HARD_CAP) -> PropertyCheck:
    """e(n, r; p) <= e(m, e(n, r; m); p) for n <= m <= p."""
    if not n <= m <= p:
        raise DomainError(f"needs n <= m <= p (n={n}, m={m}, p={p})")
    check = PropertyCheck("extremal_composition", {"n": n, "r": r, "m": m, "p": p})
    inner = brute_extremal_e(n, r, m, jobs=jobs, budget=budget).value
    lhs = brute_extremal_e(n, r, p, jobs=jobs, budget=budget)
    rhs = brute_extremal_e(m, inner, p, jobs=jobs, budget=budget).value
    check.checked = 1
    if lhs.value > rhs:
        check.counterexamples.append(lhs.witness or "")
    return check


# ****** bound soundness ******


@dataclass(frozen=True)
class BoundInstance:
    """One bound evaluated at one order.

    Edge-threshold instances carry ``result``. Structural instances instead
    require the graph to be an (n, m) graph (``nm``) and then guarantee
    ``alpha >= alpha_floor``.
    """

    name: str
    params: Tuple[Tuple[str, int], ...]
    result: Optional[BoundResult] = None
    nm: Optional[Tuple[int, int]] = None
    alpha_floor: int = 0

    @property
    def max_edges(self) -> int:
        """The largest edge count this instance can apply to."""
        if self.result is not None:
            return self.result.edge_threshold - 1
        return comb(self.params_dict()["p"], 2)

    def params_dict(self) -> Dict[str, int]:
        return dict(self.params)


def _edge_instance(name: str, result: BoundResult, **params: int) -> Optional[BoundInstance]:
    if not result.applicable:
        return None
    return BoundInstance(name, tuple(sorted(params.items())), result=result)


def bound_instances(p: int, *, structural: bool = True) -> List[BoundInstance]:
    """Every bound instance whose hypotheses make sense for graphs of order p."""
    out: List[Optional[BoundInstance]] = []
    for n in range(2, p + 1):
        for k in range(1, n):
            out.append(_edge_instance("thm22", bounds.threshold_thm22(p, k, n), p=p, k=k, n=n))
            if n <= 2 * k:
                out.append(_edge_instance("cor21", bounds.threshold_cor21(p, k, n), p=p, k=k, n=n))
    if p >= 4:
        for t in range(0, p + 1):
            out.append(_edge_instance("cor22", bounds.alpha_bound_cor22(p, t), p=p, t=t))
            out.append(_edge_instance("thm23", bounds.alpha_bound_thm23(p, t), p=p, t=t))
        for variant in CorollaryVariant:
            if p >= variant.min_order:
                result = bounds.alpha_bound_cor_2_3_4_5(p, variant)
                out.append(_edge_instance("cor_2_3_4_5", result, p=p, t=variant.value))
        for m in range(0, p // 2 + 1):
            zhou = BoundResult(BoundKind.ALPHA_LOWER_BOUND, True, m + 1, bounds.zhou_bound(p, m))
            out.append(_edge_instance("zhou", zhou, n=p, m=m))
    for n in range(1, p + 1):
        for t in range(1, (n + 4) // 2 + 1):
            if p > n + 7 - 2 * t:
                result = bounds.alpha_bound_thm24(p, n, t)
                out.append(_edge_instance("thm24", result, p=p, n=n, t=t))
    if structural:
        for n in range(4, p + 1):
            for m in range(0, (n - 2) // 2 + 1):
                out.append(BoundInstance("thm31", (("m", m), ("n", n), ("p", p)), nm=(n, m),
                                         alpha_floor=bounds.alpha_lb_thm31(p, n, m)))
            for t in range(2, (n + 4) // 2 + 1):
                out.append(BoundInstance("thm32", (("n", n), ("p", p), ("t", t)), nm=(n, n - t),
                                         alpha_floor=bounds.alpha_lb_thm32(p, n, t)))
    return [inst for inst in out if inst is not None]


def nm_bound_instances(n: int, m: int) -> Callable[[int], List[BoundInstance]]:
    """The structural alpha bounds that apply to (n, m) graphs, by order.

    Every graph a sweep cell produces is an (n, m) graph for the cell's own
    (n, m); these are the only instances that cell needs.

    Returns:
        A callable taking an order p, for use as ``check_bounds(instances_for=...)``.
    """

    def instances(p: int) -> List[BoundInstance]:
        out: List[BoundInstance] = []
        if n < 4 or p < n:
            return out
        if 2 * m <= n - 2:
            out.append(BoundInstance("thm31", (("m", m), ("n", n), ("p", p)), nm=(n, m),
                                     alpha_floor=bounds.alpha_lb_thm31(p, n, m)))
        t = n - m
        if 2 <= t and 2 * t <= n + 4:
            out.append(BoundInstance("thm32", (("n", n), ("p", p), ("t", t)), nm=(n, m),
                                     alpha_floor=bounds.alpha_lb_thm32(p, n, t)))
        return out

    return instances


@dataclass
class SoundnessReport:
    """Counts from a bound soundness pass."""

    graphs_checked: int = 0
    pairs_checked: int = 0
    per_bound: Dict[str, int] = field(default_factory=dict)
    violations: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "SoundnessReport") -> None:
        self.graphs_checked += other.graphs_checked
        self.pairs_checked += other.pairs_checked
        for name, count in other.per_bound.items():
            self.per_bound[name] = self.per_bound.get(name, 0) + count
        self.violations.extend(other.violations)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "graphs_checked": self.graphs_checked,
            "pairs_checked": self.pairs_checked,
            "per_bound": dict(sorted(self.per_bound.items())),
            "violations": list(self.violations),
            "passed": self.passed,
        }


class _GraphFacts:
    """Lazily computed quantities of one graph, shared by all instances."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        self.edges = g.edge_count
        self.alpha = independence_number(g)
        self._extrema: Dict[int, Tuple[int, int]] = {}

    def extrema(self, n: int) -> Tuple[int, int]:
        if n not in self._extrema:
            self._extrema[n] = induced_edge_extrema(self.g, n)
        return self._extrema[n]


def instance_verdict(inst: BoundInstance, facts: _GraphFacts) -> Optional[bool]:
    """None when the instance does not apply to the graph, else whether it holds."""
    if inst.result is not None:
        result = inst.result
        if not result.covers(facts.edges):
            return None
        if result.kind is BoundKind.ALPHA_LOWER_BOUND:
            return facts.alpha >= result.conclusion
        ok = facts.extrema(result.subset_size)[0] <= result.conclusion
        if result.alpha_conclusion is not None:
            ok = ok and facts.alpha >= result.alpha_conclusion
        return ok
    n, m = inst.nm
    if facts.extrema(n)[1] > m:
        return None
    return facts.alpha >= inst.alpha_floor


def check_bounds(graphs: Iterable[Graph], instances_for: Callable[[int], List[BoundInstance]]
                 = bound_instances) -> SoundnessReport:
    """Check every applicable (graph, bound instance) pair."""
    report = SoundnessReport()
    cache: Dict[int, List[BoundInstance]] = {}
    for g in graphs:
        if g.order not in cache:
            cache[g.order] = instances_for(g.order)
        facts = _GraphFacts(g)
        report.graphs_checked += 1
        for inst in cache[g.order]:
            holds = instance_verdict(inst, facts)
            if holds is None:
                continue
            report.pairs_checked += 1
            report.per_bound[inst.name] = report.per_bound.get(inst.name, 0) + 1
            if not holds:
                report.violations.append(
                    {"bound": inst.name, "params": inst.params_dict(), "graph6": graph6.encode(g)}
                )
                log.error(f"bound {inst.name} {inst.params_dict()} fails on {graph6.encode(g)!r}")
    return report


def bound_soundness(max_order: int = 8, *, extra_order: Optional[int] = None,
                    extra_edge_cap: Optional[int] = None, jobs: int = 1,
                    budget: int = HARD_CAP) -> SoundnessReport:
    """Soundness pass over all graphs of order 1..max_order.

    With ``extra_order``, graphs of that order with at most ``extra_edge_cap``
    edges are checked too, against the edge-threshold instances the cap
    fully covers.
    """
    report = SoundnessReport()
    for p in range(1, max_order + 1):
        report.merge(check_bounds(enumerate_graphs(p, jobs=jobs, budget=budget)))
    if extra_order is not None:
        cap = extra_edge_cap if extra_edge_cap is not None else comb(extra_order, 2)

        def covered(order: int) -> List[BoundInstance]:
            return [inst for inst in bound_instances(order, structural=False)
                    if inst.max_edges <= cap]

        graphs = enumerate_graphs(extra_order, EdgeCapFilter(cap), jobs=jobs, budget=budget)
        report.merge(check_bounds(graphs, covered))
    log.info(
        f"bound soundness: {report.pairs_checked} pairs over {report.graphs_checked} graphs, "
        f"{len(report.violations)} violations"
    )
    return report
