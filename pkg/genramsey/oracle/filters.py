"""Induced-hereditary graph filters for the isomorph-free enumerator.

Every filter here is closed under vertex deletion: if G passes, so does every
induced subgraph of G. That is what lets the enumerator apply them at every
augmentation step. ``accepts_extension(g, v)`` may assume ``g - v`` passes and
only examines what the new vertex ``v`` can break.
"""

from typing import Iterable, List, Optional

from genramsey.graph import (
    Graph,
    exceeds_induced_edges,
    falls_below_induced_edges,
    independence_number,
    shortest_cycle_through,
)


class GraphFilter:
    """Base class for hereditary filters. Subclasses override ``accepts_extension``."""

    #: Rejections by this filter are reported as degree-bound pruning.
    degree_pruning = False

    def accepts_extension(self, g: Graph, v: int) -> bool:
        raise NotImplementedError

    def accepts(self, g: Graph) -> bool:
        """Check the whole graph by adding its vertices one at a time."""
        for v in range(g.order):
            if not self.accepts_extension(g.induced_subgraph(range(v + 1)), v):
                return False
        return True

    def describe(self) -> str:
        return type(self).__name__


class NMFilter(GraphFilter):
    """(n, m) graphs: every n-subset induces at most m edges.

    Graphs with fewer than n vertices pass vacuously.
    """

    def __init__(self, n: int, m: int) -> None:
        self.n = n
        self.m = m

    def accepts_extension(self, g: Graph, v: int) -> bool:
        if g.order < self.n:
            return True
        return not exceeds_induced_edges(g, self.n, self.m, through=v)

    def describe(self) -> str:
        return f"nm(n={self.n}, m={self.m})"


class KSConditionFilter(GraphFilter):
    """The (k, s) condition: every k-subset induces at least s edges.

    Graphs with fewer than k vertices pass vacuously.
    """

    def __init__(self, k: int, s: int) -> None:
        self.k = k
        self.s = s

    def accepts_extension(self, g: Graph, v: int) -> bool:
        if g.order < self.k:
            return True
        return not falls_below_induced_edges(g, self.k, self.s, through=v)

    def describe(self) -> str:
        return f"ks(k={self.k}, s={self.s})"


class AlphaBelowFilter(GraphFilter):
    """alpha(G) <= k - 1, the (k, 1) condition tested as an independence bound."""

    def __init__(self, k: int) -> None:
        self.k = k

    def accepts_extension(self, g: Graph, v: int) -> bool:
        # Only independent sets through v are new.
        outside = g.vertex_mask & ~g.adjacency[v] & ~(1 << v)
        return 1 + independence_number(g, within=outside) <= self.k - 1

    def describe(self) -> str:
        return f"alpha<={self.k - 1}"


class GirthFilter(GraphFilter):
    """No cycle of length at most n (girth > n)."""

    def __init__(self, n: int) -> None:
        self.n = n

    def accepts_extension(self, g: Graph, v: int) -> bool:
        return shortest_cycle_through(g, v) > self.n

    def describe(self) -> str:
        return f"girth>{self.n}"


class EdgeCapFilter(GraphFilter):
    """At most ``max_edges`` edges."""

    def __init__(self, max_edges: int) -> None:
        self.max_edges = max_edges

    def accepts_extension(self, g: Graph, v: int) -> bool:
        return g.edge_count <= self.max_edges

    def describe(self) -> str:
        return f"edges<={self.max_edges}"


class DegreeWindowFilter(GraphFilter):
    """Partial graphs that can still complete to degrees within [lo, hi].

    A partial graph of order q, on its way to ``target_order``, passes when no
    degree exceeds ``hi`` and every vertex can still reach ``lo`` with the
    ``target_order - q`` vertices yet to come.
    """

    degree_pruning = True

    def __init__(self, target_order: int, lo: int, hi: int) -> None:
        self.target_order = target_order
        self.lo = lo
        self.hi = hi

    def accepts_extension(self, g: Graph, v: int) -> bool:
        slack = self.target_order - g.order
        return all(self.lo <= d + slack and d <= self.hi for d in g.degrees())

    def describe(self) -> str:
        return f"degree[{self.lo},{self.hi}]@{self.target_order}"


class FilterChain:
    """A conjunction of hereditary filters, checked in order."""

    def __init__(self, filters: Optional[Iterable[GraphFilter]] = None) -> None:
        self.filters: List[GraphFilter] = list(filters or [])

    def __str__(self) -> str:
        return " & ".join(f.describe() for f in self.filters) or "all"

    def first_rejection(self, g: Graph, v: int) -> Optional[GraphFilter]:
        """The first filter rejecting the new vertex ``v`` of ``g``, or None."""
        for f in self.filters:
            if not f.accepts_extension(g, v):
                return f
        return None

    def accepts_extension(self, g: Graph, v: int) -> bool:
        return self.first_rejection(g, v) is None

    def accepts(self, g: Graph) -> bool:
        return all(f.accepts(g) for f in self.filters)
