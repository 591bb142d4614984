"""A compact exact-graph engine on per-vertex bitsets.

Graphs are immutable values of order at most 64. Vertex ``v``'s neighbors are
stored as an integer whose bit ``u`` is set when ``uv`` is an edge, which
turns induced-edge counting into a popcount loop.
"""

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from genramsey.errors import DomainError

MAX_ORDER = 64


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0 .. order-1``.

    Args:
        order: The number of vertices.
        adjacency: One neighbor bitset per vertex.

    Raises:
        DomainError: The order is out of range or the adjacency is not
            symmetric, has loops, or references vertices beyond the order.
    """

    order: int
    adjacency: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.order <= MAX_ORDER:
            raise DomainError(f"graph order must be in [0, {MAX_ORDER}] (got {self.order})")
        if len(self.adjacency) != self.order:
            raise DomainError(
                f"adjacency has {len(self.adjacency)} rows for order {self.order}"
            )
        full = (1 << self.order) - 1
        for v, nbrs in enumerate(self.adjacency):
            if nbrs & ~full:
                raise DomainError(f"vertex {v} has neighbors beyond order {self.order}")
            if nbrs >> v & 1:
                raise DomainError(f"vertex {v} has a self-loop")
            for u in _bits(nbrs):
                if not self.adjacency[u] >> v & 1:
                    raise DomainError(f"adjacency is not symmetric at edge {v}-{u}")

    def __str__(self) -> str:
        return f"<Graph (order: {self.order}, edges: {self.edge_count})>"

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list. Duplicate edges are merged."""
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise DomainError(f"edge {u}-{v} outside order {order}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, tuple(adj))

    @cached_property
    def edge_count(self) -> int:
        """e(G)."""
        return sum(nbrs.bit_count() for nbrs in self.adjacency) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> List[int]:
        return [nbrs.bit_count() for nbrs in self.adjacency]

    def neighbors(self, v: int) -> List[int]:
        return list(_bits(self.adjacency[v]))

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield every edge once as ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self.adjacency):
            for v in _bits(nbrs >> (u + 1) << (u + 1)):
                yield u, v

    def induced_edges(self, mask: int) -> int:
        """Number of edges induced by the vertex set ``mask``."""
        return _induced(self.adjacency, mask)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """The subgraph induced by ``vertices``, relabeled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in _bits(self.adjacency[v]):
                if u in index:
                    row |= 1 << index[u]
            adj.append(row)
        return Graph(len(vertices), tuple(adj))

    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        """G - V: remove the given vertices and all incident edges."""
        removed = set(vertices)
        return self.induced_subgraph([v for v in range(self.order) if v not in removed])

    def add_vertex(self, neighbors: int) -> "Graph":
        """Return G plus a new vertex ``order`` adjacent to the bitset ``neighbors``."""
        if neighbors & ~self.vertex_mask:
            raise DomainError("new vertex neighbors reference missing vertices")
        v = self.order
        adj = tuple(nbrs | (1 << v) if neighbors >> u & 1 else nbrs
                    for u, nbrs in enumerate(self.adjacency))
        return Graph(self.order + 1, adj + (neighbors,))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Relabel so that new vertex ``i`` is old vertex ``perm[i]``."""
        return self.induced_subgraph(perm)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _induced(adjacency: Sequence[int], mask: int) -> int:
    total = 0
    for v in _bits(mask):
        total += (adjacency[v] & mask).bit_count()
    return total // 2


# ****** constructors ******


def empty_graph(order: int) -> Graph:
    return Graph(order, (0,) * order)


def complete_graph(order: int) -> Graph:
    full = (1 << order) - 1
    return Graph(order, tuple(full & ~(1 << v) for v in range(order)))


def cycle_graph(order: int) -> Graph:
    if order < 3:
        raise DomainError(f"a cycle needs at least 3 vertices (got {order})")
    return Graph.from_edges(order, ((v, (v + 1) % order) for v in range(order)))


def path_graph(order: int) -> Graph:
    return Graph.from_edges(order, ((v, v + 1) for v in range(order - 1)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph.from_edges(leaves + 1, ((0, v) for v in range(1, leaves + 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# ****** operations ******


def complement(g: Graph) -> Graph:
    """The complement on the same vertex set."""
    full = g.vertex_mask
    return Graph(g.order, tuple(full & ~nbrs & ~(1 << v) for v, nbrs in enumerate(g.adjacency)))


def disjoint_union(components: Sequence[Graph]) -> Graph:
    """Disjoint union, vertices numbered component by component.

    Raises:
        DomainError: The total order exceeds 64.
    """
    total = sum(c.order for c in components)
    if total > MAX_ORDER:
        raise DomainError(f"disjoint union of order {total} exceeds {MAX_ORDER}")
    adj: List[int] = []
    offset = 0
    for c in components:
        adj.extend(nbrs << offset for nbrs in c.adjacency)
        offset += c.order
    return Graph(total, tuple(adj))


def independence_number(g: Graph, within: Optional[int] = None) -> int:
    """Exact alpha(G) by branch-and-bound on neighbor sets.

    Branches on a vertex of maximum degree among the remaining candidates:
    either exclude it, or include it and drop its closed neighborhood.
    Vertices of degree at most one are taken greedily, which never loses
    optimality.

    Args:
        g: The graph.
        within: Restrict the search to this vertex bitset.
    """
    adj = g.adjacency
    best = 0

    def search(cand: int, size: int) -> None:
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            pick, pick_deg, low_v = -1, -1, -1
            for v in _bits(cand):
                d = (adj[v] & cand).bit_count()
                if d <= 1:
                    low_v = v
                    break
                if d > pick_deg:
                    pick, pick_deg = v, d
            if low_v < 0:
                break
            cand &= ~(adj[low_v] | 1 << low_v)
            size += 1
        else:
            best = max(best, size)
            return
        search(cand & ~(adj[pick] | 1 << pick), size + 1)
        search(cand & ~(1 << pick), size)

    search(g.vertex_mask if within is None else within & g.vertex_mask, 0)
    return best


def _subset_masks(order: int, n: int, through: Optional[int] = None) -> Iterator[int]:
    if through is None:
        for combo in itertools.combinations(range(order), n):
            yield sum(1 << v for v in combo)
        return
    others = [v for v in range(order) if v != through]
    base = 1 << through
    for combo in itertools.combinations(others, n - 1):
        yield base | sum(1 << v for v in combo)


def induced_edge_extrema(g: Graph, n: int, through: Optional[int] = None) -> Tuple[int, int]:
    """Minimum and maximum edge counts over all induced n-vertex subgraphs.

    Args:
        g: The graph.
        n: The subset size.
        through: When given, only subsets containing this vertex are scanned.

    Raises:
        DomainError: n exceeds the order of the graph.
    """
    if not 0 <= n <= g.order:
        raise DomainError(f"subset size {n} outside [0, {g.order}]")
    if through is not None and n == 0:
        raise DomainError("no empty subset contains a vertex")
    ceiling = math.comb(n, 2)
    lo, hi = ceiling, 0
    for mask in _subset_masks(g.order, n, through):
        e = _induced(g.adjacency, mask)
        if e < lo:
            lo = e
        if e > hi:
            hi = e
        if lo == 0 and hi == ceiling:
            break
    return lo, hi


def exceeds_induced_edges(g: Graph, n: int, m: int, through: Optional[int] = None) -> bool:
    """True when some induced n-vertex subgraph (through ``through``) has more than m edges."""
    return any(_induced(g.adjacency, mask) > m for mask in _subset_masks(g.order, n, through))


def falls_below_induced_edges(g: Graph, n: int, s: int, through: Optional[int] = None) -> bool:
    """True when some induced n-vertex subgraph (through ``through``) has fewer than s edges."""
    return any(_induced(g.adjacency, mask) < s for mask in _subset_masks(g.order, n, through))


def is_nm_graph(g: Graph, n: int, m: int) -> bool:
    """True iff every induced n-vertex subgraph has at most m edges.

    Raises:
        DomainError: The graph has fewer than n vertices.
    """
    if g.order < n:
        raise DomainError(f"(n,m) property needs order >= n (order={g.order}, n={n})")
    return not exceeds_induced_edges(g, n, m)


def satisfies_ks_condition(g: Graph, k: int, s: int) -> bool:
    """True iff every induced k-vertex subgraph has at least s edges.

    Raises:
        DomainError: The graph has fewer than k vertices.
    """
    if g.order < k:
        raise DomainError(f"(k,s) condition needs order >= k (order={g.order}, k={k})")
    return not falls_below_induced_edges(g, k, s)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``math.inf`` for a forest."""
    best = math.inf
    for root in range(g.order):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in _bits(g.adjacency[u]):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
            if dist[frontier[0]] * 2 + 1 >= best:
                break
            frontier = nxt
    return best


def shortest_cycle_through(g: Graph, v: int) -> float:
    """Length of a shortest cycle containing v, or ``math.inf``."""
    rest = g.vertex_mask & ~(1 << v)
    nbrs = list(_bits(g.adjacency[v]))
    best = math.inf
    for i, a in enumerate(nbrs):
        targets = 0
        for b in nbrs[i + 1 :]:
            targets |= 1 << b
        if not targets:
            break
        # BFS from a inside G - v until some other neighbor of v is reached.
        seen = frontier = 1 << a
        dist = 0
        while frontier and dist + 2 < best:
            dist += 1
            reach = 0
            for u in _bits(frontier):
                reach |= g.adjacency[u]
            frontier = reach & rest & ~seen
            seen |= frontier
            if frontier & targets:
                best = min(best, dist + 2)
                break
    return best


def connected_components(g: Graph) -> List[int]:
    """Vertex bitsets of the connected components, in order of least vertex."""
    seen = 0
    comps = []
    for v in range(g.order):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            reach = 0
            for u in _bits(frontier):
                reach |= g.adjacency[u]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def has_tree_component(g: Graph) -> bool:
    """True iff some connected component C has e(C) = |C| - 1 (K_1 included)."""
    return any(
        _induced(g.adjacency, comp) == comp.bit_count() - 1
        for comp in connected_components(g)
    )


def is_tree(g: Graph) -> bool:
    return g.order >= 1 and len(connected_components(g)) == 1 and g.edge_count == g.order - 1


def leaves(g: Graph) -> List[int]:
    return [v for v in range(g.order) if g.degree(v) == 1]
