"""Canonical labeling and exact isomorphism certificates.

The labeling is found by equitable partition refinement followed by a search
tree that individualizes one vertex of the first non-singleton cell at each
level. Two kinds of pruning keep the tree small on symmetric graphs:

  - twins (vertices with equal neighborhoods apart from each other) in the
    target cell are interchangeable, so only one of them is tried;
  - automorphisms found at leaves that fix the current prefix pointwise are
    used to skip vertices lying in the orbit of a vertex already tried.

Among all leaves, the one whose relabeled adjacency rows are lexicographically
largest defines the canonical form.
"""

from collections import defaultdict
from typing import List, NamedTuple, Optional, Sequence, Tuple

from genramsey import graph6
from genramsey.graph import Graph

Cells = List[List[int]]


class CanonicalLabeling(NamedTuple):
    """``perm[i]`` is the original vertex placed at canonical position ``i``."""

    perm: Tuple[int, ...]
    certificate: bytes

    @property
    def last_vertex(self) -> int:
        """The original vertex that lands at the last canonical position."""
        return self.perm[-1]


def _refine(adj: Sequence[int], cells: Cells) -> Cells:
    changed = True
    while changed:
        changed = False
        for splitter in cells:
            wmask = 0
            for w in splitter:
                wmask |= 1 << w
            refined: Cells = []
            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue
                groups = defaultdict(list)
                for v in cell:
                    groups[(adj[v] & wmask).bit_count()].append(v)
                if len(groups) == 1:
                    refined.append(cell)
                    continue
                changed = True
                refined.extend(groups[count] for count in sorted(groups))
            if changed:
                cells = refined
                break
    return cells


def _leaf_key(adj: Sequence[int], perm: Sequence[int]) -> Tuple[int, ...]:
    position = {v: i for i, v in enumerate(perm)}
    rows = []
    for v in perm:
        row = 0
        nbrs = adj[v]
        while nbrs:
            low = nbrs & -nbrs
            row |= 1 << position[low.bit_length() - 1]
            nbrs ^= low
        rows.append(row)
    return tuple(rows)


class _Search:
    def __init__(self, g: Graph) -> None:
        self.adj = g.adjacency
        self.order = g.order
        self.best_key: Optional[Tuple[int, ...]] = None
        self.best_perm: Tuple[int, ...] = ()
        self.automorphisms: List[Tuple[int, ...]] = []

    def run(self) -> Tuple[int, ...]:
        by_degree = defaultdict(list)
        for v in range(self.order):
            by_degree[self.adj[v].bit_count()].append(v)
        cells = [by_degree[d] for d in sorted(by_degree)]
        self._visit(cells, [])
        return self.best_perm

    def _visit(self, cells: Cells, prefix: List[int]) -> None:
        cells = _refine(self.adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self._leaf(tuple(c[0] for c in cells))
            return

        tried: List[int] = []
        for v in cells[target]:
            if any(self._twins(u, v) for u in tried):
                continue
            if tried and self._same_orbit(v, tried, prefix):
                continue
            tried.append(v)
            rest = [u for u in cells[target] if u != v]
            self._visit(cells[:target] + [[v], rest] + cells[target + 1 :], prefix + [v])

    def _leaf(self, perm: Tuple[int, ...]) -> None:
        key = _leaf_key(self.adj, perm)
        if self.best_key is None or key > self.best_key:
            self.best_key, self.best_perm = key, perm
        elif key == self.best_key:
            gamma = [0] * self.order
            for a, b in zip(self.best_perm, perm):
                gamma[a] = b
            self.automorphisms.append(tuple(gamma))

    def _twins(self, u: int, v: int) -> bool:
        return self.adj[u] & ~(1 << v) == self.adj[v] & ~(1 << u)

    def _same_orbit(self, v: int, tried: List[int], prefix: List[int]) -> bool:
        gens = [g for g in self.automorphisms if all(g[x] == x for x in prefix)]
        if not gens:
            return False
        parent = list(range(self.order))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in gens:
            for a, b in enumerate(gamma):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        root = find(v)
        return any(find(u) == root for u in tried)


def canonical_labeling(g: Graph) -> CanonicalLabeling:
    """Compute the canonical labeling and certificate of ``g``."""
    perm = _Search(g).run() if g.order else ()
    return CanonicalLabeling(perm, graph6.encode(g.relabel(perm)).encode("ascii"))


def canonical_certificate(g: Graph) -> bytes:
    """A byte string equal for two graphs exactly when they are isomorphic."""
    return canonical_labeling(g).certificate


def canonical_form(g: Graph) -> Graph:
    """The canonical representative of the isomorphism class of ``g``."""
    return graph6.decode(canonical_certificate(g).decode("ascii"))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.edge_count != h.edge_count:
        return False
    return canonical_certificate(g) == canonical_certificate(h)
