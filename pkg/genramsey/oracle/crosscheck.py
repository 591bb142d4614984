"""An independent small-order oracle: every labeled graph, deduplicated.

All 2^C(p,2) labeled graphs of order p are generated from edge bitmasks and
collapsed by canonical certificate. This shares nothing with the augmentation
enumerator except the certificate, and the certificate itself can be checked
against ``permutation_isomorphic``, a plain search over vertex permutations.
"""

import itertools
from typing import Callable, Dict, Iterator, List, Optional

from genramsey.canonical import canonical_certificate
from genramsey.errors import BudgetExceeded
from genramsey.graph import Graph

# 2^15 labeled graphs at order 6; order 7 already has 2^21.
CROSSCHECK_MAX_ORDER = 6


def labeled_graphs(p: int) -> Iterator[Graph]:
    """Every labeled graph on vertices 0..p-1, by edge bitmask."""
    if p > CROSSCHECK_MAX_ORDER:
        raise BudgetExceeded(f"bitmask scan is limited to order {CROSSCHECK_MAX_ORDER} (got {p})")
    pairs = list(itertools.combinations(range(p), 2))
    for bits in range(1 << len(pairs)):
        adj = [0] * p
        for i, (u, v) in enumerate(pairs):
            if bits >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(p, tuple(adj))


def bitmask_classes(
    p: int, predicate: Optional[Callable[[Graph], bool]] = None
) -> Dict[bytes, Graph]:
    """One representative per isomorphism class among labeled graphs passing the predicate."""
    classes: Dict[bytes, Graph] = {}
    for g in labeled_graphs(p):
        if predicate is not None and not predicate(g):
            continue
        cert = canonical_certificate(g)
        if cert not in classes:
            classes[cert] = g
    return classes


def permutation_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test by trying every vertex bijection (small graphs only)."""
    if g.order != h.order or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    edges = set(h.edges())
    for perm in itertools.permutations(range(g.order)):
        if all(tuple(sorted((perm[u], perm[v]))) in edges for u, v in g.edges()):
            return True
    return False


def permutation_classes(graphs: List[Graph]) -> List[List[Graph]]:
    """Group graphs into isomorphism classes using ``permutation_isomorphic`` only."""
    groups: List[List[Graph]] = []
    for g in graphs:
        for group in groups:
            if permutation_isomorphic(g, group[0]):
                group.append(g)
                break
        else:
            groups.append([g])
    return groups
