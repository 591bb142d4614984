"""Isomorph-free graph generation by canonical augmentation.

Graphs are grown one vertex at a time. A child G = H + v of a parent H is
kept only when deleting G's canonically last vertex w gives a graph
isomorphic to H; children of one parent are deduplicated by certificate. So
every isomorphism class is produced exactly once, from exactly one parent
class, and independent parents can be expanded in parallel.

The canonical labeling orders vertices by nondecreasing degree, so w always
has maximum degree. Children whose new vertex is not of maximum degree are
discarded before any labeling work.
"""

import logging
import math
import time
from dataclasses import asdict, dataclass
from multiprocessing import Pool
from typing import Callable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from genramsey.canonical import canonical_certificate, canonical_labeling
from genramsey.graph import Graph, empty_graph
from genramsey.oracle import HARD_CAP, check_budget
from genramsey.oracle.filters import FilterChain, GraphFilter

log = logging.getLogger("genramsey")

Node = Tuple[Graph, bytes]


@dataclass
class EnumerationStats:
    """Counters for one enumeration run.

    Attributes:
        order: The largest order reached.
        graphs_visited: Augmentation candidates examined, over all levels.
        graphs_after_filter: Classes produced at the final order.
        elapsed: Wall-clock seconds.
        pruned_by_degree_bounds: Candidates rejected by a degree window.
    """

    order: int = 0
    graphs_visited: int = 0
    graphs_after_filter: int = 0
    elapsed: float = 0.0
    pruned_by_degree_bounds: int = 0

    def absorb(self, other: "EnumerationStats") -> None:
        """Add another run's candidate counters into this one."""
        self.graphs_visited += other.graphs_visited
        self.pruned_by_degree_bounds += other.pruned_by_degree_bounds

    def to_dict(self) -> dict:
        return asdict(self)


class Level(NamedTuple):
    order: int
    nodes: List[Node]


def _as_chain(graph_filter: Optional[object]) -> FilterChain:
    if graph_filter is None:
        return FilterChain()
    if isinstance(graph_filter, FilterChain):
        return graph_filter
    if isinstance(graph_filter, GraphFilter):
        return FilterChain([graph_filter])
    return FilterChain(graph_filter)


def children(parent: Graph, parent_cert: bytes, chain: FilterChain,
             stats: EnumerationStats) -> Iterator[Node]:
    """Yield the canonical children of one parent, each with its certificate."""
    q = parent.order
    parent_degrees = parent.degrees()
    seen = set()
    for mask in range(1 << q):
        new_degree = mask.bit_count()
        # Max degree of the child is the max over the bumped parent degrees and the new vertex.
        if any(d + (mask >> u & 1) > new_degree for u, d in enumerate(parent_degrees)):
            continue
        g = parent.add_vertex(mask)
        stats.graphs_visited += 1
        rejection = chain.first_rejection(g, q)
        if rejection is not None:
            if rejection.degree_pruning:
                stats.pruned_by_degree_bounds += 1
            continue
        labeling = canonical_labeling(g)
        if labeling.certificate in seen:
            continue
        w = labeling.last_vertex
        if w != q and canonical_certificate(g.delete_vertices([w])) != parent_cert:
            continue
        seen.add(labeling.certificate)
        yield g, labeling.certificate


def _expand(nodes: Sequence[Node], chain: FilterChain, stats: EnumerationStats) -> List[Node]:
    out: List[Node] = []
    for parent, cert in nodes:
        out.extend(children(parent, cert, chain, stats))
    return out


def _expand_worker(
    payload: Tuple[Sequence[Node], FilterChain]
) -> Tuple[List[Node], EnumerationStats]:
    nodes, chain = payload
    stats = EnumerationStats()
    return _expand(nodes, chain, stats), stats


def _chunks(nodes: Sequence[Node], jobs: int) -> List[Sequence[Node]]:
    size = max(1, math.ceil(len(nodes) / (jobs * 8)))
    return [nodes[i : i + size] for i in range(0, len(nodes), size)]


def _expand_parallel(nodes: Sequence[Node], chain: FilterChain, stats: EnumerationStats,
                     pool: Optional[Pool], jobs: int) -> Iterator[List[Node]]:
    """Expand a level, yielding children in parent order."""
    if pool is None or len(nodes) < 2:
        yield _expand(nodes, chain, stats)
        return
    payloads = [(chunk, chain) for chunk in _chunks(nodes, jobs)]
    for kids, part in pool.imap(_expand_worker, payloads):
        stats.absorb(part)
        yield kids


def root_node() -> Node:
    g = empty_graph(1)
    return g, canonical_certificate(g)


def iter_levels(graph_filter=None, max_order: int = HARD_CAP, *, jobs: int = 1,
                stats: Optional[EnumerationStats] = None,
                budget: int = HARD_CAP) -> Iterator[Level]:
    """Yield every level of the filtered augmentation tree, from order 1 up.

    Iteration stops after the first empty level, since a hereditary family
    with no graph of order p has none of any larger order.

    Args:
        graph_filter: A GraphFilter, a FilterChain, a list of filters, or None.
        max_order: The last order to produce.
        jobs: Worker processes for level expansion.
        stats: Counters to fill in; a fresh object is used when omitted.
        budget: The largest order allowed.

    Raises:
        BudgetExceeded: max_order exceeds the budget or the hard cap.
    """
    check_budget(max_order, budget)
    chain = _as_chain(graph_filter)
    stats = stats if stats is not None else EnumerationStats()
    start = time.perf_counter()

    root, cert = root_node()
    level = Level(1, [(root, cert)] if chain.accepts_extension(root, 0) else [])
    stats.order = 1
    stats.graphs_after_filter = len(level.nodes)

    pool = Pool(processes=jobs) if jobs > 1 else None
    try:
        while True:
            log.debug(f"level {level.order}: {len(level.nodes)} classes ({chain})")
            stats.elapsed = time.perf_counter() - start
            yield level
            if not level.nodes or level.order >= max_order:
                return
            nodes: List[Node] = []
            for kids in _expand_parallel(level.nodes, chain, stats, pool, jobs):
                nodes.extend(kids)
            level = Level(level.order + 1, nodes)
            stats.order = level.order
            stats.graphs_after_filter = len(nodes)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
        stats.elapsed = time.perf_counter() - start


def enumerate_nodes(p: int, graph_filter=None, *,
                    final: Optional[Callable[[Graph], bool]] = None,
                    jobs: int = 1, stats: Optional[EnumerationStats] = None,
                    budget: int = HARD_CAP) -> Iterator[Node]:
    """Like ``enumerate_graphs`` but yields ``(graph, certificate)`` pairs."""
    check_budget(p, budget)
    chain = _as_chain(graph_filter)
    stats = stats if stats is not None else EnumerationStats()
    start = time.perf_counter()
    log.info(f"enumerating order {p} ({chain}, jobs={jobs})")

    def emit(g: Graph) -> bool:
        if final is not None and not final(g):
            return False
        stats.graphs_after_filter += 1
        return True

    if p == 0:
        g = empty_graph(0)
        if emit(g):
            yield g, canonical_certificate(g)
    elif p == 1:
        root, cert = root_node()
        stats.graphs_visited += 1
        if chain.accepts_extension(root, 0) and emit(root):
            yield root, cert
    else:
        parents: List[Node] = []
        for level in iter_levels(chain, p - 1, jobs=jobs, stats=stats, budget=budget):
            parents = level.nodes
        stats.graphs_after_filter = 0
        pool = Pool(processes=jobs) if jobs > 1 and parents else None
        try:
            for kids in _expand_parallel(parents, chain, stats, pool, jobs):
                for g, cert in kids:
                    if emit(g):
                        yield g, cert
        finally:
            if pool is not None:
                pool.close()
                pool.join()

    stats.order = p
    stats.elapsed = time.perf_counter() - start
    log.info(
        f"order {p}: {stats.graphs_after_filter} classes from "
        f"{stats.graphs_visited} candidates in {stats.elapsed:.2f}s"
    )


def enumerate_graphs(p: int, graph_filter=None, *,
                     final: Optional[Callable[[Graph], bool]] = None,
                     jobs: int = 1, stats: Optional[EnumerationStats] = None,
                     budget: int = HARD_CAP) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of order p passing the filter.

    The hereditary filter is applied at every augmentation step. ``final`` is
    an optional predicate of any kind, applied only to completed graphs.
    Output order is deterministic and independent of ``jobs``.

    Args:
        p: The order.
        graph_filter: A GraphFilter, a FilterChain, a list of filters, or None.
        final: A predicate on completed graphs.
        jobs: Worker processes.
        stats: Counters to fill in.
        budget: The largest order allowed.

    Raises:
        BudgetExceeded: p exceeds the budget or the hard cap.
    """
    for g, _ in enumerate_nodes(p, graph_filter, final=final, jobs=jobs, stats=stats,
                                budget=budget):
        yield g
