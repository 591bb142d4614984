"""Lower-bound witness graphs built from disjoint unions of cliques."""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from genramsey import graph6
from genramsey.closed_forms import (
    FormulaCase,
    TuranParams,
    formula_case,
    generalized_ramsey_closed,
)
from genramsey.condition import Condition, check_and_sort
from genramsey.errors import DomainError
from genramsey.graph import (
    MAX_ORDER,
    Graph,
    complement,
    complete_graph,
    disjoint_union,
    independence_number,
    is_nm_graph,
)

log = logging.getLogger("genramsey")


@dataclass(frozen=True)
class Witness:
    """A disjoint union of complete graphs claimed to certify R > order.

    Args:
        component_sizes: Clique sizes, stored in decreasing order.
        n: The subset size of the (n, r) property.
        r: The deficiency (edge budget), or None for the order-(n-1) witness
            which is vacuously (n, r) for every r.
        k: Independent sets of size k must be absent.
    """

    component_sizes: Tuple[int, ...]
    n: int
    r: Optional[int]
    k: int

    def __post_init__(self) -> None:
        if any(size < 1 for size in self.component_sizes):
            raise DomainError(f"component sizes must be positive: {self.component_sizes}")
        if sum(self.component_sizes) > MAX_ORDER:
            raise DomainError(f"witness order exceeds {MAX_ORDER}")
        object.__setattr__(
            self, "component_sizes", tuple(sorted(self.component_sizes, reverse=True))
        )

    @property
    def order(self) -> int:
        return sum(self.component_sizes)

    @property
    def label(self) -> str:
        """Compact notation such as ``K3+2K2`` (largest cliques first)."""
        counts = Counter(self.component_sizes)
        terms = []
        for size in sorted(counts, reverse=True):
            count = counts[size]
            terms.append(f"{count if count > 1 else ''}K{size}")
        return "+".join(terms) if terms else "K0"

    def realize(self) -> Graph:
        """The witness graph, numbered component by component in decreasing size."""
        return disjoint_union([complete_graph(size) for size in self.component_sizes])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "components": list(self.component_sizes),
            "order": self.order,
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "graph6": graph6.encode(self.realize()),
        }


@dataclass
class WitnessReport:
    """The outcome of verifying one witness."""

    witness: Witness
    alpha: int
    checks: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "witness": self.witness.to_dict(),
            "alpha": self.alpha,
            "passed": self.passed,
            "checks": self.checks,
        }


def witness_matching(n: int, r: int, k: int) -> Witness:
    """rK_2 + (k-r-1)K_1, of order k+r-1 and independence number k-1.

    Raises:
        DomainError: Unless 2r <= n-2 and k+r > n (which forces k > r).
    """
    if formula_case(n, r, k) is not FormulaCase.MATCHING:
        raise DomainError(f"matching witness needs 2r <= n-2 and k+r > n (n={n}, r={r}, k={k})")
    return Witness((2,) * r + (1,) * (k - r - 1), n, r, k)


def witness_triangles(n: int, r: int, k: int) -> Witness:
    """aK_3 + (k-1-a)K_2 with a = floor((2r+1-n)/3).

    Raises:
        DomainError: Unless 2r >= n-1 and r > 2n-3k+2.
    """
    if formula_case(n, r, k) is not FormulaCase.TRIANGLES:
        raise DomainError(
            f"triangle witness needs 2r >= n-1 and r > 2n-3k+2 (n={n}, r={r}, k={k})"
        )
    a = (2 * r + 1 - n) // 3
    assert 0 <= a < k - 1, f"triangle count {a} outside [0, {k - 1})"
    return Witness((3,) * a + (2,) * (k - 1 - a), n, r, k)


def witness_trivial_order(n: int, k: int, r: Optional[int] = None) -> Witness:
    """K_{n-1}: too small to hold n vertices, with alpha = 1."""
    if n < 4 or k < 2:
        raise DomainError(f"needs n >= 4 and k >= 2 (n={n}, k={k})")
    return Witness((n - 1,), n, r, k)


def turan_graph(p: int, k: int) -> Graph:
    """The balanced complete k-partite graph on p vertices.

    Built as the complement of a union of cliques on the part sizes, so it has
    exactly ``turan_count(k, p)`` edges.
    """
    parts = TuranParams.of(k, p).part_sizes
    return complement(disjoint_union([complete_graph(size) for size in parts if size]))


def best_witness(n: int, r: int, k: int) -> Witness:
    """The witness for whichever branch of the main formula is active."""
    case = formula_case(n, r, k)
    if case is FormulaCase.MATCHING:
        return witness_matching(n, r, k)
    if case is FormulaCase.TRIANGLES:
        return witness_triangles(n, r, k)
    return witness_trivial_order(n, k, r=r)


def _expected_order(w: Witness) -> int:
    if w.r is None:
        return w.n - 1
    return generalized_ramsey_closed(w.n, w.r, w.k) - 1


def verify_witness(w: Witness) -> WitnessReport:
    """Check that a witness certifies R(n, C(n,2)-r; k, 1) > order.

    The checks are:
      - order: the order equals the formula value minus one;
      - nm_graph: the graph is an (n, r) graph, or has fewer than n vertices;
      - alpha: no independent set of size k exists;
      - components: alpha equals the number of cliques.

    Failures are report entries, never exceptions.
    """
    g = w.realize()
    alpha = independence_number(g)

    conditions = [
        Condition("order", lambda: g.order == _expected_order(w)),
        Condition(
            "nm_graph",
            lambda: g.order < w.n or (w.r is not None and is_nm_graph(g, w.n, w.r)),
        ),
        Condition("alpha", lambda: alpha <= w.k - 1),
        Condition("components", lambda: alpha == len(w.component_sizes)),
    ]
    _, unmet = check_and_sort(*conditions)
    for c in unmet:
        log.error(f"witness {w.label} for (n={w.n}, r={w.r}, k={w.k}) failed check {c.name}")

    return WitnessReport(witness=w, alpha=alpha, checks=[c.to_dict() for c in conditions])
