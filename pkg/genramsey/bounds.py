"""Edge-threshold bounds on independence numbers and sparse induced subgraphs.

Each evaluator returns a BoundResult: a graph G of order p with
``e(G) < edge_threshold`` is guaranteed either ``alpha(G) >= conclusion``
(kind ALPHA_LOWER_BOUND) or an induced n-vertex subgraph with at most
``conclusion`` edges (kind SPARSE_SUBGRAPH).

Fractional parts such as {(p-t)/3} are carried as integer residues and all
rational comparisons are cleared of their denominators first.
"""

import enum
from dataclasses import dataclass
from typing import Optional

from genramsey.closed_forms import complement_turan_gap
from genramsey.errors import DomainError


class BoundKind(enum.Enum):
    """What a bound guarantees once its edge threshold is cleared."""

    ALPHA_LOWER_BOUND = "alphaLowerBound"
    SPARSE_SUBGRAPH = "sparseSubgraph"


class CorollaryVariant(enum.Enum):
    """The t = 0, 1, 2 specializations of the residue-three alpha bound."""

    T0 = 0
    T1 = 1
    T2 = 2

    @property
    def min_order(self) -> int:
        return {0: 9, 1: 5, 2: 4}[self.value]


@dataclass(frozen=True)
class BoundResult:
    """The threshold and conclusion of one edge-threshold bound.

    Attributes:
        kind: What the conclusion bounds.
        applicable: Whether the hypotheses hold. The remaining fields carry
            meaning only when this is True.
        edge_threshold: The conclusion holds for every G with e(G) below it.
        conclusion: The guaranteed alpha lower bound, or the edge budget of
            the guaranteed sparse induced subgraph.
        subset_size: For SPARSE_SUBGRAPH bounds, the order n of that subgraph.
        alpha_conclusion: An additional alpha lower bound implied alongside a
            SPARSE_SUBGRAPH conclusion, if any.
    """

    kind: BoundKind
    applicable: bool
    edge_threshold: int
    conclusion: int
    subset_size: Optional[int] = None
    alpha_conclusion: Optional[int] = None

    def covers(self, edge_count: int) -> bool:
        """True when the bound applies to a graph with ``edge_count`` edges."""
        return self.applicable and edge_count < self.edge_threshold


def _sparse_conclusion(n: int, k: int) -> int:
    # C(n,2) - t_k(n) - 1; q(q+1) is even so the division is exact.
    q = n // k
    return q * n - q * (q + 1) * k // 2 - 1


def threshold_thm22(p: int, k: int, n: int) -> BoundResult:
    """Sparse induced subgraph guaranteed below C(p,2) - t_k(p) edges.

    Args:
        p: The order of G.
        k: The number of Turan parts.
        n: The size of the sparse induced subgraph.

    Raises:
        DomainError: Unless p >= n > k >= 1.
    """
    if not p >= n > k >= 1:
        raise DomainError(f"needs p >= n > k >= 1 (p={p}, n={n}, k={k})")
    return BoundResult(
        kind=BoundKind.SPARSE_SUBGRAPH,
        applicable=True,
        edge_threshold=complement_turan_gap(p, k),
        conclusion=_sparse_conclusion(n, k),
        subset_size=n,
    )


def threshold_cor21(p: int, k: int, n: int) -> BoundResult:
    """The k+1 <= n <= 2k case, where the sparse budget collapses to n-k-1.

    When n = k+1 the induced n-subgraph has no edges, so alpha(G) >= k+1.

    Raises:
        DomainError: Unless 2 <= k+1 <= n <= 2k and p >= n.
    """
    if not (2 <= k + 1 <= n <= 2 * k and p >= n):
        raise DomainError(f"needs 2 <= k+1 <= n <= 2k and p >= n (p={p}, n={n}, k={k})")
    return BoundResult(
        kind=BoundKind.SPARSE_SUBGRAPH,
        applicable=True,
        edge_threshold=complement_turan_gap(p, k),
        conclusion=n - k - 1,
        subset_size=n,
        alpha_conclusion=k + 1 if n == k + 1 else None,
    )


def _check_order_and_shift(p: int, t: int) -> None:
    if p < 4:
        raise DomainError(f"order must be at least 4 (p={p})")
    if t < 0:
        raise DomainError(f"shift must be nonnegative (t={t})")


def alpha_bound_cor22(p: int, t: int) -> BoundResult:
    """alpha(G) >= floor((p-t)/3) + 1 below p + 2t + 6{(p-t)/3} edges.

    Applicable iff t < p/4 - 3{(p-t)/3}, tested as 4t < p - 4c with
    c = (p-t) mod 3.
    """
    _check_order_and_shift(p, t)
    c = (p - t) % 3
    return BoundResult(
        kind=BoundKind.ALPHA_LOWER_BOUND,
        applicable=4 * t < p - 4 * c,
        edge_threshold=p + 2 * t + 2 * c,
        conclusion=(p - t) // 3 + 1,
    )


def alpha_bound_thm23(p: int, t: int) -> BoundResult:
    """alpha(G) >= floor((p+t)/3) + 1 below p - 2t + c + max(t, c) edges.

    Here c = 3{(p+t)/3} = (p+t) mod 3. Applicable iff c - p/4 < t <= p/2 + c,
    tested as 4c - p < 4t and 2t <= p + 2c.
    """
    _check_order_and_shift(p, t)
    c = (p + t) % 3
    return BoundResult(
        kind=BoundKind.ALPHA_LOWER_BOUND,
        applicable=4 * c - p < 4 * t and 2 * t <= p + 2 * c,
        edge_threshold=p - 2 * t + c + max(t, c),
        conclusion=(p + t) // 3 + 1,
    )


def alpha_bound_cor_2_3_4_5(p: int, variant: CorollaryVariant) -> BoundResult:
    """The piecewise thresholds for t = 0, 1, 2, by p mod 3.

    Raises:
        DomainError: p is below the variant's minimum order (9, 5 or 4).
    """
    if p < variant.min_order:
        raise DomainError(f"variant t={variant.value} needs p >= {variant.min_order} (p={p})")
    residue = p % 3
    if variant is CorollaryVariant.T0:
        threshold = p + 2 * residue
    elif variant is CorollaryVariant.T1:
        threshold = (p, p + 2, p - 1)[residue]
    else:
        threshold = (p, p - 2, p - 1)[residue]
    return BoundResult(
        kind=BoundKind.ALPHA_LOWER_BOUND,
        applicable=True,
        edge_threshold=threshold,
        conclusion=(p + variant.value) // 3 + 1,
    )


def alpha_bound_thm24(p: int, n: int, t: int) -> BoundResult:
    """alpha(G) >= floor((p - floor((n+4-2t)/3))/2) + 1 when 2e(G) < p+n+2-2t.

    The cleared test 2e < p+n+2-2t is equivalent to e below
    ceil((p+n)/2) + 1 - t, which is stored as the edge threshold.

    Raises:
        DomainError: Unless t >= 1, t <= n/2 + 2 and p > n + 7 - 2t.
    """
    if t < 1 or n < 1:
        raise DomainError(f"n and t must be positive (n={n}, t={t})")
    if 2 * t > n + 4:
        raise DomainError(f"needs t <= n/2 + 2 (n={n}, t={t})")
    if p <= n + 7 - 2 * t:
        raise DomainError(f"needs p > n + 7 - 2t (p={p}, n={n}, t={t})")
    return BoundResult(
        kind=BoundKind.ALPHA_LOWER_BOUND,
        applicable=True,
        edge_threshold=(p + n + 1) // 2 + 1 - t,
        conclusion=(p - (n + 4 - 2 * t) // 3) // 2 + 1,
    )


def alpha_lb_thm31(p: int, n: int, m: int) -> int:
    """alpha(G) >= p - m for every (n, m) graph of order p.

    Raises:
        DomainError: Unless p >= n >= 4 and 0 <= m <= n/2 - 1.
    """
    if not p >= n >= 4:
        raise DomainError(f"needs p >= n >= 4 (p={p}, n={n})")
    if m < 0 or 2 * m > n - 2:
        raise DomainError(f"needs 0 <= m <= n/2 - 1 (n={n}, m={m})")
    return p - m


def alpha_lb_thm32(p: int, n: int, t: int) -> int:
    """alpha(G) >= floor((p - floor((n+4-2t)/3))/2) + 1 for (n, n-t) graphs.

    Raises:
        DomainError: Unless 2 <= t <= n/2 + 2 and p >= n >= 4.
    """
    if t < 2 or 2 * t > n + 4:
        raise DomainError(f"needs 2 <= t <= n/2 + 2 (n={n}, t={t})")
    if not p >= n >= 4:
        raise DomainError(f"needs p >= n >= 4 (p={p}, n={n})")
    return (p - (n + 4 - 2 * t) // 3) // 2 + 1


def zhou_bound(n: int, m: int) -> int:
    """alpha(G) >= n - m for a graph of order n >= 4 with at most m <= n/2 edges.

    Raises:
        DomainError: Unless n >= 4 and 0 <= 2m <= n.
    """
    if n < 4 or m < 0 or 2 * m > n:
        raise DomainError(f"needs n >= 4 and 0 <= m <= n/2 (n={n}, m={m})")
    return n - m
