"""Exact integer evaluators for the Turan-type and generalized Ramsey closed forms.

Every function here is a pure function of its integer arguments. Floors and
fractional parts are taken with ``divmod`` so no value ever passes through
floating point.
"""

import enum
from dataclasses import dataclass
from math import comb
from typing import Dict, NamedTuple, Tuple

from genramsey.errors import DomainError

# The classical values R(n, k) known exactly, keyed by (n, k).
KNOWN_CLASSICAL_VALUES: Dict[Tuple[int, int], int] = {
    (3, 3): 6,
    (3, 4): 9,
    (3, 5): 14,
    (3, 6): 18,
    (3, 7): 23,
    (3, 8): 28,
    (3, 9): 36,
    (4, 4): 18,
    (4, 5): 25,
}


@dataclass(frozen=True)
class RamseyQuery:
    """Parameters of a generalized Ramsey number R(n, r; k, s).

    ``r`` follows the edge-budget convention of the definition: a graph of
    order p "hits" the first clause when some n vertices induce at most r-1
    edges. The deficiency ``r_star`` is C(n,2) - r, the edge budget of the
    complementary (n, r_star) graphs the oracle searches over.

    Raises:
        DomainError: The parameters violate 1 <= r <= C(n,2), 1 <= s <= C(k,2)
            or n, k >= 2.
    """

    n: int
    r: int
    k: int
    s: int = 1

    def __post_init__(self) -> None:
        if self.n < 2 or self.k < 2:
            raise DomainError(f"n and k must be at least 2 (n={self.n}, k={self.k})")
        if not 1 <= self.r <= comb(self.n, 2):
            raise DomainError(f"r={self.r} outside [1, C({self.n},2)]")
        if not 1 <= self.s <= comb(self.k, 2):
            raise DomainError(f"s={self.s} outside [1, C({self.k},2)]")

    @classmethod
    def from_deficiency(cls, n: int, r_star: int, k: int, s: int = 1) -> "RamseyQuery":
        """Build a query from the deficiency convention r = C(n,2) - r_star."""
        return cls(n=n, r=comb(n, 2) - r_star, k=k, s=s)

    @property
    def r_star(self) -> int:
        """The deficiency C(n,2) - r."""
        return comb(self.n, 2) - self.r

    def key(self) -> str:
        """A canonical parameter string, used for cache keys and reports."""
        return f"n={self.n},r={self.r},k={self.k},s={self.s}"


@dataclass(frozen=True)
class TuranParams:
    """The order ``p`` split into ``k`` balanced parts, with residue ``p0``."""

    k: int
    p: int
    p0: int

    @classmethod
    def of(cls, k: int, p: int) -> "TuranParams":
        if k < 1:
            raise DomainError(f"number of parts must be positive (k={k})")
        if p < 0:
            raise DomainError(f"order must be nonnegative (p={p})")
        return cls(k=k, p=p, p0=p % k)

    @property
    def part_sizes(self) -> Tuple[int, ...]:
        """Part sizes, larger parts first."""
        q = self.p // self.k
        return (q + 1,) * self.p0 + (q,) * (self.k - self.p0)


class FormulaCase(enum.Enum):
    """Which branch of the main formula is active, named after its witness."""

    MATCHING = "matching"
    TRIANGLES = "triangles"
    TRIVIAL = "trivial"


class RecursiveBound(NamedTuple):
    bound: int
    strict: bool


def turan_count(k: int, p: int) -> int:
    """Edge count t_k(p) of the balanced complete k-partite graph on p vertices.

    Evaluates (1 - 1/k)(p^2 - p0^2)/2 + (p0^2 - p0)/2 exactly. Writing
    p = kq + p0, the first term is (k-1) q (kq + 2 p0) / 2 and the product is
    always even.

    Args:
        k: The number of parts.
        p: The order.

    Returns:
        t_k(p).

    Raises:
        DomainError: k is not positive or p is negative.
    """
    params = TuranParams.of(k, p)
    q, p0 = divmod(params.p, params.k)
    half, rem = divmod((k - 1) * q * (k * q + 2 * p0), 2)
    assert rem == 0
    return half + (p0 * p0 - p0) // 2


def max_edges_clique_free(p: int, k: int) -> int:
    """ex(p; K_k) = t_{k-1}(p)."""
    if k < 2:
        raise DomainError(f"forbidden clique order must be at least 2 (k={k})")
    if p < 1:
        raise DomainError(f"order must be positive (p={p})")
    return turan_count(k - 1, p)


def complement_turan_gap(p: int, k: int) -> int:
    """C(p,2) - t_k(p), computed as s*p - s(s+1)k/2 with s = floor(p/k)."""
    if k < 1 or p < 0:
        raise DomainError(f"invalid parameters (p={p}, k={k})")
    s = p // k
    return s * p - s * (s + 1) * k // 2


def extremal_recursion_bound(e_prev: int, p: int) -> int:
    """Upper bound floor(p * ex(p-1; L) / (p-2)) on ex(p; L).

    Args:
        e_prev: The extremal count at order p - 1.
        p: The order, greater than 2.

    Raises:
        DomainError: p <= 2 or e_prev is negative.
    """
    if p <= 2:
        raise DomainError(f"recursion bound needs p > 2 (p={p})")
    if e_prev < 0:
        raise DomainError(f"extremal count must be nonnegative (e_prev={e_prev})")
    return (p * e_prev) // (p - 2)


def min_degree_lower_bound(ex_p: int, ex_prev: int) -> int:
    """Minimum degree guaranteed in an extremal graph: ex(p; L) - ex(p-1; L)."""
    return ex_p - ex_prev


def extremal_sparse(n: int, p: int) -> int:
    """e(n, n-2; p) = floor((n-2) p / (n-1)) for p >= n >= 3."""
    if n < 3 or p < n:
        raise DomainError(f"needs p >= n >= 3 (n={n}, p={p})")
    return ((n - 2) * p) // (n - 1)


def extremal_dirac(n: int, m: int, p: int) -> int:
    """e(n, C(n,2) - m; p) = t_{n-m}(p) for p >= n >= 2m >= 2."""
    if m < 1 or not p >= n >= 2 * m:
        raise DomainError(f"needs p >= n >= 2m >= 2 (n={n}, m={m}, p={p})")
    return turan_count(n - m, p)


def turan_dirac_general(n: int, p: int, k: int) -> int:
    """e(n, t_{k-1}(n); p) = t_{k-1}(p) for p >= n >= k >= 2.

    The budget m = t_{k-1}(n) is implied by (n, k); callers wanting the
    budget itself can use ``turan_count(k - 1, n)``.
    """
    if not p >= n >= k >= 2:
        raise DomainError(f"needs p >= n >= k >= 2 (n={n}, p={p}, k={k})")
    return turan_count(k - 1, p)


def _check_main_domain(n: int, r: int, k: int) -> None:
    if n < 4:
        raise DomainError(f"main formula is proven for n >= 4 (n={n})")
    if k < 2:
        raise DomainError(f"main formula needs k >= 2 (k={k})")
    if not 1 <= r <= n - 2:
        raise DomainError(f"main formula needs 1 <= r <= n-2 (n={n}, r={r})")


def formula_case(n: int, r: int, k: int) -> FormulaCase:
    """Return which construction realizes the lower bound for (n, r, k).

    The split "r <= n/2 - 1" is tested as 2r <= n - 2, so r = (n-1)/2 for odd
    n lands in the second branch.
    """
    _check_main_domain(n, r, k)
    if 2 * r <= n - 2:
        return FormulaCase.MATCHING if k + r > n else FormulaCase.TRIVIAL
    return FormulaCase.TRIANGLES if r > 2 * n - 3 * k + 2 else FormulaCase.TRIVIAL


def generalized_ramsey_closed(n: int, r: int, k: int) -> int:
    """R(n, n(n-1)/2 - r; k, 1) for n >= 4, 1 <= r <= n-2, k >= 2.

    Here ``r`` is the deficiency: the answer is the least p such that every
    (n, r) graph of order p has an independent set of size k.

    Raises:
        DomainError: Parameters outside the proven domain.
    """
    _check_main_domain(n, r, k)
    if 2 * r <= n - 2:
        return max(n, k + r)
    return max(n, 2 * k - 2 + (2 * r + 4 - n) // 3)


def corollary_r_eq_n_minus_2(n: int, k: int) -> int:
    """The main formula at r = n - 2: n if n >= 3k-4, else 2k - 2 + floor(n/3)."""
    if n < 4 or k < 2:
        raise DomainError(f"needs n >= 4 and k >= 2 (n={n}, k={k})")
    if n >= 3 * k - 4:
        return n
    return 2 * k - 2 + n // 3


def ramsey_recursive_bound(r_n_minus_1: int, r_k_minus_1: int) -> RecursiveBound:
    """Sum bound R(n,r;k,s) <= R(n-1,r;k,s) + R(n,r;k-1,s).

    When both summands are even the inequality is strict, so the caller may
    use ``bound - 1``.
    """
    return RecursiveBound(
        bound=r_n_minus_1 + r_k_minus_1,
        strict=r_n_minus_1 % 2 == 0 and r_k_minus_1 % 2 == 0,
    )


def classical_ramsey_query(n: int, k: int) -> RamseyQuery:
    """R(n, k) as the generalized number R(n, 1; k, 1)."""
    return RamseyQuery(n=n, r=1, k=k, s=1)


def bolze_harborth_to_general(m: int, n: int, s: int, t: int) -> RamseyQuery:
    """Translate r_{m,n}(s, t) into R(m, C(m,2)-s+1; n, C(n,2)-t+1).

    Raises:
        DomainError: s or t outside [1, C(m,2)] / [1, C(n,2)].
    """
    if not 1 <= s <= comb(m, 2) or not 1 <= t <= comb(n, 2):
        raise DomainError(f"invalid two-sided parameters (m={m}, n={n}, s={s}, t={t})")
    return RamseyQuery(n=m, r=comb(m, 2) - s + 1, k=n, s=comb(n, 2) - t + 1)


def known_classical_values() -> Dict[Tuple[int, int], int]:
    """Return a copy of the exactly known classical Ramsey numbers."""
    return dict(KNOWN_CLASSICAL_VALUES)
