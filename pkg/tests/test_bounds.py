"""Unit tests for the genramsey.bounds package."""

import pytest

from genramsey import bounds
from genramsey.bounds import BoundKind, CorollaryVariant
from genramsey.errors import DomainError


@pytest.mark.parametrize(
    "p,k,n,threshold,conclusion",
    [
        (9, 3, 4, 9, 0),
        (6, 3, 6, 3, 2),
        (4, 1, 4, 6, 5),
    ],
)
def test_threshold_thm22(p, k, n, threshold, conclusion):
    result = bounds.threshold_thm22(p, k, n)
    assert result.kind is BoundKind.SPARSE_SUBGRAPH
    assert result.applicable
    assert result.edge_threshold == threshold
    assert result.conclusion == conclusion
    assert result.subset_size == n


@pytest.mark.parametrize("p,k,n", [(5, 3, 6), (6, 4, 4), (6, 0, 3)])
def test_threshold_thm22_domain(p, k, n):
    with pytest.raises(DomainError):
        bounds.threshold_thm22(p, k, n)


def test_threshold_cor21_matches_thm22():
    """For k+1 <= n <= 2k the general budget reduces to n-k-1."""

    for k in range(1, 6):
        for n in range(k + 1, 2 * k + 1):
            for p in range(n, 12):
                special = bounds.threshold_cor21(p, k, n)
                general = bounds.threshold_thm22(p, k, n)
                assert special.conclusion == general.conclusion == n - k - 1
                assert special.edge_threshold == general.edge_threshold


def test_threshold_cor21_alpha_conclusion():
    assert bounds.threshold_cor21(7, 3, 4).alpha_conclusion == 4
    assert bounds.threshold_cor21(7, 3, 5).alpha_conclusion is None
    with pytest.raises(DomainError):
        bounds.threshold_cor21(9, 2, 5)


@pytest.mark.parametrize(
    "p,t,applicable,threshold,conclusion",
    [
        (9, 0, True, 9, 4),
        (8, 0, False, None, None),
        (13, 1, True, 15, 5),
    ],
)
def test_alpha_bound_cor22(p, t, applicable, threshold, conclusion):
    result = bounds.alpha_bound_cor22(p, t)
    assert result.kind is BoundKind.ALPHA_LOWER_BOUND
    assert result.applicable is applicable
    if applicable:
        assert result.edge_threshold == threshold
        assert result.conclusion == conclusion


@pytest.mark.parametrize(
    "p,t,threshold,conclusion",
    [
        (9, 0, 9, 4),
        (7, 1, 9, 3),
        (5, 2, 4, 3),
    ],
)
def test_alpha_bound_thm23(p, t, threshold, conclusion):
    result = bounds.alpha_bound_thm23(p, t)
    assert result.applicable
    assert result.edge_threshold == threshold
    assert result.conclusion == conclusion


@pytest.mark.parametrize("p,t", [(3, 0), (9, -1)])
def test_alpha_bound_domain(p, t):
    with pytest.raises(DomainError):
        bounds.alpha_bound_thm23(p, t)
    with pytest.raises(DomainError):
        bounds.alpha_bound_cor22(p, t)


def test_alpha_bound_thm23_not_applicable():
    """t above p/2 + c fails the upper applicability test."""

    assert not bounds.alpha_bound_thm23(6, 6).applicable


@pytest.mark.parametrize(
    "p,variant,threshold,conclusion",
    [
        (10, CorollaryVariant.T0, 12, 4),
        (7, CorollaryVariant.T1, 9, 3),
        (6, CorollaryVariant.T2, 6, 3),
    ],
)
def test_alpha_bound_cor_2_3_4_5(p, variant, threshold, conclusion):
    result = bounds.alpha_bound_cor_2_3_4_5(p, variant)
    assert result.edge_threshold == threshold
    assert result.conclusion == conclusion


@pytest.mark.parametrize(
    "p,variant",
    [(8, CorollaryVariant.T0), (4, CorollaryVariant.T1), (3, CorollaryVariant.T2)],
)
def test_alpha_bound_cor_2_3_4_5_domain(p, variant):
    with pytest.raises(DomainError):
        bounds.alpha_bound_cor_2_3_4_5(p, variant)


def test_piecewise_thresholds_agree_with_general_form():
    """The piecewise t = 0, 1, 2 thresholds equal the general form wherever it applies."""

    for variant in CorollaryVariant:
        for p in range(variant.min_order, 101):
            general = bounds.alpha_bound_thm23(p, variant.value)
            if not general.applicable:
                continue
            special = bounds.alpha_bound_cor_2_3_4_5(p, variant)
            assert special.edge_threshold == general.edge_threshold, (p, variant)
            assert special.conclusion == general.conclusion, (p, variant)


@pytest.mark.parametrize(
    "p,n,t,threshold,conclusion",
    [
        (7, 5, 3, 4, 4),
        (8, 6, 4, 4, 5),
        (10, 4, 4, 4, 6),
    ],
)
def test_alpha_bound_thm24(p, n, t, threshold, conclusion):
    result = bounds.alpha_bound_thm24(p, n, t)
    assert result.edge_threshold == threshold
    assert result.conclusion == conclusion


def test_alpha_bound_thm24_threshold_is_cleared_inequality():
    """e below the threshold iff 2e < p + n + 2 - 2t."""

    for p in range(8, 20):
        for n in range(1, 10):
            for t in range(1, (n + 4) // 2 + 1):
                if p <= n + 7 - 2 * t:
                    continue
                threshold = bounds.alpha_bound_thm24(p, n, t).edge_threshold
                for e in range(0, p + n + 4):
                    assert (e < threshold) == (2 * e < p + n + 2 - 2 * t)


@pytest.mark.parametrize("p,n,t", [(20, 5, 0), (20, 4, 5), (6, 5, 3)])
def test_alpha_bound_thm24_domain(p, n, t):
    with pytest.raises(DomainError):
        bounds.alpha_bound_thm24(p, n, t)


def test_covers():
    result = bounds.alpha_bound_thm23(9, 0)
    assert result.covers(8)
    assert not result.covers(9)
    assert not bounds.alpha_bound_cor22(8, 0).covers(0)


@pytest.mark.parametrize("p,n,m,expected", [(8, 6, 2, 6), (4, 4, 1, 3), (10, 10, 4, 6)])
def test_alpha_lb_thm31(p, n, m, expected):
    assert bounds.alpha_lb_thm31(p, n, m) == expected


@pytest.mark.parametrize("p,n,m", [(8, 6, 3), (3, 3, 0), (5, 6, 1), (6, 6, -1)])
def test_alpha_lb_thm31_domain(p, n, m):
    with pytest.raises(DomainError):
        bounds.alpha_lb_thm31(p, n, m)


@pytest.mark.parametrize("p,n,t,expected", [(6, 5, 3, 3), (4, 4, 2, 2), (7, 6, 4, 4)])
def test_alpha_lb_thm32(p, n, t, expected):
    assert bounds.alpha_lb_thm32(p, n, t) == expected


@pytest.mark.parametrize("p,n,t", [(6, 5, 1), (6, 4, 5), (4, 5, 2)])
def test_alpha_lb_thm32_domain(p, n, t):
    with pytest.raises(DomainError):
        bounds.alpha_lb_thm32(p, n, t)


def test_zhou_bound():
    assert bounds.zhou_bound(4, 2) == 2
    assert bounds.zhou_bound(9, 0) == 9
    with pytest.raises(DomainError):
        bounds.zhou_bound(4, 3)
    with pytest.raises(DomainError):
        bounds.zhou_bound(3, 1)
