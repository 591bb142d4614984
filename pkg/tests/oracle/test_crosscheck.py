"""Cross-checks of the augmentation enumerator against the bitmask scan."""

import itertools

import pytest

from genramsey import graph
from genramsey.canonical import canonical_certificate
from genramsey.errors import BudgetExceeded
from genramsey.oracle import crosscheck
from genramsey.oracle.augment import enumerate_graphs
from genramsey.oracle.filters import AlphaBelowFilter, FilterChain, NMFilter


@pytest.mark.parametrize(
    "p",
    [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)],
)
def test_unfiltered_classes_agree(p):
    expected = set(crosscheck.bitmask_classes(p))
    assert {canonical_certificate(g) for g in enumerate_graphs(p)} == expected


@pytest.mark.parametrize("n,m,k", [(3, 2, 3), (4, 3, 3), (4, 4, 4), (3, 1, 4)])
def test_filtered_classes_agree(n, m, k):
    """The hereditary filter chain selects the same classes as the direct predicate."""

    def predicate(g):
        return graph.is_nm_graph(g, n, m) and graph.independence_number(g) <= k - 1

    chain = FilterChain([NMFilter(n, m), AlphaBelowFilter(k)])
    for p in range(max(n, k), 6):
        expected = set(crosscheck.bitmask_classes(p, predicate))
        assert {canonical_certificate(g) for g in enumerate_graphs(p, chain)} == expected


def test_certificates_agree_with_permutation_search():
    """Certificates split the labeled order-4 graphs exactly as brute-force isomorphism does."""

    labeled = list(crosscheck.labeled_graphs(4))
    assert len(labeled) == 64
    groups = crosscheck.permutation_classes(labeled)
    assert len(groups) == 11
    for group in groups:
        assert len({canonical_certificate(g) for g in group}) == 1
    assert len({canonical_certificate(group[0]) for group in groups}) == 11


@pytest.mark.parametrize(
    "p,classes",
    [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), pytest.param(6, 156, marks=pytest.mark.slow)],
)
def test_certificate_classes_match_permutation_search(p, classes):
    """Distinct certificates are never isomorphic, and equal ones always are."""

    reps = crosscheck.bitmask_classes(p)
    assert len(reps) == classes
    for a, b in itertools.combinations(reps.values(), 2):
        assert not crosscheck.permutation_isomorphic(a, b)
    for g in crosscheck.labeled_graphs(p):
        assert crosscheck.permutation_isomorphic(g, reps[canonical_certificate(g)])


def test_permutation_isomorphic():
    c5 = graph.cycle_graph(5)
    assert crosscheck.permutation_isomorphic(c5, graph.complement(c5))
    assert not crosscheck.permutation_isomorphic(c5, graph.path_graph(5))
    assert not crosscheck.permutation_isomorphic(
        graph.disjoint_union([graph.complete_graph(3), graph.complete_graph(3)]),
        graph.cycle_graph(6),
    )


def test_bitmask_scan_limit():
    with pytest.raises(BudgetExceeded):
        list(crosscheck.labeled_graphs(crosscheck.CROSSCHECK_MAX_ORDER + 1))
