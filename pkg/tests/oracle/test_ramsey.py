"""Unit tests for the genramsey.oracle.ramsey package."""

import pytest

from genramsey import graph, graph6
from genramsey.canonical import are_isomorphic
from genramsey.closed_forms import RamseyQuery, classical_ramsey_query, generalized_ramsey_closed
from genramsey.errors import BudgetExceeded
from genramsey.oracle import ramsey
from genramsey.oracle.verdict import OracleVerdict


def test_classical_r33():
    verdict = ramsey.brute_generalized_ramsey(classical_ramsey_query(3, 3), pmax=7)
    assert verdict.value == 6
    assert verdict.quantity == "generalized_ramsey"
    assert verdict.params == {"n": 3, "r": 1, "k": 3, "s": 1, "r_star": 2, "pmax": 7}
    assert are_isomorphic(graph6.decode(verdict.witness), graph.cycle_graph(5))


def test_classical_r34():
    verdict = ramsey.brute_generalized_ramsey(classical_ramsey_query(3, 4), pmax=9)
    assert verdict.value == 9
    critical = graph6.decode(verdict.witness)
    assert critical.order == 8
    # The counterexample has no independent triple and no K4.
    assert graph.independence_number(critical) <= 2
    assert graph.independence_number(graph.complement(critical)) <= 3


@pytest.mark.parametrize("n,r,k", [(4, 2, 3), (4, 1, 4), (5, 2, 3), (5, 1, 4), (5, 3, 3)])
def test_matches_closed_form(n, r, k):
    """The oracle agrees with the main formula on cells within budget."""

    q = RamseyQuery.from_deficiency(n, r, k)
    assert ramsey.brute_generalized_ramsey(q, pmax=9).value == generalized_ramsey_closed(n, r, k)


def test_deficiency_query():
    verdict = ramsey.brute_generalized_ramsey(RamseyQuery(4, 4, 3, 1), pmax=8)
    assert verdict.value == 5
    h = graph.complement(graph6.decode(verdict.witness))
    assert h.order == 4
    assert graph.is_nm_graph(h, 4, 2)
    assert graph.independence_number(h) <= 2


def test_ks_condition_with_larger_s():
    """A stronger (k, s) condition on the complement can only lower R."""

    q1 = RamseyQuery(3, 2, 4, 1)
    q2 = RamseyQuery(3, 2, 4, 2)
    v1 = ramsey.brute_generalized_ramsey(q1, pmax=8)
    v2 = ramsey.brute_generalized_ramsey(q2, pmax=8)
    assert v1.value is not None
    assert v2.value is not None
    assert v2.value <= v1.value


def test_exceeds_budget():
    verdict = ramsey.brute_generalized_ramsey(classical_ramsey_query(3, 3), pmax=5)
    assert verdict.value is None
    assert verdict.exceeds_budget
    assert verdict.witness is None
    assert verdict.to_dict()["value"] == "exceeds budget"


def test_hard_cap():
    with pytest.raises(BudgetExceeded):
        ramsey.brute_generalized_ramsey(classical_ramsey_query(3, 3), pmax=12)


def test_degree_pruning_gives_same_value():
    q = classical_ramsey_query(3, 4)
    known = {RamseyQuery(2, 1, 4, 1): 4, RamseyQuery(3, 1, 3, 1): 6}
    plain = ramsey.brute_generalized_ramsey(q, pmax=9, degree_pruning=False)
    pruned = ramsey.brute_generalized_ramsey(q, pmax=9, known=known)
    assert pruned.value == plain.value == 9


def test_degree_prune_bounds():
    assert ramsey.degree_prune_bounds(8, 6, 4) == ramsey.DegreeWindow(2, 3)
    assert ramsey.degree_prune_bounds(4, 6, 4) == (0, 3)


def test_sub_queries():
    q = RamseyQuery(3, 1, 4, 1)
    assert ramsey.sub_queries(q) == (RamseyQuery(2, 1, 4, 1), RamseyQuery(3, 1, 3, 1))
    assert ramsey.sub_queries(RamseyQuery(2, 1, 4, 1)) is None
    assert ramsey.sub_queries(RamseyQuery(3, 3, 4, 1)) is None


def test_counterexample_chain():
    assert str(ramsey.counterexample_chain(RamseyQuery(3, 1, 3, 1))) == "nm(n=3, m=2) & alpha<=2"
    assert str(ramsey.counterexample_chain(RamseyQuery(3, 1, 4, 2))) == (
        "nm(n=3, m=2) & ks(k=4, s=2)"
    )


def test_equality_regular():
    c5 = graph6.encode(graph.cycle_graph(5))
    verdict = OracleVerdict("generalized_ramsey", {}, 6, witness=c5)
    assert ramsey.theorem42_equality_regular(verdict, 3)
    assert not ramsey.theorem42_equality_regular(verdict, 4)
    assert not ramsey.theorem42_equality_regular(OracleVerdict("generalized_ramsey", {}, None), 3)


def test_ramsey_table():
    entries = ramsey.ramsey_table([2, 3], [2, 3, 4], [1], [1], pmax=9)
    values = {entry.query: entry.verdict.value for entry in entries}
    assert values[RamseyQuery(2, 1, 2, 1)] == 2
    assert values[RamseyQuery(2, 1, 4, 1)] == 4
    assert values[RamseyQuery(3, 1, 3, 1)] == 6
    assert values[RamseyQuery(3, 1, 4, 1)] == 9
    assert not any(entry.violation for entry in entries)

    by_query = {entry.query: entry for entry in entries}
    r33 = by_query[RamseyQuery(3, 1, 3, 1)]
    assert r33.equality
    assert r33.regular is True
    r34 = by_query[RamseyQuery(3, 1, 4, 1)]
    assert r34.bound.bound == 10
    assert r34.bound.strict
    assert not r34.equality
    assert r34.to_dict()["query"] == "n=3,r=1,k=4,s=1"


def defeats_both_clauses(g, q):
    """No n-set of g spans fewer than r edges and no k-set of its complement fewer than s."""
    h = graph.complement(g)
    first = g.order < q.n or graph.induced_edge_extrema(g, q.n)[0] >= q.r
    second = g.order < q.k or graph.induced_edge_extrema(h, q.k)[0] >= q.s
    return first and second


@pytest.mark.parametrize(
    "q",
    [
        RamseyQuery(3, 1, 3, 1),
        RamseyQuery(3, 2, 3, 1),
        RamseyQuery(3, 1, 3, 2),
        RamseyQuery(4, 5, 3, 1),
        RamseyQuery(4, 3, 4, 2),
        RamseyQuery(2, 1, 4, 2),
    ],
    ids=lambda q: q.key(),
)
def test_counterexample_chain_selects_complements(graph_atlas, q):
    """The chain accepts exactly the complements of graphs defeating both clauses."""

    chain = ramsey.counterexample_chain(q)
    for p in range(1, 7):
        for h in graph_atlas(p):
            assert chain.accepts(h) is defeats_both_clauses(graph.complement(h), q)


@pytest.mark.slow
def test_ramsey_table_two_sided_grid():
    """The sum bound holds across r, s in {1, 2}; equality forces a regular critical graph."""

    entries = ramsey.ramsey_table([2, 3], [2, 3, 4], [1], [1, 2], pmax=9)
    entries += ramsey.ramsey_table([2, 3, 4], [2, 3, 4], [2], [1, 2], pmax=9)
    by_query = {entry.query: entry for entry in entries}
    for entry in entries:
        assert not entry.violation, entry.to_dict()
        if entry.equality:
            assert entry.regular is True, entry.to_dict()

    values = {q: entry.verdict.value for q, entry in by_query.items()}
    assert values[RamseyQuery(2, 1, 4, 2)] == 4
    assert values[RamseyQuery(3, 1, 3, 2)] == 5
    assert values[RamseyQuery(3, 2, 3, 1)] == 5
    assert values[RamseyQuery(3, 2, 4, 1)] == 7
    assert values[RamseyQuery(3, 2, 4, 2)] == 5

    for q in (RamseyQuery(3, 1, 4, 2), RamseyQuery(4, 2, 3, 1)):
        entry = by_query[q]
        assert entry.bound.bound == 9
        assert not entry.bound.strict
        assert entry.verdict.value is not None
