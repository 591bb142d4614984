"""Unit tests for the genramsey.condition package."""

import pytest

from genramsey import graph
from genramsey.closed_forms import generalized_ramsey_closed
from genramsey.condition import Condition, check_and_sort


def test_condition_init_ok():
    """Test initializing a Condition with no errors."""

    c = Condition("test", lambda x: x == "foo", "foo")
    assert c.fn is not None
    assert c.name == "test"
    assert c.args == ("foo",)
    assert c.kwargs == {}


def test_condition_init_err():
    """Test initializing a Condition where the provided fn is not callable."""

    with pytest.raises(ValueError):
        Condition("test", "not-callable")


@pytest.mark.parametrize(
    "fn,args,kwargs",
    [
        (lambda: True, (), {}),
        (graph.is_nm_graph, (graph.cycle_graph(5), 4, 3), {}),
        (graph.independence_number, (graph.cycle_graph(5),), {}),
        (graph.satisfies_ks_condition, (graph.complete_graph(4),), {"k": 2, "s": 1}),
    ],
)
def test_condition_check_true(fn, args, kwargs):
    """Test checking when the predicate returns truthy values."""

    c = Condition("test", fn, *args, **kwargs)
    assert c.check()
    assert c.last_check is True
    assert c.to_dict() == {"name": "test", "passed": True}


@pytest.mark.parametrize(
    "fn,args,kwargs",
    [
        (lambda: False, (), {}),
        (graph.is_nm_graph, (graph.complete_graph(3), 3, 2), {}),
        (graph.independence_number, (graph.empty_graph(0),), {}),
        (graph.satisfies_ks_condition, (graph.empty_graph(4),), {"k": 2, "s": 1}),
    ],
)
def test_condition_check_false(fn, args, kwargs):
    """Test checking when the predicate returns falsy values."""

    c = Condition("test", fn, *args, **kwargs)
    assert not c.check()
    assert c.to_dict() == {"name": "test", "passed": False}


def test_condition_check_domain_error():
    """A predicate raising a DomainError counts as unmet and keeps the message."""

    c = Condition("formula", lambda: generalized_ramsey_closed(4, 3, 3) == 4)
    assert not c.check()
    assert "n-2" in c.error
    assert c.to_dict()["error"] == c.error


def test_condition_check_other_errors_propagate():
    """Only ValueErrors are absorbed."""

    c = Condition("broken", lambda: {}["missing"])
    with pytest.raises(KeyError):
        c.check()


@pytest.mark.parametrize(
    "conditions,total_met,total_unmet",
    [
        ([], 0, 0),
        ([Condition("test", lambda: True)], 1, 0),
        ([Condition("test", lambda: False)], 0, 1),
        ([Condition("test", lambda: False), Condition("test", lambda: True)], 1, 1),
        ([Condition("test", lambda: False), Condition("test", lambda: False)], 0, 2),
    ],
)
def test_check_and_sort(conditions, total_met, total_unmet):
    """Test checking and sorting conditions."""

    init_len = len(conditions)
    met, unmet = check_and_sort(*conditions)

    assert len(met) == total_met
    assert len(unmet) == total_unmet
    assert len(conditions) == init_len
