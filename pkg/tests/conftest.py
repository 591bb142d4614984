"""Test fixtures for genramsey unit tests."""

import os

import pytest

from genramsey.graph import Graph, complete_graph, disjoint_union, empty_graph

pytest_plugins = ["genramsey.plugin"]


@pytest.fixture()
def data_dir():
    """Get the path to the test data directory."""
    return os.path.join(os.path.dirname(os.path.realpath(__file__)), "data")


@pytest.fixture()
def three_k2() -> Graph:
    """3K_2: a perfect matching on six vertices."""
    return disjoint_union([complete_graph(2)] * 3)


@pytest.fixture()
def two_k2_two_k1() -> Graph:
    """2K_2 + 2K_1."""
    return disjoint_union([complete_graph(2), complete_graph(2), empty_graph(1), empty_graph(1)])
