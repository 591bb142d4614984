"""A pytest plugin for testing against the exhaustive graph oracle.

It adds options for the oracle budget and worker count, skips tests marked
``slow`` unless asked to run them, and provides fixtures for the cached graph
atlas, the oracle budget and a throwaway result cache.
"""

import logging
from typing import Dict, List, NamedTuple

import pytest

from genramsey import __version__, markers
from genramsey.cache import ResultCache
from genramsey.graph import Graph
from genramsey.oracle import DEFAULT_PMAX
from genramsey.oracle.augment import enumerate_graphs

log = logging.getLogger("genramsey")


# ********** pytest hooks **********


def pytest_addoption(parser):
    """Add options to pytest to configure genramsey.

    See Also:
        https://docs.pytest.org/en/latest/reference.html#_pytest.hookspec.pytest_addoption
    """
    group = parser.getgroup("genramsey", "exhaustive graph oracle support")
    group.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="run tests marked slow (acceptance-scale enumeration)",
    )
    group.addoption(
        "--genramsey-pmax",
        action="store",
        default=DEFAULT_PMAX,
        type=int,
        help="oracle budget reported by the oracle_budget fixture",
    )
    group.addoption(
        "--genramsey-jobs",
        action="store",
        default=1,
        type=int,
        help="worker processes for oracle runs in tests",
    )
    group.addoption(
        "--genramsey-log-level",
        action="store",
        default="warning",
        help="log level for the genramsey logger",
    )


def pytest_report_header(config):
    """Augment the pytest report header with genramsey info.

    See Also:
        https://docs.pytest.org/en/latest/reference.html#_pytest.hookspec.pytest_report_header
    """
    return [
        f"genramsey version: {__version__}",
        f"genramsey oracle: pmax={config.getoption('genramsey_pmax')}, "
        f"jobs={config.getoption('genramsey_jobs')}, "
        f"slow tests {'enabled' if config.getoption('run_slow') else 'skipped'}",
    ]


def pytest_configure(config):
    """Register the genramsey markers with pytest.

    See Also:
        https://docs.pytest.org/en/latest/reference.html#_pytest.hookspec.pytest_configure
    """
    markers.register(config)


def pytest_sessionstart(session):
    """Set the genramsey log level for the test session.

    See Also:
        https://docs.pytest.org/en/latest/reference.html#_pytest.hookspec.pytest_sessionstart
    """
    log_level = session.config.getoption("genramsey_log_level")
    level = logging._nameToLevel.get(log_level.upper(), logging.WARNING)
    logging.getLogger("genramsey").setLevel(level)


def pytest_collection_modifyitems(config, items):
    """Skip tests marked slow unless --run-slow was given.

    See Also:
        https://docs.pytest.org/en/latest/reference.html#collection-hooks
    """
    if config.getoption("run_slow"):
        return
    skip = pytest.mark.skip(reason="slow: use --run-slow to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


# ********** pytest fixtures **********


class GraphAtlas:
    """Isomorph-free graphs by order, enumerated once per session.

    Args:
        jobs: Worker processes for enumeration.
    """

    def __init__(self, jobs: int = 1) -> None:
        self.jobs = jobs
        self._levels: Dict[int, List[Graph]] = {}

    def __call__(self, order: int) -> List[Graph]:
        """All graphs of the given order, one per isomorphism class."""
        if order not in self._levels:
            log.info(f"graph atlas: enumerating order {order}")
            self._levels[order] = list(enumerate_graphs(order, jobs=self.jobs))
        return self._levels[order]

    def upto(self, order: int) -> List[Graph]:
        """All graphs of order 1..order."""
        return [g for p in range(1, order + 1) for g in self(p)]


class OracleBudget(NamedTuple):
    """The oracle settings a test should use."""

    pmax: int
    jobs: int


@pytest.fixture(scope="session")
def graph_atlas(request) -> GraphAtlas:
    """Get the session-wide ``GraphAtlas``."""
    return GraphAtlas(jobs=request.config.getoption("genramsey_jobs"))


@pytest.fixture
def oracle_budget(request) -> OracleBudget:
    """Get the oracle budget for a test.

    The ``budget`` marker takes precedence over the --genramsey-pmax option.
    """
    pmax = markers.budget_from_marker(request.node)
    if pmax is None:
        pmax = request.config.getoption("genramsey_pmax")
    return OracleBudget(pmax=pmax, jobs=request.config.getoption("genramsey_jobs"))


@pytest.fixture
def result_cache(tmp_path) -> ResultCache:
    """Get a ``ResultCache`` in a temporary directory."""
    return ResultCache(str(tmp_path / "cache"))
