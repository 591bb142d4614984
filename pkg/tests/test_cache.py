"""Unit tests for the genramsey.cache package."""

import json
import os

import pytest

from genramsey import cache
from genramsey.cache import ResultCache
from genramsey.errors import CacheError
from genramsey.oracle.augment import EnumerationStats
from genramsey.oracle.verdict import OracleVerdict

PARAMS = {"n": 3, "r": 1, "k": 3, "s": 1, "r_star": 2, "pmax": 7}


def make_verdict(value=6, params=None):
    return OracleVerdict(
        quantity="generalized_ramsey",
        params=dict(params or PARAMS),
        value=value,
        witness="Dhc" if value is not None else None,
        stats=EnumerationStats(order=5, graphs_visited=40, graphs_after_filter=1),
    )


def test_default_cache_dir(monkeypatch, tmp_path):
    monkeypatch.setenv(cache.CACHE_DIR_ENV, str(tmp_path))
    assert cache.default_cache_dir() == str(tmp_path)
    monkeypatch.delenv(cache.CACHE_DIR_ENV)
    assert cache.default_cache_dir().endswith(os.path.join(".cache", "genramsey"))


def test_new_cache_writes_header(tmp_path):
    c = ResultCache(str(tmp_path / "c"), version="1.2.3")
    assert len(c) == 0
    with open(c.path) as f:
        assert json.loads(f.readline()) == {"tool_version": "1.2.3"}


def test_put_and_get(result_cache):
    assert result_cache.get("generalized_ramsey", PARAMS) is None
    result_cache.put(make_verdict())
    hit = result_cache.get("generalized_ramsey", dict(reversed(list(PARAMS.items()))))
    assert hit is not None
    assert hit.value == 6
    assert hit.witness == "Dhc"
    assert hit.stats.graphs_visited == 40
    assert len(result_cache) == 1
    assert "generalized_ramsey:k=3,n=3,pmax=7,r=1,r_star=2,s=1" in result_cache


def test_exceeds_budget_round_trip(result_cache):
    params = dict(PARAMS, pmax=5)
    result_cache.put(make_verdict(None, params))
    hit = result_cache.get("generalized_ramsey", params)
    assert hit.value is None
    assert hit.exceeds_budget


def test_persistence(tmp_path):
    directory = str(tmp_path / "c")
    ResultCache(directory).put(make_verdict())
    reopened = ResultCache(directory)
    assert len(reopened) == 1
    assert reopened.get("generalized_ramsey", PARAMS).value == 6


def test_version_mismatch_invalidates(tmp_path, caplog):
    directory = str(tmp_path / "c")
    ResultCache(directory, version="0.1").put(make_verdict())
    reopened = ResultCache(directory, version="0.2")
    assert len(reopened) == 0
    assert "invalidating" in caplog.text
    with open(reopened.path) as f:
        assert json.loads(f.readline()) == {"tool_version": "0.2"}


def test_corrupt_lines_are_skipped(tmp_path, caplog):
    directory = str(tmp_path / "c")
    c = ResultCache(directory)
    c.put(make_verdict())
    with open(c.path, "a") as f:
        f.write("{not json\n")
        f.write('{"no_key": 1}\n')
        f.write("\n")
    c.put(make_verdict(params=dict(PARAMS, pmax=8)))

    reopened = ResultCache(directory)
    assert len(reopened) == 2
    assert "skipping corrupt cache line 3" in caplog.text
    assert "skipping corrupt cache line 4" in caplog.text


def test_clear(result_cache):
    result_cache.put(make_verdict())
    result_cache.clear()
    assert len(result_cache) == 0
    assert result_cache.get("generalized_ramsey", PARAMS) is None


def test_unwritable_directory(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(CacheError):
        ResultCache(str(blocker / "c"))
