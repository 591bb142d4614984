"""Unit tests for the genramsey.utils package."""

import pytest

from genramsey import utils


@pytest.mark.parametrize(
    "value,expected",
    [
        (4, [4]),
        ("4", [4]),
        ("4..6", [4, 5, 6]),
        (" 2..2 ", [2]),
        ("5,2,3,2", [2, 3, 5]),
        ("2,", [2]),
        ([3, "5..6", 3], [3, 5, 6]),
        ((7,), [7]),
    ],
)
def test_parse_range(value, expected):
    """Test parsing the range forms of the command line and sweep files."""

    assert utils.parse_range(value) == expected


@pytest.mark.parametrize("value", ["6..4", "a..b", "1..", "x", "2;3", "", " , ", True, [1, False]])
def test_parse_range_invalid(value):
    with pytest.raises(ValueError):
        utils.parse_range(value)


@pytest.mark.parametrize(
    "kind,params,expected",
    [
        ("generalized_ramsey", {}, "generalized_ramsey:"),
        ("extremal_e", {"p": 6, "n": 4, "m": 2}, "extremal_e:m=2,n=4,p=6"),
        (
            "generalized_ramsey",
            {"n": 3, "r": 1, "k": 3, "s": 1, "pmax": 10},
            "generalized_ramsey:k=3,n=3,pmax=10,r=1,s=1",
        ),
    ],
)
def test_canonical_key(kind, params, expected):
    """Test that keys do not depend on parameter order."""

    assert utils.canonical_key(kind, params) == expected
    assert utils.canonical_key(kind, dict(reversed(list(params.items())))) == expected


def test_config_hash():
    a = utils.config_hash({"n": [4, 5], "k": [3], "pmax": 10})
    b = utils.config_hash({"pmax": 10, "k": [3], "n": [4, 5]})
    c = utils.config_hash({"n": [4, 5], "k": [3], "pmax": 9})
    assert a == b
    assert a != c
    assert len(a) == 16
    int(a, 16)


def test_timed():
    record = {}
    with utils.timed(record):
        pass
    assert record["seconds"] >= 0

    with pytest.raises(RuntimeError):
        with utils.timed(record, "oracle_seconds"):
            raise RuntimeError("boom")
    assert "oracle_seconds" in record
