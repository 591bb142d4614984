"""Unit tests for the genramsey command line."""

import json
import os

import pytest

from genramsey import cli, report


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--n", "4", "--r", "1", "--k", "5")
    assert code == cli.EXIT_OK
    assert out.splitlines()[0] == "R(4, 5; 5, 1) = 6"
    assert "deficiency r=1, definition r=5" in out
    assert "witness: K2+3K1" in out


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "--n", "6", "--r", "4", "--k", "4", "--format", "json")
    assert code == cli.EXIT_OK
    data = json.loads(out)
    assert data["value"] == 8
    assert data["r_general"] == 11
    assert data["witness"] == "K3+2K2"
    assert data["witness_components"] == [3, 2, 2]


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "--n", "3", "--r", "1", "--k", "3"),
        ("eval", "--n", "5", "--r", "4", "--k", "3"),
        ("witness", "--n", "4", "--r", "1", "--k", "1"),
        ("sweep", "--no-cache"),
        ("decode", "C~~"),
        ("encode", "--order", "3", "0:1"),
        ("encode", "--order", "3", "0-3"),
    ],
)
def test_domain_and_input_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == cli.EXIT_USAGE
    assert err.startswith("error: ")


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("eval", "--n", "4", "--k", "3"),
        ("oracle", "--n", "3", "--k", "3"),
        ("oracle", "--n", "3", "--r", "1", "--r-star", "2", "--k", "3"),
        ("nope",),
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as e:
        cli.main(list(argv))
    assert e.value.code == 2


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--n", "5", "--r", "2", "--k", "4")
    assert code == cli.EXIT_OK
    assert out.startswith("3K2: ")
    assert "FAILED" not in out


def test_oracle(capsys, tmp_path):
    argv = ("oracle", "--n", "3", "--r", "1", "--k", "3", "--pmax", "7",
            "--cache-dir", str(tmp_path))
    code, out, _ = run(capsys, *argv)
    assert code == cli.EXIT_OK
    assert out.splitlines()[0] == "R(3, 1; 3, 1) = 6"
    assert "critical graph (order 5): " in out

    # the second run is answered from the cache
    code, again, _ = run(capsys, *argv, "--format", "json")
    assert code == cli.EXIT_OK
    assert json.loads(again)["value"] == 6


def test_oracle_by_deficiency(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "4", "--r-star", "1", "--k", "5", "--pmax", "7",
                       "--no-cache")
    assert code == cli.EXIT_OK
    assert out.splitlines()[0] == "R(4, 5; 5, 1) = 6"


def test_oracle_exceeds_budget(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "3", "--r", "1", "--k", "4", "--pmax", "7",
                       "--no-cache")
    assert code == cli.EXIT_BUDGET
    assert "exceeds budget" in out.splitlines()[0]


def test_oracle_over_hard_cap(capsys):
    code, _, err = run(capsys, "oracle", "--n", "3", "--r", "1", "--k", "4", "--pmax", "12",
                       "--no-cache")
    assert code == cli.EXIT_BUDGET
    assert err.startswith("budget exceeded: ")


@pytest.mark.parametrize("m,formula", [(2, "sparse"), (3, None)])
def test_extremal(capsys, m, formula):
    code, out, _ = run(capsys, "extremal", "--n", "4", "--m", str(m), "--p", "6",
                       "--format", "json")
    assert code == cli.EXIT_OK
    data = json.loads(out)
    assert data["agree"] is True
    if formula is None:
        assert data["formula"] is None
        assert data["girth_oracle"] == data["oracle"] == 6
    else:
        assert data["formula"] == {"name": formula, "value": 4}
        assert data["oracle"] == 4


def test_known_values(capsys):
    code, out, _ = run(capsys, "known-values", "--no-cache")
    assert code == cli.EXIT_OK
    assert "R(3,3) = 6  [verified]" in out
    assert "R(3,4) = 9  [verified]" in out
    assert "R(4,4) = 18  [out of desk scale]" in out


def test_sweep_to_file(capsys, tmp_path):
    path = str(tmp_path / "report.json")
    code, out, _ = run(capsys, "sweep", "--n", "4", "--k", "2..3", "--pmax", "7",
                       "--soundness-order", "0", "--quiet", "--no-cache", "-o", path)
    assert code == cli.EXIT_OK
    assert out == f"PASS: 4 cells, 4 compared, 0 mismatches -> {path}\n"
    data = report.load_report(path)
    assert data["status"] == report.PASS
    assert data["grid"] == [[4, 1, 2], [4, 1, 3], [4, 2, 2], [4, 2, 3]]


def test_sweep_from_config(capsys, data_dir, tmp_path):
    config = os.path.join(data_dir, "sweeps", "restricted-r.yaml")
    code, out, _ = run(capsys, "sweep", "--config", config, "--n", "4", "--pmax", "7",
                       "--soundness-order", "0", "--quiet", "--cache-dir", str(tmp_path))
    assert code == cli.EXIT_OK
    data = json.loads(out)
    assert data["grid"] == [[4, 1, 3], [4, 2, 3]]
    assert data["config"]["r"] == [1, 2, 3]


def test_sweep_invalid_config(capsys, data_dir):
    config = os.path.join(data_dir, "sweeps", "invalid.yaml")
    code, _, err = run(capsys, "sweep", "--config", config, "--no-cache")
    assert code == cli.EXIT_USAGE
    assert "not valid YAML" in err


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--max-order", "4", "--format", "json")
    assert code == cli.EXIT_OK
    data = json.loads(out)
    assert data["passed"]
    assert data["graphs_checked"] == 1 + 2 + 4 + 11


def test_encode_decode(capsys):
    code, out, _ = run(capsys, "encode", "--order", "3", "0-1", "1-2")
    assert code == cli.EXIT_OK
    assert out == "Bg\n"

    code, out, _ = run(capsys, "decode", "Bw")
    assert code == cli.EXIT_OK
    assert out == "order 3: 0-1 0-2 1-2\n"
