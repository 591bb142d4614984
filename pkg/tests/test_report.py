"""Unit tests for the genramsey.report package."""

import pytest

from genramsey import report
from genramsey.report import CellResult, SweepReport


def make_cell(n=4, r=1, k=5, **kwargs):
    fields = dict(
        n=n,
        r=r,
        k=k,
        r_general=6 - r,
        formula_value=6,
        case="matching",
        witness="K2+3K1",
        witness_graph6="D?_",
        witness_verified=True,
    )
    fields.update(kwargs)
    return CellResult(**fields)


class TestCellResult:
    """Tests for the per-cell report entry."""

    def test_skipped(self):
        cell = make_cell()
        assert not cell.compared
        assert cell.matches
        assert cell.passed
        assert cell.to_dict()["oracleValue"] == report.SKIPPED

    def test_match(self):
        cell = make_cell(oracle_ran=True, oracle_value=6, oracle_witness="Dhc")
        assert cell.compared
        assert cell.matches
        data = cell.to_dict()
        assert data["oracleValue"] == 6
        assert data["match"] is True
        assert data["formulaValue"] == 6

    def test_mismatch(self):
        cell = make_cell(oracle_ran=True, oracle_value=7)
        assert not cell.matches
        assert not cell.passed

    def test_oracle_out_of_budget_is_mismatch(self):
        cell = make_cell(oracle_ran=True, oracle_value=None)
        assert not cell.matches
        assert cell.to_dict()["oracleValue"] == "exceeds budget"

    @pytest.mark.parametrize(
        "kwargs",
        [{"witness_verified": False}, {"bound_violations": 2}],
    )
    def test_failures(self, kwargs):
        assert not make_cell(**kwargs).passed

    def test_keys(self):
        assert set(make_cell().to_dict()) == {
            "n",
            "r",
            "k",
            "r_general",
            "formulaValue",
            "case",
            "witness",
            "witnessGraph6",
            "witnessVerified",
            "oracleValue",
            "oracleWitness",
            "match",
            "boundViolations",
            "timing",
        }


class TestSweepReport:
    """Tests for the sweep report."""

    def test_sorted_cells_and_summary(self):
        rep = SweepReport(config={"n": [4]}, config_hash="abc")
        rep.add(make_cell(k=6))
        rep.add(make_cell(k=5, oracle_ran=True, oracle_value=6))
        rep.add(make_cell(r=2, k=2))
        assert [(c.r, c.k) for c in rep.cells] == [(1, 5), (1, 6), (2, 2)]
        assert rep.status == report.PASS
        data = rep.to_dict()
        assert data["grid"] == [[4, 1, 5], [4, 1, 6], [4, 2, 2]]
        assert data["summary"] == {
            "cells": 3,
            "compared": 1,
            "skipped": 2,
            "mismatches": 0,
            "witnessFailures": 0,
        }
        assert data["schema_version"] == report.SCHEMA_VERSION
        assert data["configHash"] == "abc"

    def test_mismatch_fails(self, caplog):
        rep = SweepReport(config={}, config_hash="abc")
        rep.add(make_cell(oracle_ran=True, oracle_value=5))
        assert rep.status == report.FAIL
        assert len(rep.mismatches) == 1
        assert "formula 6 != oracle 5" in caplog.text

    def test_soundness_violation_fails(self):
        rep = SweepReport(config={}, config_hash="abc", cells=[make_cell()])
        rep.soundness = {"violations": [], "passed": True}
        assert rep.status == report.PASS
        rep.soundness = {"violations": [{"bound": "thm22"}], "passed": False}
        assert rep.status == report.FAIL

    def test_write_and_strip_timing(self, tmp_path):
        path = str(tmp_path / "report.json")
        first = SweepReport(config={"n": [4]}, config_hash="abc", cells=[make_cell()])
        first.cells[0].timing["oracle_seconds"] = 0.5
        first.timing["seconds"] = 1.25
        first.write(path)

        second = SweepReport(config={"n": [4]}, config_hash="abc", cells=[make_cell()])
        second.timing["seconds"] = 9.0

        loaded = report.load_report(path)
        assert loaded["timing"] == {"seconds": 1.25}
        assert loaded != second.to_dict()
        assert report.strip_timing(loaded) == report.strip_timing(second.to_dict())
        assert first.dumps().endswith("}\n")
