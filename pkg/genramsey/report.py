"""Sweep reports: per-cell formula and oracle comparisons, written as JSON."""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from genramsey import __version__
from genramsey.oracle.verdict import EXCEEDS_BUDGET

log = logging.getLogger("genramsey")

SCHEMA_VERSION = 1

# Keys holding wall-clock data; everything else is deterministic.
TIMING_KEYS = ("timing",)

SKIPPED = "skipped: exceeds budget"

PASS = "PASS"
FAIL = "FAIL"


@dataclass
class CellResult:
    """The outcome for one (n, r, k) grid cell.

    ``r`` is the deficiency (the (n, r) edge budget); ``r_general`` is the
    matching parameter C(n,2) - r of R(n, r; k, 1).
    """

    n: int
    r: int
    k: int
    r_general: int
    formula_value: int
    case: str
    witness: str
    witness_graph6: str
    witness_verified: bool
    oracle_ran: bool = False
    oracle_value: Optional[int] = None
    oracle_witness: Optional[str] = None
    bound_violations: int = 0
    timing: Dict[str, float] = field(default_factory=dict)

    @property
    def compared(self) -> bool:
        return self.oracle_ran

    @property
    def matches(self) -> bool:
        # An oracle that ran out of budget below the formula value is a mismatch.
        return not self.compared or self.oracle_value == self.formula_value

    def _oracle_field(self) -> Any:
        if not self.oracle_ran:
            return SKIPPED
        return EXCEEDS_BUDGET if self.oracle_value is None else self.oracle_value

    @property
    def passed(self) -> bool:
        return self.matches and self.witness_verified and self.bound_violations == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "r_general": self.r_general,
            "formulaValue": self.formula_value,
            "case": self.case,
            "witness": self.witness,
            "witnessGraph6": self.witness_graph6,
            "witnessVerified": self.witness_verified,
            "oracleValue": self._oracle_field(),
            "oracleWitness": self.oracle_witness,
            "match": self.matches,
            "boundViolations": self.bound_violations,
            "timing": dict(self.timing),
        }


@dataclass
class SweepReport:
    """Everything a sweep produced.

    The overall status is FAIL as soon as one compared cell disagrees with
    its formula, one witness fails verification, or the soundness pass
    finds a violation.
    """

    config: Dict[str, Any]
    config_hash: str
    cells: List[CellResult] = field(default_factory=list)
    soundness: Optional[Dict[str, Any]] = None
    tool_version: str = __version__
    timing: Dict[str, float] = field(default_factory=dict)

    @property
    def mismatches(self) -> List[CellResult]:
        return [c for c in self.cells if not c.matches]

    @property
    def status(self) -> str:
        if any(not c.passed for c in self.cells):
            return FAIL
        if self.soundness is not None and self.soundness.get("violations"):
            return FAIL
        return PASS

    def add(self, cell: CellResult) -> None:
        if not cell.matches:
            log.error(
                f"cell (n={cell.n}, r={cell.r}, k={cell.k}): formula {cell.formula_value} "
                f"!= oracle {cell.oracle_value}"
            )
        self.cells.append(cell)
        self.cells.sort(key=lambda c: (c.n, c.r, c.k))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "toolVersion": self.tool_version,
            "configHash": self.config_hash,
            "status": self.status,
            "config": dict(self.config),
            "grid": [[c.n, c.r, c.k] for c in self.cells],
            "summary": {
                "cells": len(self.cells),
                "compared": sum(1 for c in self.cells if c.compared),
                "skipped": sum(1 for c in self.cells if not c.compared),
                "mismatches": len(self.mismatches),
                "witnessFailures": sum(1 for c in self.cells if not c.witness_verified),
            },
            "cells": [c.to_dict() for c in self.cells],
            "soundness": self.soundness,
            "timing": dict(self.timing),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def write(self, path: str) -> None:
        """Write the report to a file."""
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.dumps())
        log.info(f"wrote sweep report ({self.status}) to {path}")


def strip_timing(data: Any) -> Any:
    """A copy of a report dict with every timing field removed."""
    if isinstance(data, dict):
        return {k: strip_timing(v) for k, v in data.items() if k not in TIMING_KEYS}
    if isinstance(data, list):
        return [strip_timing(v) for v in data]
    return data


def load_report(path: str) -> Dict[str, Any]:
    """Read a report file written by ``SweepReport.write``."""
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)
