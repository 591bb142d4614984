"""Sweep manager: per-cell bookkeeping and the formula-versus-oracle run."""

import logging
import time
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Tuple, Union

from tqdm import tqdm

from genramsey import graph6
from genramsey.cache import ResultCache
from genramsey.closed_forms import RamseyQuery, formula_case, generalized_ramsey_closed
from genramsey.config import SweepConfig
from genramsey.graph import Graph, complement
from genramsey.oracle.properties import bound_soundness, check_bounds, nm_bound_instances
from genramsey.oracle.ramsey import brute_generalized_ramsey, query_params
from genramsey.oracle.verdict import OracleVerdict
from genramsey.report import CellResult, SweepReport
from genramsey.witness import Witness, WitnessReport, best_witness, verify_witness

log = logging.getLogger("genramsey")

ORACLE_QUANTITY = "generalized_ramsey"


def cell_id(n: int, r: int, k: int) -> str:
    return f"n={n},r={r},k={k}"


def _oracle_job(args: Tuple[str, int, int, int, int]) -> Tuple[str, OracleVerdict]:
    """Run one cell's oracle in a worker process."""
    cid, n, r_general, k, pmax = args
    return cid, brute_generalized_ramsey(RamseyQuery(n, r_general, k, 1), pmax)


class CellMeta:
    """Metadata for one (n, r, k) sweep cell.

    The formula value, witness and witness verification are computed
    eagerly, since they are cheap. The oracle verdict is attached later by
    the manager.

    Args:
        n: Subset size.
        r: Deficiency: the (n, r) graphs may have at most r edges on any n vertices.
        k: Independent set size.
    """

    def __init__(self, n: int, r: int, k: int) -> None:
        self.n = n
        self.r = r
        self.k = k
        self.id = cell_id(n, r, k)

        self.query = RamseyQuery.from_deficiency(n, r, k)
        self.formula_value = generalized_ramsey_closed(n, r, k)
        self.case = formula_case(n, r, k)
        self.witness: Witness = best_witness(n, r, k)
        self.witness_report: WitnessReport = verify_witness(self.witness)

        self.verdict: Optional[OracleVerdict] = None
        self.timing: Dict[str, float] = {}

    def __repr__(self) -> str:
        return f"<CellMeta {self.id} formula={self.formula_value}>"

    def needs_oracle(self, pmax: int) -> bool:
        """True when the formula value lies within the oracle budget."""
        return self.formula_value <= pmax

    def oracle_params(self, pmax: int) -> Dict[str, int]:
        return query_params(self.query, pmax)

    def graphs_encountered(self) -> List[Graph]:
        """The witness graph and, when the oracle found one, its critical graph's complement."""
        graphs = [self.witness.realize()]
        if self.verdict is not None and self.verdict.witness is not None:
            graphs.append(complement(graph6.decode(self.verdict.witness)))
        return graphs

    def result(self) -> CellResult:
        """Assemble the report entry for this cell."""
        soundness = check_bounds(self.graphs_encountered(), nm_bound_instances(self.n, self.r))
        verdict = self.verdict
        return CellResult(
            n=self.n,
            r=self.r,
            k=self.k,
            r_general=self.query.r,
            formula_value=self.formula_value,
            case=self.case.value,
            witness=self.witness.label,
            witness_graph6=graph6.encode(self.witness.realize()),
            witness_verified=self.witness_report.passed,
            oracle_ran=verdict is not None,
            oracle_value=None if verdict is None else verdict.value,
            oracle_witness=None if verdict is None else verdict.witness,
            bound_violations=len(soundness.violations),
            timing=dict(self.timing),
        )


class SweepManager:
    """The manager for sweep state.

    The SweepManager creates a CellMeta for every grid cell, dispatches the
    oracle computations (from the cache when possible, else to a worker
    pool), and assembles the report. Cache writes happen in the calling
    process only.
    """

    def __init__(self, cache: Optional[ResultCache] = None, progress: bool = True) -> None:
        # A dictionary mapping cell ids to their CellMeta.
        self.cells: Dict[str, CellMeta] = {}
        self.cache = cache
        self.progress = progress

    def new_cell(self, n: int, r: int, k: int) -> CellMeta:
        """Create and register the CellMeta for a grid cell."""
        log.info(f"creating cell meta for {cell_id(n, r, k)}")
        meta = CellMeta(n, r, k)
        self.cells[meta.id] = meta
        return meta

    def get_cell(self, cid: str) -> Union[CellMeta, None]:
        """Get the CellMeta for a cell id, or None if it is unknown."""
        return self.cells.get(cid)

    def _cached(self, meta: CellMeta, pmax: int) -> Optional[OracleVerdict]:
        if self.cache is None:
            return None
        return self.cache.get(ORACLE_QUANTITY, meta.oracle_params(pmax))

    def run_oracles(self, metas: Iterable[CellMeta], pmax: int, jobs: int = 1) -> None:
        """Attach an oracle verdict to every cell whose formula value is within pmax."""
        pending: List[Tuple[str, int, int, int, int]] = []
        for meta in metas:
            if not meta.needs_oracle(pmax):
                log.info(f"cell {meta.id}: formula {meta.formula_value} exceeds pmax {pmax}")
                continue
            verdict = self._cached(meta, pmax)
            if verdict is not None:
                meta.verdict = verdict
                continue
            q = meta.query
            pending.append((meta.id, q.n, q.r, q.k, pmax))

        if not pending:
            return
        started = {job[0]: time.perf_counter() for job in pending}
        bar = tqdm(total=len(pending), desc="oracle", unit="cell", disable=not self.progress)
        try:
            if jobs > 1 and len(pending) > 1:
                with Pool(processes=jobs) as pool:
                    for cid, verdict in pool.imap_unordered(_oracle_job, pending):
                        self._record(cid, verdict, time.perf_counter() - started[cid])
                        bar.update()
            else:
                for job in pending:
                    cid, verdict = _oracle_job(job)
                    self._record(cid, verdict, time.perf_counter() - started[cid])
                    bar.update()
        except KeyboardInterrupt:
            log.warning("sweep interrupted; completed cells are in the cache")
            raise
        finally:
            bar.close()

    def _record(self, cid: str, verdict: OracleVerdict, seconds: float) -> None:
        meta = self.cells[cid]
        meta.verdict = verdict
        meta.timing["oracle_seconds"] = round(seconds, 6)
        if self.cache is not None:
            self.cache.put(verdict)
        log.info(f"cell {cid}: oracle {verdict.value}, formula {meta.formula_value}")

    def run(self, config: SweepConfig) -> SweepReport:
        """Run a full sweep and return its report."""
        start = time.perf_counter()
        metas = [self.new_cell(n, r, k) for n, r, k in config.cells()]
        self.run_oracles(metas, config.pmax, config.jobs)

        report = SweepReport(config=config.to_dict(), config_hash=config.hash)
        for meta in metas:
            report.add(meta.result())

        if config.soundness_order:
            soundness = bound_soundness(config.soundness_order, jobs=config.jobs)
            report.soundness = soundness.to_dict()

        report.timing["seconds"] = round(time.perf_counter() - start, 6)
        log.info(
            f"sweep {config.hash}: {len(metas)} cells, {len(report.mismatches)} mismatches, "
            f"status {report.status}"
        )
        return report
