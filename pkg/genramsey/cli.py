"""The genramsey command line.

Exit status: 0 when every check passes, 1 on a formula/oracle mismatch or a
failed verification, 2 on a domain or usage error, 3 when an oracle budget is
exceeded.
"""

import argparse
import json
import logging
import sys
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

from genramsey import __version__, graph6
from genramsey.cache import ResultCache
from genramsey.closed_forms import (
    RamseyQuery,
    classical_ramsey_query,
    extremal_dirac,
    extremal_sparse,
    formula_case,
    generalized_ramsey_closed,
    known_classical_values,
)
from genramsey.config import DEFAULT_SOUNDNESS_ORDER, SweepConfig, load_sweep_file
from genramsey.errors import BudgetExceeded, CacheError, GenRamseyError
from genramsey.graph import Graph
from genramsey.manager import ORACLE_QUANTITY, SweepManager
from genramsey.oracle import DEFAULT_PMAX, check_budget
from genramsey.oracle.extremal import brute_extremal_e, brute_girth_extremal
from genramsey.oracle.properties import bound_soundness
from genramsey.oracle.ramsey import brute_generalized_ramsey, query_params
from genramsey.oracle.verdict import OracleVerdict
from genramsey.utils import parse_range
from genramsey.witness import best_witness, verify_witness

log = logging.getLogger("genramsey")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# Classical values small enough for the oracle.
DESK_SCALE = {(3, 3), (3, 4)}


def _emit(args: argparse.Namespace, data: Dict[str, Any], lines: Sequence[str]) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(lines))


def _open_cache(args: argparse.Namespace) -> Optional[ResultCache]:
    if getattr(args, "no_cache", False):
        return None
    return ResultCache(args.cache_dir)


def _cached_oracle(q: RamseyQuery, pmax: int, jobs: int,
                   cache: Optional[ResultCache]) -> OracleVerdict:
    if cache is not None:
        verdict = cache.get(ORACLE_QUANTITY, query_params(q, pmax))
        if verdict is not None:
            return verdict
    verdict = brute_generalized_ramsey(q, pmax, jobs=jobs)
    if cache is not None:
        cache.put(verdict)
    return verdict


def _jobs(args: argparse.Namespace) -> int:
    # None means the flag was not given; sweeps then keep the file's value.
    return args.jobs if args.jobs is not None else 1


def _conventions(n: int, r_star: int, r: int) -> str:
    return f"deficiency r={r_star}, definition r={r} (= C({n},2) - {r_star})"


# ****** commands ******


def cmd_eval(args: argparse.Namespace) -> int:
    """Evaluate the closed form R(n, C(n,2)-r; k, 1), with r the deficiency."""
    value = generalized_ramsey_closed(args.n, args.r, args.k)
    case = formula_case(args.n, args.r, args.k)
    witness = best_witness(args.n, args.r, args.k)
    r_general = comb(args.n, 2) - args.r
    data = {
        "n": args.n,
        "r": args.r,
        "k": args.k,
        "r_general": r_general,
        "value": value,
        "case": case.value,
        "witness": witness.label,
        "witness_components": list(witness.component_sizes),
    }
    _emit(args, data, [
        f"R({args.n}, {r_general}; {args.k}, 1) = {value}",
        f"  {_conventions(args.n, args.r, r_general)}",
        f"  case: {case.value}",
        f"  witness: {witness.label}",
    ])
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    """Build and verify the witness graph for (n, r, k), with r the deficiency."""
    report = verify_witness(best_witness(args.n, args.r, args.k))
    data = report.to_dict()
    lines = [
        f"{report.witness.label}: {data['witness']['graph6']}",
        f"  order {report.witness.order}, alpha {report.alpha}",
    ]
    lines += [f"  {c['name']}: {'ok' if c['passed'] else 'FAILED'}" for c in report.checks]
    _emit(args, data, lines)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_oracle(args: argparse.Namespace) -> int:
    """Compute R(n, r; k, s) exhaustively, with r in the definition's convention."""
    check_budget(args.pmax)
    if args.r_star is not None:
        q = RamseyQuery.from_deficiency(args.n, args.r_star, args.k, args.s)
    else:
        q = RamseyQuery(args.n, args.r, args.k, args.s)
    verdict = _cached_oracle(q, args.pmax, _jobs(args), _open_cache(args))

    data = verdict.to_dict()
    value = data["value"]
    lines = [
        f"R({q.n}, {q.r}; {q.k}, {q.s}) = {value}",
        f"  {_conventions(q.n, q.r_star, q.r)}",
    ]
    if verdict.witness is not None:
        order = graph6.decode(verdict.witness).order
        lines.append(f"  critical graph (order {order}): {verdict.witness}")
    stats = verdict.stats
    lines.append(
        f"  visited {stats.graphs_visited} candidates, "
        f"{stats.pruned_by_degree_bounds} pruned by degree, {stats.elapsed:.2f}s"
    )
    _emit(args, data, lines)
    return EXIT_BUDGET if verdict.exceeds_budget else EXIT_OK


def _extremal_formula(n: int, m: int, p: int) -> Optional[Dict[str, Any]]:
    if n >= 3 and m == n - 2:
        return {"name": "sparse", "value": extremal_sparse(n, p)}
    deficit = comb(n, 2) - m
    if deficit >= 1 and 2 * deficit <= n:
        return {"name": "dirac", "value": extremal_dirac(n, deficit, p)}
    return None


def cmd_extremal(args: argparse.Namespace) -> int:
    """Compare e(n, m; p) from its closed form (if any) with the oracle."""
    formula = _extremal_formula(args.n, args.m, args.p)
    oracle = brute_extremal_e(args.n, args.m, args.p, jobs=_jobs(args))
    data: Dict[str, Any] = {
        "n": args.n,
        "m": args.m,
        "p": args.p,
        "formula": formula,
        "oracle": oracle.value,
        "oracle_witness": oracle.witness,
    }
    reference = None if formula is None else formula["value"]
    lines = [f"e({args.n}, {args.m}; {args.p})"]
    if formula is None:
        lines.append("  formula: none")
    else:
        lines.append(f"  formula ({formula['name']}): {formula['value']}")
    lines.append(f"  oracle: {oracle.value}")

    if args.n >= 3 and args.m == args.n - 1:
        girth = brute_girth_extremal(args.n, args.p, jobs=_jobs(args))
        data["girth_oracle"] = girth.value
        lines.append(f"  girth oracle: {girth.value}")
        reference = girth.value if reference is None else reference

    agree = reference is None or reference == oracle.value
    data["agree"] = agree
    lines.append(f"  agree: {'yes' if agree else 'NO'}")
    _emit(args, data, lines)
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_known_values(args: argparse.Namespace) -> int:
    """List the classical values R(n, k) and re-check the small ones."""
    cache = _open_cache(args)
    rows: List[Dict[str, Any]] = []
    failed = False
    for (n, k), value in sorted(known_classical_values().items()):
        row: Dict[str, Any] = {"n": n, "k": k, "value": value, "status": "out of desk scale"}
        if (n, k) in DESK_SCALE:
            verdict = _cached_oracle(classical_ramsey_query(n, k), value, _jobs(args), cache)
            ok = verdict.value == value
            row["oracle"] = verdict.value
            row["status"] = "verified" if ok else "MISMATCH"
            failed = failed or not ok
        rows.append(row)
    _emit(args, {"values": rows}, [f"R({r['n']},{r['k']}) = {r['value']}  [{r['status']}]"
                                   for r in rows])
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    """Run a formula-versus-oracle sweep and write its report."""
    if args.config is not None:
        config = load_sweep_file(args.config)
    elif args.n is not None and args.k is not None:
        config = SweepConfig(n=parse_range(args.n), k=parse_range(args.k))
    else:
        raise ValueError("sweep needs --config or both --n and --k")
    config = config.with_overrides(
        n=parse_range(args.n) if args.n is not None else None,
        k=parse_range(args.k) if args.k is not None else None,
        r=parse_range(args.r) if args.r is not None else None,
        pmax=args.pmax,
        jobs=args.jobs,
        soundness_order=args.soundness_order,
    )

    manager = SweepManager(cache=_open_cache(args), progress=not args.quiet)
    report = manager.run(config)
    if args.output:
        report.write(args.output)
    if args.output is None or args.format == "json":
        print(report.dumps(), end="")
    else:
        summary = report.to_dict()["summary"]
        print(f"{report.status}: {summary['cells']} cells, {summary['compared']} compared, "
              f"{summary['mismatches']} mismatches -> {args.output}")
    return EXIT_OK if report.status == "PASS" else EXIT_MISMATCH


def cmd_bounds(args: argparse.Namespace) -> int:
    """Run the exhaustive bound soundness pass."""
    report = bound_soundness(args.max_order, extra_order=args.extra_order,
                             extra_edge_cap=args.extra_edge_cap, jobs=_jobs(args))
    data = report.to_dict()
    lines = [
        f"{report.pairs_checked} (graph, bound) pairs over {report.graphs_checked} graphs",
        *[f"  {name}: {count}" for name, count in sorted(report.per_bound.items())],
        f"  violations: {len(report.violations)}",
    ]
    _emit(args, data, lines)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _parse_edge(text: str) -> Tuple[int, int]:
    u, sep, v = text.partition("-")
    if not sep:
        raise ValueError(f"edges are written u-v (got {text!r})")
    return int(u), int(v)


def cmd_encode(args: argparse.Namespace) -> int:
    """Encode an edge list as graph6."""
    g = Graph.from_edges(args.order, [_parse_edge(e) for e in args.edges])
    text = graph6.encode(g)
    _emit(args, {"order": g.order, "graph6": text}, [text])
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    """Decode graph6 text into an edge list."""
    g = graph6.decode(args.graph6)
    edges = [f"{u}-{v}" for u, v in g.edges()]
    data = {"order": g.order, "edges": [[u, v] for u, v in g.edges()]}
    _emit(args, data, [f"order {g.order}: {' '.join(edges)}"])
    return EXIT_OK


# ****** parser ******


def _add_nrk(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="subset size (n >= 4)")
    parser.add_argument("--r", type=int, required=True,
                        help="deficiency: edge budget of the (n, r) graphs, 1 <= r <= n-2")
    parser.add_argument("--k", type=int, required=True, help="independent set size (k >= 2)")


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser for every sub-command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format")
    common.add_argument("--log-level", default="warning", help="log level for the genramsey logger")
    common.add_argument("--quiet", action="store_true", help="disable progress bars")

    oracle_opts = argparse.ArgumentParser(add_help=False)
    oracle_opts.add_argument("--jobs", type=int, default=None, help="worker processes (default 1)")
    oracle_opts.add_argument("--cache-dir", default=None, metavar="path",
                             help="result cache directory (default: $GENRAMSEY_CACHE_DIR "
                                  "or ~/.cache/genramsey)")
    oracle_opts.add_argument("--no-cache", action="store_true", help="do not use the result cache")

    parser = argparse.ArgumentParser(
        prog="genramsey",
        description="Closed forms and exhaustive checks for generalized Ramsey numbers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate the closed form")
    _add_nrk(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("witness", parents=[common], help="build and verify a witness graph")
    _add_nrk(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("oracle", parents=[common, oracle_opts],
                       help="compute R(n, r; k, s) by exhaustive search")
    p.add_argument("--n", type=int, required=True)
    budget = p.add_mutually_exclusive_group(required=True)
    budget.add_argument("--r", type=int, help="r as in R(n, r; k, s)")
    budget.add_argument("--r-star", type=int, help="deficiency C(n,2) - r")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--pmax", type=int, default=DEFAULT_PMAX, help="largest order to search")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", parents=[common, oracle_opts],
                       help="compare the closed form with the oracle over a grid")
    p.add_argument("--config", metavar="path", help="YAML sweep file")
    p.add_argument("--n", help="range such as 4..6")
    p.add_argument("--r", help="deficiency range (default: 1..n-2)")
    p.add_argument("--k", help="range such as 2..5")
    p.add_argument("--pmax", type=int, default=None)
    p.add_argument("--soundness-order", type=int, default=None,
                   help=f"bound soundness pass order (default {DEFAULT_SOUNDNESS_ORDER}, 0 = off)")
    p.add_argument("--output", "-o", metavar="path", help="write the JSON report here")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("extremal", parents=[common, oracle_opts], help="compare e(n, m; p)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("known-values", parents=[common, oracle_opts],
                       help="classical Ramsey values, re-checking the small ones")
    p.set_defaults(func=cmd_known_values)

    p = sub.add_parser("bounds", parents=[common, oracle_opts], help="bound soundness pass")
    p.add_argument("--max-order", type=int, default=DEFAULT_SOUNDNESS_ORDER)
    p.add_argument("--extra-order", type=int, default=None)
    p.add_argument("--extra-edge-cap", type=int, default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("encode", parents=[common], help="edge list to graph6")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("edges", nargs="*", help="edges written u-v")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="graph6 to edge list")
    p.add_argument("graph6")
    p.set_defaults(func=cmd_decode)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return its exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging._nameToLevel.get(args.log_level.upper(), logging.WARNING)
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("genramsey").setLevel(level)

    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, CacheError, GenRamseyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
