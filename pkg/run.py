# SPDX-License-Identifier: BSD-3-Clause

"""
This script is the command-line entry point of the loose-cycle toolkit.

Exit codes: 0 for success or found, 1 for certified absent, 2 for inconclusive or timeout, and 64
for usage errors.
"""

from typing import Any, Dict, List, Optional, Sequence

import argparse
import io
import json
import logging
import sys

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table
import pandas as pd

import apportion
import apq
import balance
import coloring
import experiment
import extremal
import good_pair
import graph_factory
import hg_embedding
import hg_family
import hg_format
import regularity
import settings
import solver
import tripartite

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ABSENT = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

#===================================================================================================
#===================================================================================================
class _ArgumentParser(argparse.ArgumentParser):
    """
    An argument parser whose usage errors exit with code 64.
    """

    #-----------------------------------------------------------------------------------------------
    #-----------------------------------------------------------------------------------------------
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _ints(a_string: str) -> List[int]:
    return [int(token, base=10) for token in a_string.replace(";", ",").split(",") if token.strip()]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _emit(payload: Dict[str, Any], args: argparse.Namespace, rows: Optional[List[Dict]] = None):
    """
    Write a result in the requested format to `--out` or stdout. `rows`, when given, is the
    tabular part of the result used by the csv and text formats.
    """
    if args.format == "json":
        text = json.dumps(payload, indent=1, default=str) + "\n"
    elif args.format == "csv":
        buffer = io.StringIO()
        pd.DataFrame(data=rows if rows is not None else [payload]).to_csv(buffer, index=False)
        text = buffer.getvalue()
    else:
        console = Console(file=io.StringIO(), width=100)

        if rows:
            table = Table(*rows[0].keys())

            for row in rows:
                table.add_row(*(str(value) for value in row.values()))

            console.print(table)

        for (key, value) in payload.items():
            if key != "rows":
                console.print(f"{key}: {value}", markup=False, highlight=False)

        text = console.file.getvalue()

    if args.out:
        with open(args.out, mode="w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _status_code(status: solver.Status) -> int:
    return {
        solver.Status.FOUND: EXIT_OK,
        solver.Status.EXHAUSTED: EXIT_ABSENT,
        solver.Status.TIMEOUT: EXIT_INCONCLUSIVE
    }[status]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "random":
        graph = graph_factory.gen_random(n=args.n, p=args.p, seed=args.seed)
    elif args.kind == "codegree":
        graph = graph_factory.gen_codegree_floor(n=args.n, target=args.target, seed=args.seed)
    elif args.kind == "complete":
        graph = graph_factory.gen_complete(n=args.n)
    elif args.kind == "blocks":
        graph = graph_factory.gen_disjoint_blocks(sizes=_ints(args.sizes))
    else:
        spec = hg_family.parse_family(a_string=args.family)
        graph = extremal.build_extremal(n=args.n, spec=spec).host

    comments = [f"generator={args.kind} seed={args.seed}", f"min_codegree={graph.min_codegree()}"]

    if args.out:
        hg_format.write_h3(graph=graph, path=args.out, comments=comments)
    else:
        sys.stdout.write(hg_format.format_h3(graph=graph, comments=comments))

    _logger.info("Generated %s with %d edges.", args.kind, graph.edge_count)

    return EXIT_OK

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _cmd_codegree(args: argparse.Namespace) -> int:
    graph = hg_format.read_h3(path=args.file)

    _emit(payload={
        "n": graph.n, "edges": graph.edge_count, "min_codegree": graph.min_codegree(),
        "min_degree": graph.min_degree()
    }, args=args)

    return EXIT_OK

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _cmd_solve(args: argparse.Namespace) -> int:
    graph = hg_format.read_h3(path=args.file)

    if args.pancyclic:
        entries = solver.greedy_pancyclic_report(host=graph, budget=args.budget)
        rows = [
            {"q": e.q, "status": e.status.value, "cycle": e.cycle.vertices if e.cycle else ""}
        for e in entries]
        _emit(payload={"rows": rows}, args=args, rows=rows)

        return EXIT_OK

    spec = hg_family.parse_family(a_string=args.family)
    result = solver.solve_spanning(host=graph, spec=spec, budget=args.budget, workers=args.workers)

    _emit(payload=result.to_dict(), args=args)

    return _status_code(status=result.status)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _cmd_color_cycle(args: argparse.Namespace) -> int:
    sizes = _ints(args.sizes)

    if len(sizes) != 3 or sum(sizes) != args.n:
        raise ValueError(f"Expected three sizes summing to {args.n}, got {sizes}.")

    if not coloring.is_feasible(n=args.n, sizes=sizes):
        _emit(payload={"n": args.n, "sizes": sizes, "feasible": False}, args=args)
        return EXIT_ABSENT

    (a, b, c) = sorted(sizes)
    result = coloring.color_cycle(n=args.n, a=a, b=b, c=c)
    parts = coloring.color_cycle_unsorted(n=args.n, sizes=sizes)

    _emit(payload={
        "n": args.n, "sizes": sizes, "feasible": True, "coloring": str(result), "parts": parts
    }, args=args)

    return EXIT_OK

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _cmd_embed_tripartite(args: argparse.Namespace) -> int:
    parts = _ints(args.parts)
    lengths = _ints(args.lengths)
    result = tripartite.embed_tripartite(parts=parts, lengths=lengths)
    rows = [
        {"cycle": i, "length": length, "v1": row[0], "v2": row[1], "v3": row[2]}
    for (i, (length, row)) in enumerate(zip(result.allocation.lengths, result.allocation.rows))]

    _emit(payload={
        "parts": parts, "steps": len(result.steps), "rows": rows,
        "cycles": [list(cycle) for cycle in result.cycles]
    }, args=args, rows=rows)

    return EXIT_OK

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _cmd_apportion(args: argparse.Namespace) -> int:
    weights = [w for w in args.weights.split(",") if w.strip()]
    counts = apportion.apportion(q=args.q, weights=weights)
    deviation = apportion.max_deviation(q=args.q, weights=weights, counts=counts)

    _emit(payload={"q": args.q, "counts": counts, "max_deviation": str(deviation)}, args=args)

    return EXIT_OK

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _cmd_good_pair(args: argparse.Namespace) -> int:
    eta = apportion.to_fraction(value=args.eta)

    if not 0 < eta < 1 or args.n <= 0 or not 0 <= args.k < args.n:
        raise ValueError(f"Invalid parameters n = {args.n}, k = {args.k}, eta = {args.eta}.")

    try:
        pair = good_pair.good_pair(n=args.n, k=args.k, eta=eta)
    except ValueError as error:
        _emit(payload={"n": args.n, "k": args.k, "eta": args.eta, "error": str(error)}, args=args)
        return EXIT_ABSENT

    _emit(payload={
        "n": args.n, "k": args.k, "eta": args.eta, "a": pair.a, "b": pair.b, "cap": pair.cap,
        "window": [str(pair.window[0]), str(pair.window[1])]
    }, args=args)

    return EXIT_OK

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _cmd_balance(args: argparse.Namespace) -> int:
    if args.a_transform:
        transform = balance.a_transform_coeffs(support=_ints(args.a_transform))
        _emit(payload={"support": list(transform.support),
                       "coefficients": list(transform.coefficients)}, args=args)
        return EXIT_OK

    if not args.targets or not args.lengths:
        raise ValueError("balance needs --targets and --lengths.")

    result = balance.balance_partition(
        targets=_ints(args.targets), lengths=_ints(args.lengths), tol=args.tol,
        odd_cap=args.odd_cap, budget=args.budget
    )

    _emit(payload=result.to_dict(), args=args)

    if result.feasible:
        return EXIT_OK

    return EXIT_ABSENT if result.proven_infeasible else EXIT_INCONCLUSIVE

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _verdict_code(verdict: regularity.Verdict) -> int:
    return {
        regularity.VerdictStatus.HOLDS: EXIT_OK,
        regularity.VerdictStatus.VIOLATED: EXIT_ABSENT,
        regularity.VerdictStatus.INCONCLUSIVE: EXIT_INCONCLUSIVE
    }[verdict.status]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _cmd_reg(args: argparse.Namespace) -> int:
    graph = hg_format.read_h3(path=args.file)
    view = regularity.TripartiteView(host=graph, parts=regularity.parse_parts(a_string=args.parts))
    mode = regularity.str_to_mode(a_string=args.mode)

    if args.action == "check":
        verdict = regularity.check_regular(
            view=view, eps=args.eps, d=args.d, mode=mode, budget=args.exhaustive_budget,
            seed=args.seed
        )
        _emit(payload={"density": str(regularity.density(view=view)), **verdict.to_dict()},
              args=args)

        return _verdict_code(verdict=verdict)

    pruned = regularity.prune_to_superregular(view=view, eps=args.eps, d=args.d)
    post_mode = regularity.Mode.HALF_SUPER if mode.is_half else regularity.Mode.SUPER
    eps = apportion.to_fraction(value=args.eps)
    d = apportion.to_fraction(value=args.d)
    payload = {"parts": [list(part) for part in pruned.parts], "post_mode": post_mode.value}

    # The post-check needs 2 eps < 1.
    if 2 * eps >= 1:
        _emit(payload={**payload, "status": "unchecked"}, args=args)
        return EXIT_INCONCLUSIVE

    verdict = regularity.check_regular(
        view=pruned, eps=2 * eps, d=d / 2, mode=post_mode, budget=args.exhaustive_budget,
        seed=args.seed
    )

    _emit(payload={**payload, **verdict.to_dict()}, args=args)

    return _verdict_code(verdict=verdict)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _cmd_tile(args: argparse.Namespace) -> int:
    graph = hg_format.read_h3(path=args.file)

    try:
        tiling = apq.find_apq_tiling(
            host=graph, p=args.p, q=args.q, min_cover=args.min_cover, budget=args.budget
        )
    except solver.SearchTimeout:
        _emit(payload={"status": solver.Status.TIMEOUT.value}, args=args)
        return EXIT_INCONCLUSIVE

    if tiling is None:
        _emit(payload={"status": solver.Status.EXHAUSTED.value}, args=args)
        return EXIT_ABSENT

    _emit(payload={"status": solver.Status.FOUND.value, **tiling.to_dict()}, args=args)

    return EXIT_OK

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _cmd_verify(args: argparse.Namespace) -> int:
    if args.what == "extremal":
        spec = hg_family.parse_family(a_string=args.family)
        report = extremal.verify_extremal(
            n=args.n, spec=spec, use_solver=args.solver, budget=args.budget
        )
        _emit(payload=report.to_dict(), args=args)

        return EXIT_INCONCLUSIVE if report.solver_status is solver.Status.TIMEOUT else EXIT_OK

    if args.what == "embedding":
        graph = hg_format.read_h3(path=args.file)
        spec = hg_family.parse_family(a_string=args.family)

        with open(args.embedding, mode="r", encoding="utf-8") as handle:
            stored = json.load(handle)

        cycles = stored["embedding"] if isinstance(stored, dict) else stored
        embedding = hg_embedding.Embedding(
            cycles=tuple(tuple(cycle) for cycle in cycles), host=graph
        )
        report = hg_embedding.verify_embedding(
            host=graph, spec=spec, embedding=embedding, spanning=args.spanning
        )
        _emit(payload={"ok": report.ok, "violation": report.violation}, args=args)

        return EXIT_OK if report.ok else EXIT_ABSENT

    result = experiment.verify_run(run_dir=args.file)
    _emit(payload={
        "rows": result.rows, "found": result.found, "verified": result.verified,
        "failures": list(result.failures)
    }, args=args)

    return EXIT_OK if result.ok else EXIT_ABSENT

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _cmd_experiment(args: argparse.Namespace) -> int:
    families = None

    if args.family:
        families = [hg_family.parse_family(a_string=f) for f in args.family]

    plan = experiment.ExperimentPlan(
        n_range=tuple(range(args.n_min, args.n_max + 1)), families=families, trials=args.trials,
        seed=args.seed, out=args.out or f"run-{args.seed}", budget=args.budget,
        workers=args.workers
    )
    records = experiment.run_threshold_experiment(plan=plan)
    summary = experiment.summarize(records=records)

    console = Console()
    table = Table("generator", "found", "exhausted", "timeout")

    for (generator, counts) in summary.items():
        table.add_row(generator, *(str(counts.get(s.value, 0)) for s in solver.Status))

    console.print(table)
    console.print(f"Wrote {len(records)} rows to {plan.out}.")

    timed_out = any(record.status == solver.Status.TIMEOUT.value for record in records)

    return EXIT_INCONCLUSIVE if timed_out else EXIT_OK

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def make_parser() -> argparse.ArgumentParser:
    """
    Make the argument parser with its sub-commands.
    """
    parser = _ArgumentParser(prog="run.py", description="Loose-cycle factor toolkit.")
    parser.add_argument("--seed", type=int, default=settings.parameters.seed)
    parser.add_argument("--budget", type=int, default=settings.parameters.budget)
    parser.add_argument("--out", default=None)
    parser.add_argument(
        "--format", choices=["json", "csv", "text"], default=settings.parameters.output_format
    )
    parser.add_argument("--verbose", action="store_true")

    commands = parser.add_subparsers(dest="command", required=True)

    #***********************************************************************************************
    # Instances.
    #***********************************************************************************************
    command = commands.add_parser("gen", help="Generate a host graph.")
    command.add_argument("kind", choices=["random", "codegree", "complete", "extremal", "blocks"])
    command.add_argument("--n", type=int, default=0)
    command.add_argument("--p", type=float, default=0.5)
    command.add_argument("--target", type=int, default=0)
    command.add_argument("--family", default="")
    command.add_argument("--sizes", default="")
    command.set_defaults(handler=_cmd_gen)

    command = commands.add_parser("codegree", help="Report codegree statistics.")
    command.add_argument("file")
    command.set_defaults(handler=_cmd_codegree)

    command = commands.add_parser("solve", help="Decide spanning containment.")
    command.add_argument("file")
    command.add_argument("--family", default="")
    command.add_argument("--workers", type=int, default=1)
    command.add_argument("--pancyclic", action="store_true")
    command.set_defaults(handler=_cmd_solve)

    #***********************************************************************************************
    # Constructions.
    #***********************************************************************************************
    command = commands.add_parser("color-cycle", help="Properly 3-color a cycle.")
    command.add_argument("--n", type=int, required=True)
    command.add_argument("--sizes", required=True)
    command.set_defaults(handler=_cmd_color_cycle)

    command = commands.add_parser("embed-tripartite", help="Embed into complete tripartite.")
    command.add_argument("--parts", required=True)
    command.add_argument("--lengths", required=True)
    command.set_defaults(handler=_cmd_embed_tripartite)

    command = commands.add_parser("apportion", help="Round shares to integers.")
    command.add_argument("--q", type=int, required=True)
    command.add_argument("--weights", required=True)
    command.set_defaults(handler=_cmd_apportion)

    command = commands.add_parser("good-pair", help="Find an (n, k, eta)-good pair.")
    command.add_argument("--n", type=int, required=True)
    command.add_argument("--k", type=int, required=True)
    command.add_argument("--eta", required=True)
    command.set_defaults(handler=_cmd_good_pair)

    command = commands.add_parser("balance", help="Balance cycles into bins.")
    command.add_argument("--targets", default="")
    command.add_argument("--lengths", default="")
    command.add_argument("--tol", type=int, default=0)
    command.add_argument("--odd-cap", type=int, default=None)
    command.add_argument("--a-transform", default="")
    command.set_defaults(handler=_cmd_balance)

    #***********************************************************************************************
    # Regularity.
    #***********************************************************************************************
    command = commands.add_parser("reg", help="Check or prune a tripartite triple.")
    command.add_argument("action", choices=["check", "prune"])
    command.add_argument("file")
    command.add_argument("--parts", required=True)
    command.add_argument("--eps", required=True)
    command.add_argument("--d", required=True)
    command.add_argument("--mode", default="regular")
    command.add_argument(
        "--budget", dest="exhaustive_budget", type=int,
        default=settings.parameters.exhaustive_budget
    )
    command.set_defaults(handler=_cmd_reg)

    command = commands.add_parser("tile", help="Tile a host with A(p, q) copies.")
    command.add_argument("file")
    command.add_argument("--p", type=int, required=True)
    command.add_argument("--q", type=int, required=True)
    command.add_argument("--min-cover", type=int, required=True)
    command.set_defaults(handler=_cmd_tile)

    #***********************************************************************************************
    # Verification and experiments.
    #***********************************************************************************************
    command = commands.add_parser("verify", help="Re-verify stored results.")
    command.add_argument("what", choices=["extremal", "embedding", "run"])
    command.add_argument("file", nargs="?", default="")
    command.add_argument("--n", type=int, default=0)
    command.add_argument("--family", default="")
    command.add_argument("--solver", action="store_true")
    command.add_argument("--embedding", default="")
    command.add_argument("--spanning", action="store_true")
    command.set_defaults(handler=_cmd_verify)

    command = commands.add_parser("experiment", help="Run a threshold experiment.")
    command.add_argument("--n-min", type=int, default=6)
    command.add_argument("--n-max", type=int, default=12)
    command.add_argument("--family", action="append", default=[])
    command.add_argument("--trials", type=int, default=3)
    command.add_argument("--workers", type=int, default=1)
    command.set_defaults(handler=_cmd_experiment)

    return parser

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    The main function.
    """
    args = make_parser().parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO, format="%(message)s",
        datefmt="[%X]", handlers=[RichHandler(console=Console(stderr=True))], force=True
    )

    try:
        return args.handler(args)
    except (KeyError, ValueError, OSError) as error:
        _logger.error("%s", error)
        return EXIT_USAGE

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
if __name__ == "__main__":
    sys.exit(main())
