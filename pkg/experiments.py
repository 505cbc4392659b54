"""
Shallow-minor clique cover experiments

Subcommands:
    compute      parameter values with witnesses for one graph
    verify       the bound battery over a graph or a corpus
    conjecture1  induced stars in shallow minors of incomparability graphs
    conjecture2  balanced clique separators of K_{p,p}-minor-free graphs
    construct    write a generated graph and its provenance

Reports go to stdout (or --json / --csv); status lines go to stderr.
Exit codes: 0 ok, 2 invalid input, 3 capacity exceeded, 4 verification failure.

Examples:
    python experiments.py compute beta ccw grad --construct complete --params n=4 --t 1
    python experiments.py verify --corpus all:n=5 --t-range 0..1 --workers 4
    python experiments.py conjecture1 --corpus conjecture1 --csv reports/conjecture1.csv
    python experiments.py construct obs2 --params n=6,t=3 --out graphs/obs2.txt
"""

import argparse
import os
import sys
from pathlib import Path

# Add to path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from config.settings import COMPUTABLE_PARAMS, DEFAULT_SEED, DEFAULT_T_RANGE, REPORT_INCLUDE_TIMINGS
from src.constructions.registry import build_construction
from src.errors import CapacityError, GraphValidationError
from src.graphs.formats import FORMATS, serialize_graph
from src.graphs.reader import GraphReader
from src.harness.compute import cmd_compute
from src.harness.conjectures import cmd_conjecture1, cmd_conjecture2
from src.harness.corpora import CorpusItem, graph_id_for, parse_params, parse_range, resolve_corpus
from src.harness.reports import (
    EXIT_CAPACITY, EXIT_OK, EXIT_VALIDATION, PARAM_CSV_COLUMNS, dump_json, write_csv, write_text
)
from src.harness.verify import FAIL, VERIFY_CSV_COLUMNS, cmd_verify
from src.limits import DEFAULT_CAPS


def status(message: str, verbose: bool = True):
    if verbose:
        print(message, file=sys.stderr)


def banner(title: str, verbose: bool = True):
    status("=" * 70, verbose)
    status(title, verbose)
    status("=" * 70, verbose)


def caps_from(args):
    return DEFAULT_CAPS.with_overrides(max_models=args.cap_models, max_seconds=args.cap_seconds)


def t_values_from(args, default: str):
    if args.t is not None:
        return [args.t]
    return parse_range(args.t_range or default)


def single_item(args) -> CorpusItem:
    """The graph named by --input or --construct"""
    if args.input:
        reader = GraphReader(fmt=args.format, verbose=False)
        graph = reader.read_file(args.input)
        return CorpusItem(Path(args.input).stem, graph, {"file": args.input, "format": reader.detect_format(args.input)})
    if args.construct:
        params = parse_params(args.params)
        built = build_construction(args.construct, params, args.seed)
        graph_id = graph_id_for(args.construct, params, built.provenance["seed"])
        return CorpusItem(graph_id, built.graph, built.provenance, built.model)
    raise GraphValidationError("give --input PATH or --construct FAMILY")


def load_items(args):
    if args.corpus:
        return resolve_corpus(args.corpus)
    return [single_item(args)]


def emit(args, payload_json: str, rows=None, columns=None):
    """JSON to --json (stdout when neither --json nor --csv is given), rows to --csv"""
    if args.json or not args.csv:
        write_text(args.json, payload_json)
    if args.csv and rows is not None:
        write_csv(rows, columns, args.csv)
        status(f"✓ Table written to {args.csv}", not args.quiet)


# ========================================================================
# SUBCOMMANDS
# ========================================================================

def run_compute(args) -> int:
    verbose = not args.quiet
    item = single_item(args)
    t = args.t if args.t is not None else 0
    status(f"Computing {', '.join(args.params_to_compute)} on {item.graph_id} "
           f"(n={item.graph.n}, m={item.graph.m}, t={t})", verbose)
    report = cmd_compute(item.graph, args.params_to_compute, t, caps_from(args),
                         descriptor=item.provenance, graph_id=item.graph_id,
                         timings=args.timings or REPORT_INCLUDE_TIMINGS)
    for error in report.errors:
        status(f"✗ {error['param']}: {error['message']}", verbose)
    for name, entry in report.results.items():
        status(f"✓ {name} = {entry['value']} ({entry['bound']})", verbose)
    emit(args, report.to_json(), report.csv_rows(), PARAM_CSV_COLUMNS)
    return report.exit_code


def run_verify(args) -> int:
    verbose = not args.quiet
    items = load_items(args)
    t_values = t_values_from(args, f"{DEFAULT_T_RANGE[0]}..{DEFAULT_T_RANGE[1]}")
    banner(f"VERIFYING {len(items)} GRAPH(S), t in {t_values}", verbose)
    report = cmd_verify(items, t_values, caps_from(args), workers=args.workers, verbose=verbose)

    counts = report.counts()
    for row in report.failures:
        status(f"✗ {row['graph_id']} t={row['t']} {row['check']}: {row['detail']}", verbose)
    status(f"  Passed: {counts['pass']}", verbose)
    status(f"  Failed: {counts['fail']}", verbose)
    status(f"  Skipped: {counts['skipped']}", verbose)
    status(f"  Info: {counts['info']}", verbose)
    if counts[FAIL] == 0:
        status("✓ No violations found", verbose)
    emit(args, report.to_json(), report.rows, VERIFY_CSV_COLUMNS)
    return report.exit_code


def run_conjecture1(args) -> int:
    verbose = not args.quiet
    items = load_items(args)
    t_values = t_values_from(args, "1..2")
    banner(f"CONJECTURE 1: {len(items)} GRAPH(S), t in {t_values}", verbose)
    table = cmd_conjecture1(items, t_values, caps_from(args), workers=args.workers, verbose=verbose)
    summary = table.summary
    status(f"Rows: {summary['rows']} ({summary['lower_bound_rows']} lower-bound, "
           f"{summary['undefined_ratio_rows']} ratio undefined)", verbose)
    status(f"Max s_t/(t*s): {summary['max_ratio']} at {summary['max_ratio_graph']} t={summary['max_ratio_t']}", verbose)
    emit(args, table.to_json(), table.rows, table.columns)
    return EXIT_OK


def run_conjecture2(args) -> int:
    verbose = not args.quiet
    items = load_items(args)
    t = args.t if args.t is not None else 1
    banner(f"CONJECTURE 2: {len(items)} GRAPH(S), p={args.p}, t={t}", verbose)
    table = cmd_conjecture2(items, args.p, t, caps_from(args), with_ccw_cover=args.with_ccw_cover,
                            workers=args.workers, verbose=verbose)
    summary = table.summary
    status(f"Rows: {summary['rows']}", verbose)
    status(f"  Filtered (contain K_{{{args.p},{args.p}}} as a {t}-shallow minor): {summary['filtered_by_hypothesis']}", verbose)
    status(f"  Infeasible: {summary['infeasible_rows']}", verbose)
    status(f"  Skipped: {summary['skipped_rows']}", verbose)
    status(f"  Above ceil(sqrt|C|): {summary['rows_above_sqrt_bound']}", verbose)
    emit(args, table.to_json(), table.rows, table.columns)
    return EXIT_OK


def run_construct(args) -> int:
    verbose = not args.quiet
    params = parse_params(args.params)
    built = build_construction(args.family, params, args.seed)
    sidecar = dict(built.provenance)
    if built.model is not None:
        sidecar["model"] = built.model.to_json()
    write_text(args.out, serialize_graph(built.graph))
    if args.out not in (None, "-"):
        sidecar_path = Path(args.out).with_suffix(".json")
        write_text(str(sidecar_path), dump_json(sidecar))
        status(f"✓ Wrote {args.out} (n={built.graph.n}, m={built.graph.m}) and {sidecar_path}", verbose)
    return EXIT_OK


# ========================================================================
# ARGUMENTS
# ========================================================================

def add_common(parser, graph_source: bool = True, corpus: bool = False):
    if graph_source:
        parser.add_argument("--input", help="Graph file (edge list or DIMACS)")
        parser.add_argument("--format", choices=FORMATS, help="Force the input format")
        parser.add_argument("--construct", metavar="FAMILY", help="Generate the graph instead of reading it")
        parser.add_argument("--params", help="Construction parameters, e.g. n=6,t=3")
        parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Construction seed")
    if corpus:
        parser.add_argument("--corpus", action="append",
                            help="Corpus spec or named corpus from config/corpora.json (repeatable)")
        parser.add_argument("--workers", type=int, default=1, help="Worker processes for the corpus loop")
    parser.add_argument("--t", type=int, help="Minor depth")
    parser.add_argument("--cap-models", type=int, help="Stop each minor enumeration after N models")
    parser.add_argument("--cap-seconds", type=float, help="Wall-clock budget per minor enumeration")
    parser.add_argument("--json", help="Write the JSON report here ('-' for stdout)")
    parser.add_argument("--csv", help="Write the table here")
    parser.add_argument("--quiet", action="store_true", help="No status output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Shallow-minor clique cover experiments")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="Compute parameters of one graph")
    compute.add_argument("params_to_compute", nargs="+", metavar="PARAM", choices=COMPUTABLE_PARAMS)
    compute.add_argument("--timings", action="store_true", help="Include wall time per parameter")
    add_common(compute)
    compute.set_defaults(func=run_compute)

    verify = sub.add_parser("verify", help="Run the bound battery")
    verify.add_argument("--t-range", help="Depths A..B")
    add_common(verify, corpus=True)
    verify.set_defaults(func=run_verify)

    conjecture1 = sub.add_parser("conjecture1", help="Tabulate s_t against t*s")
    conjecture1.add_argument("--t-range", help="Depths A..B (default 1..2)")
    add_common(conjecture1, corpus=True)
    conjecture1.set_defaults(func=run_conjecture1)

    conjecture2 = sub.add_parser("conjecture2", help="Tabulate minimum clique separators against sqrt|C|")
    conjecture2.add_argument("--p", type=int, default=2, help="Excluded biclique K_{p,p}")
    conjecture2.add_argument("--with-ccw-cover", action="store_true", help="Also separate the optimal ccw cover")
    add_common(conjecture2, corpus=True)
    conjecture2.set_defaults(func=run_conjecture2)

    construct = sub.add_parser("construct", help="Write a generated graph and its provenance sidecar")
    construct.add_argument("family")
    construct.add_argument("--params", help="Construction parameters, e.g. n=6,t=3")
    construct.add_argument("--seed", type=int, default=DEFAULT_SEED)
    construct.add_argument("--out", help="Edge-list path; the sidecar goes next to it as .json")
    construct.add_argument("--quiet", action="store_true")
    construct.set_defaults(func=run_construct)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError) as e:  # GraphValidationError is a ValueError
        print(f"✗ Error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except CapacityError as e:
        print(f"✗ Capacity exceeded: {e}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
