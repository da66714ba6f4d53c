"""Command-line front end.

Exit codes: 0 success, 2 fixture mismatch, 3 candidate budget exceeded,
4 bad arguments.
"""
from __future__ import annotations

import argparse
import logging
import sys
from math import comb
from pathlib import Path
from typing import Optional, Sequence

from .census import BudgetExceeded, census_table, impossible_warning
from .classify import parse_pattern
from .fixtures import Bounds, load_errata, load_fixtures, verify
from .mset import MissingCell, PairTable, graph_base, k_component_table
from .polya import connected_multigraph_gf, underlying_records, write_underlying_records

EXIT_OK, EXIT_MISMATCH, EXIT_BUDGET, EXIT_USAGE = 0, 2, 3, 4

DEFAULT_DIRECTED_BOUND = 6
DEFAULT_UNDIRECTED_BOUND = 8


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _join_tag_values(argv: Sequence[str]) -> list[str]:
    # tag patterns often start with "-", which argparse would read as an option
    out = []
    it = iter(argv)
    for a in it:
        if a == "--tags":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--tags={nxt}")
        else:
            out.append(a)
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="graphcensus", description="Exact counts of small graphs by edges, vertices and tags.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("table", help="count table for a tag pattern")
    t.add_argument("--tags", required=True, help="tag pattern such as -dc-i-m-l or d.*Cc-i")
    lab = t.add_mutually_exclusive_group()
    lab.add_argument("--labeled", dest="labeled", action="store_true")
    lab.add_argument("--unlabeled", dest="labeled", action="store_false")
    t.add_argument("--max-e", type=int, help="largest edge count (default 6 directed, 8 undirected)")
    t.add_argument("--max-v", type=int, help="largest vertex count (default 6 directed, 8 undirected)")
    t.add_argument("--format", choices=("csv", "latex", "fixture"), default="csv")
    t.add_argument("--jobs", type=int, default=1)
    t.add_argument("--budget", type=int, help="candidate ceiling (default: GRAPHCENSUS_BUDGET or 5e7)")
    t.epilog = "Patterns requiring isolated vertices together with connectivity (dCci, -dci) are accepted but only hold the one-vertex graph."

    g = sub.add_parser("gf", help="generating function of connected loopless multigraphs on V vertices")
    g.add_argument("--vertices", type=int, required=True)
    g.add_argument("--terms", type=int, default=15)
    g.add_argument("--weight", choices=("at-least-one-edge", "count-underlying"), default="at-least-one-edge")

    c = sub.add_parser("components", help="counts of graphs with k components")
    c.add_argument("--base", default="simple", help="simple, multigraph, or a pair-table file")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--max-e", type=int, default=10)
    c.add_argument("--max-v", type=int, default=10)
    c.add_argument("--format", choices=("csv", "pairs"), default="csv")

    v = sub.add_parser("verify", help="recompute bundled table values and report differences")
    v.add_argument("--scope", choices=("all", "census", "gf", "mset"), default="all")
    v.add_argument("--fixtures", help="alternative fixture file (same JSON layout as the bundled one)")
    v.add_argument("--max-e", type=int, help="override both edge bounds for census cells")
    v.add_argument("--max-v", type=int, help="override both vertex bounds for census cells")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--budget", type=int)

    a = sub.add_parser("ancillary", help="write G.V.E.txt files of connected simple graphs")
    a.add_argument("--vertices", type=int, required=True)
    a.add_argument("--out", required=True)
    return p


def cmd_table(args) -> int:
    try:
        pattern = parse_pattern(args.tags)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    bound = DEFAULT_UNDIRECTED_BOUND if pattern.directed is False else DEFAULT_DIRECTED_BOUND
    max_e = bound if args.max_e is None else args.max_e
    max_v = bound if args.max_v is None else args.max_v
    warning = impossible_warning(pattern)
    if warning:
        print(f"warning: {warning}", file=sys.stderr)
    try:
        table = census_table(pattern, args.labeled, max_e, max_v, budget=args.budget, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    sys.stdout.write(table.render(args.format))
    return EXIT_OK


def cmd_gf(args) -> int:
    if not 2 <= args.vertices <= 7:
        raise UsageError("--vertices must lie in 2..7")
    if args.terms < 0:
        raise UsageError("--terms must be non-negative")
    f = connected_multigraph_gf(args.vertices, args.weight)
    print(f)
    print(",".join(str(c) for c in f.series(args.terms)))
    return EXIT_OK


def _load_base(source: str, max_e: int, max_v: int) -> PairTable:
    if source in ("simple", "multigraph"):
        return graph_base(source, max_e, max_v)
    path = Path(source)
    if not path.exists():
        raise UsageError(f"base {source!r} is neither simple, multigraph nor a readable file")
    return PairTable.from_text(path.read_text())


def cmd_components(args) -> int:
    if args.k < 1 or args.max_e < 0 or args.max_v < 1:
        raise UsageError("need k >= 1, max-e >= 0, max-v >= 1")
    base = _load_base(args.base, args.max_e, args.max_v)
    try:
        table = k_component_table(base, args.k, args.max_e, args.max_v)
    except MissingCell as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(table.to_text() if args.format == "pairs" else table.to_csv(args.max_e, args.max_v))
    return EXIT_OK


def cmd_verify(args) -> int:
    fixtures = load_fixtures(args.fixtures)
    errata = load_errata(args.fixtures)
    bounds = Bounds()
    if args.max_e is not None:
        bounds = Bounds(args.max_e, bounds.directed_vertices, args.max_e, bounds.undirected_vertices)
    if args.max_v is not None:
        bounds = Bounds(bounds.directed_edges, args.max_v, bounds.undirected_edges, args.max_v)
    rep = verify(args.scope, fixtures, bounds, errata=errata, budget=args.budget, jobs=args.jobs)
    for m in rep.mismatches:
        print(f"MISMATCH {m}")
    for m in rep.errata:
        print(f"ERRATUM {m} (printed value known to be wrong)")
    print(f"checked {rep.checked} cells, {len(rep.mismatches)} mismatches, "
          f"{len(rep.errata)} known errata, {rep.skipped} outside bounds")
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_ancillary(args) -> int:
    v = args.vertices
    if not 2 <= v <= 7:
        raise UsageError("--vertices must lie in 2..7")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for e in range(v - 1, comb(v, 2) + 1):
        records = underlying_records(v, e)
        (out / f"G.{v}.{e}.txt").write_text(write_underlying_records(v, e, records))
        print(f"G.{v}.{e}.txt {len(records)}")
    return EXIT_OK


COMMANDS = {
    "table": cmd_table,
    "gf": cmd_gf,
    "components": cmd_components,
    "verify": cmd_verify,
    "ancillary": cmd_ancillary,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_join_tag_values(argv))
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
