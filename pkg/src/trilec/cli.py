"""Command-line front end: ``trilec <subcommand> ...``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import catalog as cat
from .cache import TriangulationCache
from .edge_color import chromatic_index, exhaustive_choosability, find_list_edge_coloring
from .enumeration import DegreeTriple, filter_by_profile
from .errors import TrilecError
from .factor_sign import signed_factorization_sum
from .formats import FORMATS, format_graph, format_lists, parse_graph_file, parse_lists
from .plane import PlaneTriangulation
from .report import run_verify_paper


def _graph(path: str, fmt: str):
    obj = parse_graph_file(path, fmt)
    return obj.graph() if isinstance(obj, PlaneTriangulation) else obj


def cmd_atsum(args) -> int:
    r = signed_factorization_sum(_graph(args.file, args.format), workers=args.workers)
    print(f"value {r.value}")
    print(f"factorizations {r.factorization_count}")
    return 0


def cmd_enum(args) -> int:
    cache = TriangulationCache(args.cache_dir) if args.cache_dir else TriangulationCache()
    s = cache.get(args.n)
    if args.profile:
        try:
            a, b, c = (int(x) for x in args.profile.split(","))
        except ValueError:
            raise TrilecError(f"--profile expects three integers a,b,c, got {args.profile!r}") from None
        s = filter_by_profile(s, DegreeTriple(a, b, c))
    print(f"n {args.n} count {len(s)}")
    if args.export:
        for _, t in sorted(s.members.items()):
            print(format_graph(t, args.export).rstrip("\n"))
    return 0


def cmd_color(args) -> int:
    g = _graph(args.graph, args.format)
    lists = parse_lists(Path(args.lists).read_text(encoding="utf-8"))
    col = find_list_edge_coloring(g, lists)
    if col is None:
        print("no colouring")
        return 1
    sys.stdout.write(format_lists({e: [c] for e, c in col.items()}))
    return 0


def cmd_chromatic_index(args) -> int:
    print(chromatic_index(_graph(args.file, args.format)))
    return 0


def cmd_choosable(args) -> int:
    ok = exhaustive_choosability(_graph(args.graph, args.format), args.k)
    print("true" if ok else "false")
    return 0


def cmd_catalog(args) -> int:
    entry = cat.catalog_graph(args.name)
    if args.export:
        obj = entry.embedding if args.export.upper() == "ROT" else entry.graph
        if obj is None:
            raise TrilecError(f"{args.name} has no embedding to export")
        print(format_graph(obj, args.export).rstrip("\n"))
    else:
        g = entry.graph
        print(f"{entry.name}: {g.order} vertices, {g.size} edges, {entry.provenance}")
    return 0


def cmd_verify_paper(args) -> int:
    cache = TriangulationCache(args.cache_dir) if args.cache_dir else TriangulationCache()
    log = (lambda msg: print(msg, file=sys.stderr)) if args.verbose else None
    report = run_verify_paper(
        seed=args.seed, trials=args.trials, skip_enum=args.skip_enum, workers=args.workers, cache=cache, log=log
    )
    sys.stdout.write(report.to_text())
    if args.json:
        Path(args.json).write_text(report.to_json(timings=args.timings), encoding="utf-8")
    return 0 if report.status == "PASS" else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trilec", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    fmt_help = f"input format: AUTO or one of {', '.join(FORMATS)}"

    s = sub.add_parser("atsum", help="signed 1-factorization sum of a regular graph")
    s.add_argument("file")
    s.add_argument("--format", default="AUTO", help=fmt_help)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_atsum)

    s = sub.add_parser("enum", help="enumerate triangulations on n vertices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--profile", help="n3,n4,n5 degree counts")
    s.add_argument("--export", choices=FORMATS, help="print every member in this format")
    s.add_argument("--cache-dir")
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("color", help="find a list edge colouring")
    s.add_argument("--graph", required=True)
    s.add_argument("--lists", required=True)
    s.add_argument("--format", default="AUTO", help=fmt_help)
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("chromatic-index", help="exact chromatic index")
    s.add_argument("file")
    s.add_argument("--format", default="AUTO", help=fmt_help)
    s.set_defaults(func=cmd_chromatic_index)

    s = sub.add_parser("choosable", help="exhaustive k-edge-choosability (at most 6 edges)")
    s.add_argument("--graph", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--format", default="AUTO", help=fmt_help)
    s.set_defaults(func=cmd_choosable)

    s = sub.add_parser("catalog", help="show or export a named graph")
    s.add_argument("name", choices=cat.NAMES)
    s.add_argument("--export", choices=FORMATS)
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("verify-paper", help="run every claim check and report")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--skip-enum", action="store_true", help="use cached enumerations only")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--json", help="write the JSON report here")
    s.add_argument("--timings", action="store_true", help="include elapsed times in the JSON")
    s.add_argument("--cache-dir")
    s.add_argument("-v", "--verbose", action="store_true")
    s.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TrilecError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
