"""Command-line front end: ``run``, ``bench``, ``verify`` and ``gen``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Optional, Sequence

from .bench import default_jobs, format_human, mean_rows, random_sources, run_matrix, write_csv
from .enumeration import (
    STRATEGY_NAMES,
    CliqueCollector,
    CliqueStream,
    TimeLimitExceeded,
    enumerate_cliques,
)
from .graph import GraphParseError, GraphSource, graph_moon_moser, to_dimacs
from .oracle import MAX_ORACLE_N, oracle_enumerate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_TIMEOUT = 3


class UsageError(Exception):
    pass


def _positive(value: str) -> float:
    x = float(value)
    if x <= 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return x


def _add_input(p: argparse.ArgumentParser, random_many: bool = False) -> None:
    g = p.add_argument_group("input (exactly one)")
    g.add_argument("--dimacs", metavar="PATH", action="append" if random_many else None)
    g.add_argument("--edges", metavar="PATH", help="edge list, one 'u v' per line")
    g.add_argument("--index-base", type=int, choices=(0, 1), default=0)
    g.add_argument("--random", nargs=2, metavar=("N", "P"),
                   action="append" if random_many else None)
    p.add_argument("--seed", type=int, default=1)


def _algorithms(value: str) -> list[str]:
    if value == "all":
        return list(STRATEGY_NAMES)
    names = [v.strip() for v in value.split(",") if v.strip()]
    for name in names:
        if name not in STRATEGY_NAMES:
            raise UsageError(f"unknown algorithm {name!r}; choose from {', '.join(STRATEGY_NAMES)} or all")
    return names


def _parse_random(pair) -> tuple[int, float]:
    try:
        n, p = int(pair[0]), float(pair[1])
    except ValueError:
        raise UsageError(f"--random expects N P, got {' '.join(pair)}") from None
    if n < 1 or not 0.0 <= p <= 1.0:
        raise UsageError("--random needs N >= 1 and 0 <= P <= 1")
    return n, p


def _single_source(args) -> GraphSource:
    given = [x for x in (args.dimacs, args.edges, args.random) if x]
    if len(given) != 1:
        raise UsageError("give exactly one of --dimacs, --edges, --random")
    if args.dimacs:
        return GraphSource("dimacs", path=args.dimacs)
    if args.edges:
        return GraphSource("edge-list", path=args.edges, index_base=args.index_base)
    n, p = _parse_random(args.random)
    return GraphSource("random", n=n, p=p, seed=args.seed)


def _emit(rows, fmt: str, out, runs=None) -> None:
    if fmt == "csv":
        write_csv(out, runs if runs is not None else rows, [] if runs is None else rows)
    elif fmt == "json":
        items = [dict(kind="run", **asdict(r)) for r in (runs or [])]
        items += [dict(kind="mean" if runs is not None else "run", **asdict(r)) for r in rows]
        for item in items:
            out.write(json.dumps(item) + "\n")
    else:
        out.write(format_human(list(runs or []) + list(rows)) + "\n")


def _open_out(path: Optional[str]):
    return open(path, "w") if path else sys.stdout


def cmd_run(args) -> int:
    source = _single_source(args)
    names = _algorithms(args.algorithm)
    if len(names) != 1:
        raise UsageError("run takes a single algorithm")
    g = source.load()
    check = None
    sink = None
    clique_file = None
    if args.sink == "stream":
        sink = CliqueStream(sys.stdout)
    elif args.sink == "file":
        if not args.cliques_out:
            raise UsageError("--sink file needs --cliques-out")
        clique_file = open(args.cliques_out, "w")
        sink = CliqueStream(clique_file)
    if args.verify:
        if g.n > MAX_ORACLE_N:
            raise UsageError(f"--verify needs n <= {MAX_ORACLE_N}")
        check = CliqueCollector()
        inner_sink = sink
        sink = (lambda c: (check(c), inner_sink(c))) if inner_sink else check

    status = EXIT_OK
    try:
        stats = enumerate_cliques(g, names[0], sink, time_limit=args.time_limit,
                                  source=source.describe())
    except TimeLimitExceeded as exc:
        stats = exc.stats
        status = EXIT_TIMEOUT
    finally:
        if clique_file:
            clique_file.close()
    if check is not None and status == EXIT_OK and check.canonical() != oracle_enumerate(g):
        print("MISMATCH against oracle", file=sys.stderr)
        status = EXIT_MISMATCH
    stats_out = sys.stderr if args.sink == "stream" and not args.out else None
    out = stats_out or _open_out(args.out)
    try:
        _emit([stats], args.format, out)
    finally:
        if out not in (sys.stdout, sys.stderr):
            out.close()
    if status == EXIT_TIMEOUT:
        print(f"time limit of {args.time_limit}s exceeded; stats are partial", file=sys.stderr)
    return status


def cmd_bench(args) -> int:
    names = _algorithms(args.algorithm)
    if args.runs < 1:
        raise UsageError("--runs must be >= 1")
    seeds = range(args.seed, args.seed + args.runs)
    sources = []
    for pair in args.random or []:
        n, p = _parse_random(pair)
        sources += random_sources(n, p, seeds)
    for path in args.dimacs or []:
        sources.append(GraphSource("dimacs", path=path))
    if args.edges:
        sources.append(GraphSource("edge-list", path=args.edges, index_base=args.index_base))
    if not sources:
        raise UsageError("bench needs --random N P or --dimacs PATH")
    runs = run_matrix(sources, names, args.time_limit, args.jobs)
    means = mean_rows(runs)
    out = _open_out(args.out)
    try:
        _emit(means, args.format, out, runs=runs)
    finally:
        if out is not sys.stdout:
            out.close()
    if not all(r.completed for r in runs):
        print("some runs hit the time limit; their stats are partial", file=sys.stderr)
        return EXIT_TIMEOUT
    return EXIT_OK


def cmd_verify(args) -> int:
    source = _single_source(args)
    g = source.load()
    if g.n > MAX_ORACLE_N:
        raise UsageError(f"verify needs n <= {MAX_ORACLE_N}")
    expected = oracle_enumerate(g)
    bad = []
    for name in STRATEGY_NAMES:
        collector = CliqueCollector()
        enumerate_cliques(g, name, collector)
        if collector.canonical() != expected:
            bad.append(name)
    if bad:
        print(f"MISMATCH: {', '.join(bad)} (oracle has {len(expected)} cliques)")
        return EXIT_MISMATCH
    print(f"AGREE: {len(STRATEGY_NAMES)} strategies + oracle, {len(expected)} maximal cliques")
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.moon_moser is not None:
        g = graph_moon_moser(args.moon_moser)
        comment = f"moon-moser k={args.moon_moser}"
    else:
        if not args.random:
            raise UsageError("gen needs --random N P or --moon-moser K")
        n, p = _parse_random(args.random)
        source = GraphSource("random", n=n, p=p, seed=args.seed)
        g = source.load()
        comment = source.describe()
    out = _open_out(args.out)
    try:
        out.write(to_dimacs(g, comment))
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bitmce", description="Maximal clique enumeration.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="enumerate one graph with one algorithm")
    _add_input(run)
    run.add_argument("--algorithm", default="greedybb")
    run.add_argument("--sink", choices=("count", "stream", "file"), default="count")
    run.add_argument("--cliques-out", metavar="PATH")
    run.add_argument("--format", choices=("csv", "json", "human"), default="human")
    run.add_argument("--time-limit", type=_positive)
    run.add_argument("--verify", action="store_true", help="cross-check against the oracle")
    run.add_argument("--out", metavar="PATH", help="stats destination (default stdout)")
    run.set_defaults(func=cmd_run)

    bench = sub.add_parser("bench", help="graphs x seeds x algorithms, with mean rows")
    _add_input(bench, random_many=True)
    bench.add_argument("--runs", type=int, default=10)
    bench.add_argument("--algorithm", default="all")
    bench.add_argument("--format", choices=("csv", "json", "human"), default="csv")
    bench.add_argument("--time-limit", type=_positive)
    bench.add_argument("--jobs", type=int, default=default_jobs())
    bench.add_argument("--out", metavar="PATH")
    bench.set_defaults(func=cmd_bench)

    verify = sub.add_parser("verify", help="all algorithms against the brute-force oracle")
    _add_input(verify)
    verify.set_defaults(func=cmd_verify)

    gen = sub.add_parser("gen", help="write a generated graph as DIMACS")
    gen.add_argument("--random", nargs=2, metavar=("N", "P"))
    gen.add_argument("--moon-moser", type=int, metavar="K")
    gen.add_argument("--seed", type=int, default=1)
    gen.add_argument("--out", metavar="PATH")
    gen.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, GraphParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
