"""Benchmark matrix: graphs x seeds x strategies, with per-cell means."""
from __future__ import annotations

import csv
import os
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from typing import Iterable, Optional, Sequence, TextIO

from .enumeration import RunStats, TimeLimitExceeded, enumerate_cliques
from .graph import GraphSource

JOBS_ENV = "BITMCE_JOBS"


def default_jobs() -> int:
    return max(1, int(os.environ.get(JOBS_ENV, "1")))


@dataclass(frozen=True)
class BenchTask:
    source: GraphSource
    strategy: str
    time_limit: Optional[float] = None


def run_task(task: BenchTask) -> RunStats:
    g = task.source.load()
    try:
        return enumerate_cliques(
            g, task.strategy, time_limit=task.time_limit, source=task.source.describe()
        )
    except TimeLimitExceeded as exc:
        return exc.stats


def random_sources(n: int, p: float, seeds: Iterable[int]) -> list[GraphSource]:
    return [GraphSource("random", n=n, p=p, seed=s) for s in seeds]


def run_matrix(
    sources: Sequence[GraphSource],
    strategies: Sequence[str],
    time_limit: Optional[float] = None,
    jobs: int = 1,
) -> list[RunStats]:
    """Run every (source, strategy) pair; results come back in config order."""
    tasks = [BenchTask(src, s, time_limit) for src in sources for s in strategies]
    if jobs <= 1:
        return [run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_task, tasks))


def cell_key(source: str) -> str:
    """Group key for a source descriptor: random graphs drop their seed."""
    if source.startswith("random(") and ",seed=" in source:
        return source.split(",seed=")[0] + ")"
    return source


def mean_rows(results: Sequence[RunStats]) -> list[RunStats]:
    """Arithmetic means of counts, steps and times per (cell, strategy)."""
    groups: "OrderedDict[tuple[str, str], list[RunStats]]" = OrderedDict()
    for r in results:
        groups.setdefault((cell_key(r.source), r.strategy), []).append(r)
    out = []
    for (cell, strategy), rows in groups.items():
        k = len(rows)
        out.append(
            RunStats(
                strategy=strategy,
                source=f"{cell} mean/{k}",
                n=rows[0].n,
                m=sum(r.m for r in rows) / k,
                density=sum(r.density for r in rows) / k,
                clique_count=sum(r.clique_count for r in rows) / k,
                steps=sum(r.steps for r in rows) / k,
                max_clique_size=sum(r.max_clique_size for r in rows) / k,
                elapsed=sum(r.elapsed for r in rows) / k,
                prep=sum(r.prep for r in rows) / k,
                completed=all(r.completed for r in rows),
            )
        )
    return out


CSV_HEADER = ["kind"] + RunStats.header()


def write_csv(out: TextIO, runs: Sequence[RunStats], means: Sequence[RunStats] = ()) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in runs:
        w.writerow(["run"] + r.to_row())
    for r in means:
        w.writerow(["mean"] + r.to_row())


def read_csv(inp: TextIO) -> list[tuple[str, RunStats]]:
    return [(row["kind"], RunStats.from_row(row)) for row in csv.DictReader(inp)]


def format_human(rows: Sequence[RunStats]) -> str:
    cols = ["strategy", "source", "n", "m", "clique_count", "steps",
            "max_clique_size", "elapsed", "prep", "completed"]

    def cell(r, c):
        v = getattr(r, c)
        if isinstance(v, float):
            return f"{v:.4f}" if c in ("elapsed", "prep") else f"{v:.1f}"
        return str(v)

    table = [cols] + [[cell(r, c) for c in cols] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
    return "\n".join(
        "  ".join(v.ljust(wd) for v, wd in zip(row, widths)).rstrip() for row in table
    )


def expected_maximal_cliques(n: int, p: float) -> float:
    """Expected number of maximal cliques of G(n, p).

    A k-set is a maximal clique with probability
    ``p**C(k,2) * (1 - p**k)**(n-k)``.
    """
    from math import comb

    return sum(comb(n, k) * p ** comb(k, 2) * (1 - p**k) ** (n - k) for k in range(1, n + 1))


@dataclass
class CellComparison:
    n: int
    p: float
    status: str  # "decided", "timeout" or "skipped"
    mean_a: float = float("nan")
    mean_b: float = float("nan")
    runs: int = 0

    @property
    def a_wins(self) -> bool:
        return self.status == "decided" and self.mean_a <= self.mean_b


def compare_speed(
    cells: Sequence[tuple[int, float]],
    a: str = "greedybb",
    b: str = "tomitabb",
    seeds: Sequence[int] = tuple(range(1, 11)),
    budget: float = 600.0,
    need: Optional[int] = None,
    log=None,
) -> list[CellComparison]:
    """Mean search time of ``a`` vs ``b`` per (n, p) cell, on one worker.

    Cells run cheapest first (by expected clique count). Both strategies
    share one renumbered graph per seed, so only search time is compared.
    Each run may use whatever is left of ``budget``; a cell whose run
    overruns is marked ``timeout`` and the remaining cells ``skipped``.
    With ``need`` set, the matrix also stops once that many cells favour
    ``a``, or once that count can no longer be reached.
    """
    import time

    from .ordering import prepare
    from .graph import graph_random

    deadline = time.perf_counter() + budget
    order = sorted(cells, key=lambda c: expected_maximal_cliques(*c))
    results = {c: CellComparison(c[0], c[1], "skipped") for c in cells}
    wins = 0
    stop = False
    for idx, (n, p) in enumerate(order):
        if stop:
            break
        if need is not None and (wins >= need or wins + len(order) - idx < need):
            break
        ta = tb = 0.0
        cell = results[(n, p)]
        for seed in seeds:
            h, _ = prepare(graph_random(n, p, seed))
            try:
                for name in (a, b):
                    left = deadline - time.perf_counter()
                    if left <= 0:
                        raise TimeLimitExceeded(RunStats(name, "", n, 0, 0.0))
                    s = enumerate_cliques(h, name, time_limit=left, prepared=True)
                    if name == a:
                        ta += s.elapsed
                    else:
                        tb += s.elapsed
            except TimeLimitExceeded:
                cell.status = "timeout"
                stop = True
                break
            cell.runs += 1
        if cell.status != "timeout":
            cell.status = "decided"
            cell.mean_a = ta / len(seeds)
            cell.mean_b = tb / len(seeds)
            wins += cell.a_wins
        if log:
            log(f"n={n} p={p} {cell.status} {a}={cell.mean_a:.4f}s {b}={cell.mean_b:.4f}s")
    return [results[c] for c in cells]
