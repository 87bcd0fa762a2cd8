"""Bron-Kerbosch maximal clique enumeration over bitstring sets.

A single recursion drives every variant. Each strategy only decides which
vertices of ``P`` to branch on at a node (``P`` itself for plain BK,
``P \\ N(p)`` plus ``p`` if ``p`` is in ``P`` for the pivoting variants).
Inside the search ``P`` and ``X`` are plain int bitmasks; branching walks
the branch set from its lowest bit upwards.
"""
from __future__ import annotations

import json
import sys
import time
from dataclasses import asdict, dataclass, fields
from typing import Callable, Optional, TextIO, Union

from .bitset import BitSet, WORD_BITS, lowest_bit
from .graph import BitGraph
from .ordering import VertexOrdering, ordering_degeneracy, prepare

_WORD = (1 << WORD_BITS) - 1

Clique = tuple[int, ...]
Sink = Callable[[Clique], None]
Probe = Callable[[int, int, list], None]


@dataclass(frozen=True)
class Strategy:
    name: str
    pivot: str  # none | tomita | naude | greedy | greedy-tomita | greedy-naude
    ordering: str  # natural | max-degree-first | top-level


STRATEGIES = {
    s.name: s
    for s in (
        Strategy("bk-plain", "none", "natural"),
        Strategy("tomita", "tomita", "natural"),
        Strategy("naude", "naude", "natural"),
        Strategy("bk-ordering", "tomita", "top-level"),
        Strategy("greedybb", "greedy", "max-degree-first"),
        Strategy("greedybbtx", "greedy-tomita", "max-degree-first"),
        Strategy("greedybbnx", "greedy-naude", "max-degree-first"),
        Strategy("tomitabb", "tomita", "max-degree-first"),
    )
}
STRATEGY_NAMES = tuple(STRATEGIES)


def get_strategy(name: Union[str, Strategy]) -> Strategy:
    if isinstance(name, Strategy):
        return name
    try:
        return STRATEGIES[name]
    except KeyError:
        raise ValueError(
            f"unknown strategy {name!r}; choose from {', '.join(STRATEGY_NAMES)}"
        ) from None


@dataclass
class RunStats:
    strategy: str
    source: str
    n: int
    m: int
    density: float
    clique_count: int = 0
    steps: int = 0
    max_clique_size: int = 0
    elapsed: float = 0.0
    prep: float = 0.0
    completed: bool = True

    @classmethod
    def header(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def to_row(self) -> list[str]:
        return [str(getattr(self, f)) for f in self.header()]

    @classmethod
    def from_row(cls, row: dict) -> "RunStats":
        conv = {}
        for f in fields(cls):
            raw = row[f.name]
            if f.type in ("int", int):
                try:
                    conv[f.name] = int(raw)
                except ValueError:
                    conv[f.name] = float(raw)
            elif f.type in ("float", float):
                conv[f.name] = float(raw)
            elif f.type in ("bool", bool):
                conv[f.name] = raw in (True, "True", "true", "1")
            else:
                conv[f.name] = raw
        return cls(**conv)

    def to_json(self) -> str:
        return json.dumps(asdict(self))


class TimeLimitExceeded(RuntimeError):
    """Raised when a run overruns its time limit; ``stats`` holds the partial counts."""

    def __init__(self, stats: RunStats):
        self.stats = stats
        super().__init__(
            f"time limit exceeded after {stats.elapsed:.3f}s "
            f"({stats.steps} steps, {stats.clique_count} cliques)"
        )


# -- pivot rules on raw masks --------------------------------------------------

def _scan_tomita(P: int, cand: int, adj) -> int:
    """Vertex of ``cand`` with the most neighbours in ``P``; first one wins ties."""
    best = -1
    pivot = -1
    while cand:
        low = cand & -cand
        u = low.bit_length() - 1
        score = (P & adj[u]).bit_count()
        if score > best:
            best = score
            pivot = u
        cand ^= low
    return pivot


def _scan_naude(P: int, cand: int, adj) -> int:
    """Vertex of ``cand`` with the fewest non-neighbours in ``P`` (itself included).

    Non-neighbours are counted a word at a time and a candidate is dropped as
    soon as it cannot beat the best so far. A candidate with no
    non-neighbours in ``P`` ends the scan.
    """
    best = P.bit_count() + 1
    pivot = -1
    while cand:
        low = cand & -cand
        u = low.bit_length() - 1
        cand ^= low
        rest = P & ~adj[u]
        count = 0
        while rest:
            count += (rest & _WORD).bit_count()
            if count >= best:
                break
            rest >>= WORD_BITS
        else:
            best = count
            pivot = u
            if count == 0:
                break
    return pivot


def _branch_plain(P, X, adj, comp):
    return P


def _branch_tomita(P, X, adj, comp):
    p = _scan_tomita(P, P | X, adj)
    return (P & comp[p]) | (P & (1 << p))


def _branch_naude(P, X, adj, comp):
    p = _scan_naude(P, P | X, adj)
    return (P & comp[p]) | (P & (1 << p))


def _branch_greedy(P, X, adj, comp):
    if X:
        return P & comp[(X & -X).bit_length() - 1]
    low = P & -P
    return (P & comp[low.bit_length() - 1]) | low


def _branch_greedy_tomita(P, X, adj, comp):
    if X:
        return P & comp[_scan_tomita(P, X, adj)]
    low = P & -P
    return (P & comp[low.bit_length() - 1]) | low


def _branch_greedy_naude(P, X, adj, comp):
    if X:
        return P & comp[_scan_naude(P, X, adj)]
    low = P & -P
    return (P & comp[low.bit_length() - 1]) | low


_BRANCH_RULES = {
    "none": _branch_plain,
    "tomita": _branch_tomita,
    "naude": _branch_naude,
    "greedy": _branch_greedy,
    "greedy-tomita": _branch_greedy_tomita,
    "greedy-naude": _branch_greedy_naude,
}


# -- public pivot surface ------------------------------------------------------

def _require_nonempty(P: BitSet, X: BitSet) -> None:
    if P.capacity != X.capacity:
        raise ValueError("P and X capacities differ")
    if not (P.bits | X.bits):
        raise ValueError("pivot requested for empty P and X")


def pivot_tomita(P: BitSet, X: BitSet, g: BitGraph) -> int:
    """Vertex of P ∪ X with the most neighbours in P (smaller index on ties)."""
    _require_nonempty(P, X)
    return _scan_tomita(P.bits, P.bits | X.bits, g.adj)


def pivot_naude(P: BitSet, X: BitSet, g: BitGraph) -> int:
    _require_nonempty(P, X)
    return _scan_naude(P.bits, P.bits | X.bits, g.adj)


def pivot_greedy(P: BitSet, X: BitSet, variant: str, g: BitGraph) -> int:
    """Greedy pivot on a graph numbered in ordering position.

    ``bb`` takes the first vertex of X; ``bbtx``/``bbnx`` score every vertex
    of X. With X empty all three take the first vertex of P.
    """
    _require_nonempty(P, X)
    if variant not in ("bb", "bbtx", "bbnx"):
        raise ValueError(f"unknown greedy variant {variant!r}")
    if not X.bits:
        return lowest_bit(P.bits)
    if variant == "bb":
        return lowest_bit(X.bits)
    if variant == "bbtx":
        return _scan_tomita(P.bits, X.bits, g.adj)
    return _scan_naude(P.bits, X.bits, g.adj)


def branch_set(P: BitSet, p: int, g: BitGraph) -> BitSet:
    """``P \\ N(p)``, realised as ``P AND comp[p]`` plus ``p`` when ``p ∈ P``."""
    bits = P.bits & g.comp[p]
    if p in P:
        bits |= 1 << p
    return BitSet(P.capacity, bits)


def pivot_score(P: BitSet, p: int, g: BitGraph) -> int:
    return (P.bits & g.adj[p]).bit_count()


# -- sinks ---------------------------------------------------------------------

class CliqueCollector:
    """Sink that keeps every clique; ``canonical()`` gives the sorted set."""

    def __init__(self):
        self.cliques: list[Clique] = []

    def __call__(self, clique: Clique) -> None:
        self.cliques.append(clique)

    def canonical(self) -> list[Clique]:
        return sorted(self.cliques)


class CliqueStream:
    """Writes one clique per line as ascending 1-based labels."""

    def __init__(self, out: TextIO):
        self.out = out

    def __call__(self, clique: Clique) -> None:
        self.out.write(" ".join(str(v + 1) for v in clique))
        self.out.write("\n")


def assert_bk_invariant(g: BitGraph) -> Probe:
    """Probe checking P ∩ X = ∅, R a clique and P ∪ X ⊆ N(r) for all r in R."""

    def probe(P: int, X: int, R: list) -> None:
        assert P & X == 0, "P and X overlap"
        common = P | X
        for i, r in enumerate(R):
            assert g.adj[r] & common == common, "P ∪ X not adjacent to R"
            for s in R[:i]:
                assert (g.adj[r] >> s) & 1, "R is not a clique"

    return probe


# -- search --------------------------------------------------------------------

class _Search:
    """Mutable state of one enumeration: counters, R, sink and the limits."""

    def __init__(self, g: BitGraph, branch, sink, probe, time_limit):
        self.g = g
        self.branch = branch
        self.sink = sink
        self.probe = probe
        self.deadline = None if time_limit is None else time.perf_counter() + time_limit
        self.steps = 0
        self.count = 0
        self.max_size = 0

    def run(self, P: int, X: int, R: list) -> None:
        adj = self.g.adj
        comp = self.g.comp
        labels = self.g.labels
        branch = self.branch
        sink = self.sink
        probe = self.probe
        deadline = self.deadline
        perf = time.perf_counter
        state = self

        def expand(P, X):
            state.steps += 1
            if probe is not None:
                probe(P, X, R)
            if deadline is not None and not state.steps & 0x3FF and perf() > deadline:
                raise _Timeout
            if not P:
                if not X:
                    state.count += 1
                    if len(R) > state.max_size:
                        state.max_size = len(R)
                    if sink is not None:
                        sink(tuple(sorted(labels[v] for v in R)))
                return
            L = branch(P, X, adj, comp)
            while L:
                low = L & -L
                v = low.bit_length() - 1
                R.append(v)
                expand(P & adj[v], X & adj[v])
                R.pop()
                P ^= low
                X |= low
                L ^= low

        expand(P, X)


class _Timeout(Exception):
    pass


def _ensure_recursion(depth: int) -> None:
    need = depth + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def _stats(strategy: str, g: BitGraph, source: str) -> RunStats:
    return RunStats(strategy, source, g.n, g.m, g.density)


def _finish(stats: RunStats, search: _Search, started: float, completed: bool) -> RunStats:
    stats.elapsed = time.perf_counter() - started
    stats.steps = search.steps
    stats.clique_count = search.count
    stats.max_clique_size = search.max_size
    stats.completed = completed
    return stats


def enumerate_cliques(
    g: BitGraph,
    strategy: Union[str, Strategy] = "greedybb",
    sink: Optional[Sink] = None,
    *,
    time_limit: Optional[float] = None,
    top_ordering: Optional[VertexOrdering] = None,
    inner: Union[str, Strategy] = "tomita",
    probe: Optional[Probe] = None,
    prepared: bool = False,
    source: str = "",
) -> RunStats:
    """Enumerate every maximal clique of ``g`` once.

    ``sink`` receives each clique as a sorted tuple of ``g.labels`` entries;
    with ``sink=None`` cliques are only counted. Strategies that need the
    maximum-degree-first numbering apply it here unless ``prepared`` says
    ``g`` already carries it. ``top_ordering`` and ``inner`` only affect
    ``bk-ordering``. ``elapsed`` covers the search alone, ``prep`` the
    renumbering.

    Raises :class:`TimeLimitExceeded` (carrying partial stats) when
    ``time_limit`` seconds pass before the search finishes.
    """
    s = get_strategy(strategy)
    if s.ordering == "top-level":
        return run_bk_ordering(
            g, top_ordering, inner, sink,
            time_limit=time_limit, probe=probe, source=source, name=s.name,
        )
    stats = _stats(s.name, g, source)
    t0 = time.perf_counter()
    if s.ordering == "max-degree-first" and not prepared:
        g, _ = prepare(g)
    stats.prep = time.perf_counter() - t0

    search = _Search(g, _BRANCH_RULES[s.pivot], sink, probe, time_limit)
    _ensure_recursion(g.n)
    started = time.perf_counter()
    if g.n == 0:
        return _finish(stats, search, started, True)
    try:
        search.run((1 << g.n) - 1, 0, [])
    except _Timeout:
        raise TimeLimitExceeded(_finish(stats, search, started, False)) from None
    return _finish(stats, search, started, True)


def run_bk_ordering(
    g: BitGraph,
    top_ordering: Optional[VertexOrdering] = None,
    inner: Union[str, Strategy] = "tomita",
    sink: Optional[Sink] = None,
    *,
    time_limit: Optional[float] = None,
    probe: Optional[Probe] = None,
    source: str = "",
    name: str = "bk-ordering",
) -> RunStats:
    """One pivoting subproblem per vertex, taken in ``top_ordering``.

    The subproblem of ``v`` starts from ``R = {v}``, ``P`` = neighbours
    later in the ordering and ``X`` = neighbours earlier. The default
    ordering is a degeneracy ordering; ``inner`` picks the pivot rule.
    """
    stats = _stats(name, g, source)
    t0 = time.perf_counter()
    if top_ordering is None:
        top_ordering = ordering_degeneracy(g)
    if len(top_ordering) != g.n:
        raise ValueError("top-level ordering does not match the graph")
    stats.prep = time.perf_counter() - t0

    inner_s = get_strategy(inner)
    if inner_s.ordering == "top-level":
        raise ValueError("inner strategy must be a pivoting rule")
    search = _Search(g, _BRANCH_RULES[inner_s.pivot], sink, probe, time_limit)
    _ensure_recursion(g.n)
    started = time.perf_counter()
    later = (1 << g.n) - 1
    try:
        for v in top_ordering.order:
            later ^= 1 << v
            row = g.adj[v]
            search.run(row & later, row & ~later, [v])
    except _Timeout:
        raise TimeLimitExceeded(_finish(stats, search, started, False)) from None
    return _finish(stats, search, started, True)


def maximal_cliques(g: BitGraph, strategy: Union[str, Strategy] = "greedybb", **kwargs) -> list[Clique]:
    """Canonical clique set: each clique ascending, cliques sorted."""
    collector = CliqueCollector()
    enumerate_cliques(g, strategy, collector, **kwargs)
    return collector.canonical()
