"""Adjacency-matrix graphs stored as one bitstring row per vertex."""
from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Iterator, Optional, Sequence, TextIO, Union

import numpy as np

from .bitset import BitSet, iter_bits

if TYPE_CHECKING:
    from .ordering import VertexOrdering


class GraphParseError(ValueError):
    """Malformed graph input; ``lineno`` is 1-based when known."""

    def __init__(self, message: str, lineno: Optional[int] = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class BitGraph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` and ``comp[v]`` are int bitmasks: the neighbours of ``v`` and
    its non-neighbours other than ``v`` itself. ``labels[i]`` is the vertex id
    in the graph the data was originally loaded from (0-based), so cliques
    found on a renumbered copy can be mapped back.
    """

    __slots__ = ("n", "adj", "comp", "labels")

    def __init__(
        self,
        n: int,
        adj: Sequence[int],
        labels: Optional[Sequence[int]] = None,
    ):
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        self.n = n
        self.adj = tuple(adj)
        self.labels = tuple(range(n)) if labels is None else tuple(labels)
        if len(self.labels) != n:
            raise ValueError("labels must have one entry per vertex")
        self.comp = complement_rows(n, self.adj)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence[int]] = None,
    ) -> "BitGraph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    @classmethod
    def from_dense(cls, matrix: np.ndarray, labels: Optional[Sequence[int]] = None) -> "BitGraph":
        """Build from a symmetric boolean matrix; the diagonal is ignored."""
        mat = np.asarray(matrix, dtype=bool).copy()
        n = mat.shape[0]
        np.fill_diagonal(mat, False)
        packed = np.packbits(mat, axis=1, bitorder="little")
        rows = [int.from_bytes(packed[v].tobytes(), "little") for v in range(n)]
        return cls(n, rows, labels)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def density(self) -> float:
        if self.n < 2:
            return 0.0
        return self.m / (self.n * (self.n - 1) / 2)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> BitSet:
        return BitSet(self.n, self.adj[v])

    def non_neighbors(self, v: int) -> BitSet:
        return BitSet(self.n, self.comp[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self.labels == other.labels

    def __repr__(self) -> str:
        return f"BitGraph(n={self.n}, m={self.m})"


def complement_rows(n: int, adj: Sequence[int]) -> tuple[int, ...]:
    full = (1 << n) - 1
    return tuple(full & ~(row | (1 << v)) for v, row in enumerate(adj))


def graph_complement_rows(g: BitGraph) -> BitGraph:
    """Copy of ``g`` with complement rows rebuilt from ``adj``."""
    return BitGraph(g.n, g.adj, g.labels)


def check_invariants(g: BitGraph) -> None:
    """Raise AssertionError if symmetry, irreflexivity or complement consistency fail."""
    full = (1 << g.n) - 1
    for v in range(g.n):
        row = g.adj[v]
        assert row >> g.n == 0, f"row {v} has bits beyond n"
        assert not (row >> v) & 1, f"self-loop at {v}"
        for u in iter_bits(row):
            assert (g.adj[u] >> v) & 1, f"asymmetric edge ({v}, {u})"
        assert g.comp[v] & row == 0
        assert g.comp[v] | row | (1 << v) == full


# -- ingestion ---------------------------------------------------------------

def _lines(source: Union[str, TextIO, Path]) -> Iterable[str]:
    if isinstance(source, Path):
        return source.read_text().splitlines()
    if isinstance(source, str):
        return io.StringIO(source)
    return source


def graph_from_dimacs(source: Union[str, TextIO, Path]) -> BitGraph:
    """Parse DIMACS ASCII clique format (``p edge n m`` / ``e u v``).

    Duplicate edges and self-loops are tolerated; the declared edge count
    is not checked.
    """
    n: Optional[int] = None
    rows: list[int] = []
    lineno = 0
    for lineno, raw in enumerate(_lines(source), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphParseError(f"malformed problem line {raw.strip()!r}", lineno)
            try:
                n = int(tokens[2])
                int(tokens[3])
            except ValueError:
                raise GraphParseError(f"malformed problem line {raw.strip()!r}", lineno) from None
            if n < 0:
                raise GraphParseError("negative vertex count", lineno)
            rows = [0] * n
        elif kind == "e":
            if n is None:
                raise GraphParseError("edge before problem line", lineno)
            if len(tokens) != 3:
                raise GraphParseError(f"malformed edge line {raw.strip()!r}", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphParseError(f"malformed edge line {raw.strip()!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"vertex out of range 1..{n} in {raw.strip()!r}", lineno)
            if u != v:
                rows[u - 1] |= 1 << (v - 1)
                rows[v - 1] |= 1 << (u - 1)
        else:
            raise GraphParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise GraphParseError("missing problem line", lineno or None)
    return BitGraph(n, rows)


def graph_from_edge_list(source: Union[str, TextIO, Path], index_base: int = 0) -> BitGraph:
    """Parse ``u v`` lines (``#`` comments). Vertex count is the largest id seen."""
    if index_base not in (0, 1):
        raise ValueError("index_base must be 0 or 1")
    edges = []
    top = -1
    for lineno, raw in enumerate(_lines(source), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]) - index_base, int(tokens[1]) - index_base
        except ValueError:
            raise GraphParseError(f"malformed edge {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError(f"vertex id below {index_base} in {line!r}", lineno)
        edges.append((u, v))
        top = max(top, u, v)
    return BitGraph.from_edges(top + 1, edges)


def write_dimacs(g: BitGraph, out: TextIO, comment: Optional[str] = None) -> None:
    if comment:
        for line in comment.splitlines():
            out.write(f"c {line}\n")
    out.write(f"p edge {g.n} {g.m}\n")
    for u, v in g.edges():
        out.write(f"e {u + 1} {v + 1}\n")


def to_dimacs(g: BitGraph, comment: Optional[str] = None) -> str:
    buf = io.StringIO()
    write_dimacs(g, buf, comment)
    return buf.getvalue()


# -- generators --------------------------------------------------------------

def graph_random(n: int, p: float, seed: int) -> BitGraph:
    """Uniform G(n, p).

    One raw 64-bit PCG64 draw per unordered pair ``u < v`` in lexicographic
    order; the pair is an edge when the top 53 bits, read as a fraction,
    fall below ``p``. Identical ``(n, p, seed)`` gives an identical graph.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    npairs = n * (n - 1) // 2
    raw = np.random.PCG64(seed & 0xFFFFFFFFFFFFFFFF).random_raw(npairs)
    hit = (raw >> np.uint64(11)) < np.uint64(int(p * (1 << 53)))
    iu, ju = np.triu_indices(n, 1)
    mat = np.zeros((n, n), dtype=bool)
    mat[iu[hit], ju[hit]] = True
    mat |= mat.T
    return BitGraph.from_dense(mat)


def graph_moon_moser(k: int) -> BitGraph:
    """Complete k-partite graph with parts ``{3i, 3i+1, 3i+2}``; it has 3**k maximal cliques."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = 3 * k
    full = (1 << n) - 1
    rows = [full & ~(0b111 << (3 * (v // 3))) for v in range(n)]
    return BitGraph(n, rows)


def graph_apply_permutation(g: BitGraph, ordering: "VertexOrdering") -> BitGraph:
    """Renumber so vertex ``ordering.order[i]`` becomes vertex ``i``.

    Edge ``(u, v)`` of ``g`` becomes ``(phi[u], phi[v])``; labels follow the
    vertices, so ``h.labels[phi[u]] == g.labels[u]``.
    """
    order = list(ordering.order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("ordering is not a permutation of the graph's vertices")
    phi = [0] * g.n
    for pos, v in enumerate(order):
        phi[v] = pos
    rows = []
    for v in order:
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << phi[u]
        rows.append(row)
    return BitGraph(g.n, rows, [g.labels[v] for v in order])


# -- sources -----------------------------------------------------------------

@dataclass(frozen=True)
class GraphSource:
    kind: str  # "dimacs", "edge-list" or "random"
    path: Optional[str] = None
    n: int = 0
    p: float = 0.0
    seed: int = 0
    index_base: int = 0

    def __post_init__(self):
        if self.kind not in ("dimacs", "edge-list", "random"):
            raise ValueError(f"unknown graph source kind {self.kind!r}")
        if self.kind == "random":
            if self.n < 1:
                raise ValueError("n must be at least 1")
            if not 0.0 <= self.p <= 1.0:
                raise ValueError("p must lie in [0, 1]")
        elif self.path is None:
            raise ValueError(f"{self.kind} source needs a path")

    def describe(self) -> str:
        if self.kind == "random":
            return f"random(n={self.n},p={self.p},seed={self.seed})"
        return f"{self.kind}:{self.path}"

    def load(self) -> BitGraph:
        if self.kind == "random":
            return graph_random(self.n, self.p, self.seed)
        path = Path(self.path)
        if self.kind == "dimacs":
            return graph_from_dimacs(path)
        return graph_from_edge_list(path, self.index_base)
