"""Static vertex orderings: maximum-degree-first and degeneracy."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .bitset import iter_bits
from .graph import BitGraph, graph_apply_permutation

HEURISTICS = ("max-degree-first", "degeneracy", "identity")


@dataclass(frozen=True)
class VertexOrdering:
    """Position -> vertex (``order``) together with its inverse ``phi``."""

    order: tuple[int, ...]
    heuristic: str = "identity"
    reversed: bool = False
    # degeneracy orderings record d; None otherwise
    degeneracy: Optional[int] = None
    phi: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        order = tuple(self.order)
        if sorted(order) != list(range(len(order))):
            raise ValueError("order is not a permutation of 0..n-1")
        if self.heuristic not in HEURISTICS:
            raise ValueError(f"unknown heuristic {self.heuristic!r}")
        phi = [0] * len(order)
        for pos, v in enumerate(order):
            phi[v] = pos
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "phi", tuple(phi))

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.order)

    def format(self, labels: Optional[Sequence[int]] = None) -> str:
        """One-line permutation, written with external (1-based) labels."""
        labels = labels if labels is not None else range(len(self.order))
        return " ".join(str(labels[v] + 1) for v in self.order)


def ordering_max_degree_first(g: BitGraph) -> VertexOrdering:
    """Repeatedly take the vertex of largest residual degree (ties: smallest index)."""
    deg = g.degrees()
    alive = [True] * g.n
    heap = [(-d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    order = []
    while heap:
        negd, v = heapq.heappop(heap)
        if not alive[v] or -negd != deg[v]:
            continue
        alive[v] = False
        order.append(v)
        for u in iter_bits(g.adj[v]):
            if alive[u]:
                deg[u] -= 1
                heapq.heappush(heap, (-deg[u], u))
    return VertexOrdering(tuple(order), "max-degree-first")


def ordering_degeneracy(g: BitGraph) -> VertexOrdering:
    """Repeatedly remove a vertex of smallest residual degree (ties: smallest index).

    Vertices appear in removal order, so each has at most ``d`` later
    neighbours; ``d`` is stored on the result.
    """
    deg = g.degrees()
    alive = [True] * g.n
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    order = []
    d = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if not alive[v] or dv != deg[v]:
            continue
        alive[v] = False
        order.append(v)
        d = max(d, dv)
        for u in iter_bits(g.adj[v]):
            if alive[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return VertexOrdering(tuple(order), "degeneracy", degeneracy=d)


def ordering_reverse(o: VertexOrdering) -> VertexOrdering:
    return VertexOrdering(
        tuple(reversed(o.order)), o.heuristic, not o.reversed, o.degeneracy
    )


def later_neighbor_counts(g: BitGraph, o: VertexOrdering) -> list[int]:
    """For each position, how many neighbours of that vertex come later."""
    counts = []
    for v in o.order:
        counts.append(sum(1 for u in iter_bits(g.adj[v]) if o.phi[u] > o.phi[v]))
    return counts


def prepare(g: BitGraph) -> tuple[BitGraph, VertexOrdering]:
    """Renumber ``g`` by maximum-degree-first position.

    The first vertex of the ordering becomes vertex 0, so "earliest in the
    ordering" is the lowest set bit and a single low-bit scan finds it.
    """
    o = ordering_max_degree_first(g)
    return graph_apply_permutation(g, o), o
