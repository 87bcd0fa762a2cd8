"""Brute-force ground truth for small graphs."""
from __future__ import annotations

import numpy as np

from .bitset import BitSet
from .graph import BitGraph

MAX_ORACLE_N = 25


class OracleTooLarge(ValueError):
    pass


def oracle_enumerate(g: BitGraph) -> list[tuple[int, ...]]:
    """Every maximal clique, found by scanning all 2**n vertex subsets.

    Subsets are built by doubling: the masks with top bit ``b`` are ``2**b``
    plus every mask below it, so clique-ness and the common neighbourhood
    extend one vertex at a time. A clique is maximal when no outside vertex
    is adjacent to all of it, i.e. its common neighbourhood is empty.
    """
    n = g.n
    if n > MAX_ORACLE_N:
        raise OracleTooLarge(f"oracle refuses n={n} > {MAX_ORACLE_N}")
    if n == 0:
        return []
    adj = np.array(g.adj, dtype=np.uint32)
    is_clique = np.ones(1, dtype=bool)
    common = np.array([(1 << n) - 1], dtype=np.uint32)
    for b in range(n):
        low = np.arange(1 << b, dtype=np.uint32)
        ok = is_clique & ((low & ~adj[b]) == 0)
        is_clique = np.concatenate([is_clique, ok])
        common = np.concatenate([common, common & adj[b]])
    masks = np.nonzero(is_clique & (common == 0))[0]
    out = []
    for mask in masks.tolist():
        members = [v for v in range(n) if (mask >> v) & 1]
        out.append(tuple(sorted(g.labels[v] for v in members)))
    return sorted(out)


def oracle_pivot_best_score(P: BitSet, X: BitSet, g: BitGraph) -> int:
    """max over p in P ∪ X of |P ∩ N(p)|, one membership test at a time."""
    members_p = list(P)
    candidates = sorted(set(members_p) | set(X))
    if not candidates:
        raise ValueError("P and X are both empty")
    return max(sum(1 for u in members_p if g.has_edge(p, u)) for p in candidates)
