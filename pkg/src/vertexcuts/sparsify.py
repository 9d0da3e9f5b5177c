"""Forest-decomposition sparsification (scan-first search).

Partitions the edges into forests E_1, E_2, ... by repeatedly scanning the
unscanned vertex with the highest forest label; keeping the first k+1
forests yields a subgraph with at most (k+1)n edges that preserves
min(kappa(u, v), k+1) for every pair under the mixed definition.
"""

from __future__ import annotations

import heapq

from .graph import Graph


def forest_indices(g: Graph) -> dict[tuple[int, int], int]:
    """Assign each edge its forest index (1-based).

    Among unscanned vertices the one with the maximal label is scanned next,
    smallest id breaking ties, so the decomposition is deterministic.
    """
    r = [0] * g.n
    scanned = [False] * g.n
    index: dict[tuple[int, int], int] = {}
    heap: list[tuple[int, int]] = [(0, v) for v in range(g.n)]
    heapq.heapify(heap)
    while heap:
        neg_label, v = heapq.heappop(heap)
        if scanned[v] or -neg_label != r[v]:
            continue
        scanned[v] = True
        for w in g.adj[v]:
            if scanned[w]:
                continue
            e = (v, w) if v < w else (w, v)
            r[w] += 1
            index[e] = r[w]
            heapq.heappush(heap, (-r[w], w))
    return index


def nagamochi_ibaraki(g: Graph, k: int) -> Graph:
    """Subgraph on the first k+1 forests of the scan-first decomposition."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not g.is_connected():
        raise ValueError("input graph must be connected")
    idx = forest_indices(g)
    kept = [e for e, i in idx.items() if i <= k + 1]
    return Graph(g.n, kept)
