"""Constructors for the graph families used in tests and verification runs."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


def ladder(k: int) -> Graph:
    """2 x k grid: top rail 0..k-1, bottom rail k..2k-1, rungs i -- k+i."""
    edges = [(i, i + 1) for i in range(k - 1)]
    edges += [(k + i, k + i + 1) for i in range(k - 1)]
    edges += [(i, k + i) for i in range(k)]
    return Graph(2 * k, edges)


def two_cliques_matched(size: int) -> Graph:
    """Two K_size cliques joined by a perfect matching; kappa = size.

    The matching interface makes every proper nonempty subset of one clique
    a matching-cut pivot, which exercises the full Theta lattice.
    """
    edges = list(combinations(range(size), 2))
    edges += [(size + i, size + j) for i, j in combinations(range(size), 2)]
    edges += [(i, size + i) for i in range(size)]
    return Graph(2 * size, edges)


def clique_chain(blocks: int, block_size: int, kappa: int) -> Graph:
    """Chain of cliques A_0, T_1, A_1, T_2, ... with |T_i| = kappa.

    Consecutive junction sets T_i are kappa-cuts nested around A_0, giving a
    laminar chain of cuts (a "nested barbell").
    """
    if block_size <= kappa:
        raise ValueError("block_size must exceed kappa")
    ids: list[list[int]] = []
    nxt = 0
    for b in range(2 * blocks - 1):
        size = block_size if b % 2 == 0 else kappa
        ids.append(list(range(nxt, nxt + size)))
        nxt += size
    edges = []
    for group in ids:
        edges += list(combinations(group, 2))
    for i in range(len(ids) - 1):
        edges += [(u, v) for u in ids[i] for v in ids[i + 1]]
    return Graph(nxt, edges)


def clique_with_pendants(clique: int, attach: int, pendants: int = 2) -> Graph:
    """K_clique plus ``pendants`` extra vertices each adjacent to the same
    ``attach`` clique vertices.  With attach < clique the extras share one
    small cut; adding the edge between them flips query Case II into Case I.
    """
    edges = list(combinations(range(clique), 2))
    for p in range(pendants):
        v = clique + p
        edges += [(v, i) for i in range(attach)]
    return Graph(clique + pendants, edges)


def synthetic_wheel(
    w: int, center: int, spoke: int, sector: int
) -> tuple[Graph, frozenset[int], tuple[frozenset[int], ...]]:
    """Build a w-wheel with |T| = center, |C_i| = spoke, |S_i| = sector.

    Sectors are cliques joined completely to both bounding spokes and to the
    center; spokes are cliques joined to the center.  Every wheel cut
    C_i + T + C_j then has size center + 2*spoke, which is the connectivity
    of the construction.  Returns (graph, T, spokes).
    """
    ids = []
    nxt = 0

    def take(k: int) -> list[int]:
        nonlocal nxt
        out = list(range(nxt, nxt + k))
        nxt += k
        return out

    t = take(center)
    spokes = [take(spoke) for _ in range(w)]
    sectors = [take(sector) for _ in range(w)]
    edges = set()
    for group in [t] + spokes + sectors:
        edges.update(combinations(group, 2))
    for group in spokes + sectors:
        edges.update((u, v) for u in group for v in t)
    for i in range(w):
        nxt_spoke = spokes[(i + 1) % w]
        edges.update((u, v) for u in sectors[i] for v in spokes[i])
        edges.update((u, v) for u in sectors[i] for v in nxt_spoke)
    g = Graph(nxt, sorted(edges))
    return g, frozenset(t), tuple(frozenset(c) for c in spokes)


def faux_wheel() -> tuple[Graph, tuple[frozenset[int], ...]]:
    """Four spoke triangles where consecutive pairs are minimum 6-cuts but
    the diagonals are not cuts: complete joins between opposite spokes keep
    each diagonal's two halves connected.  Returns (graph, spokes); the
    center is empty.
    """
    spokes = [list(range(3 * i, 3 * i + 3)) for i in range(4)]
    sectors = [list(range(12 + 3 * i, 15 + 3 * i)) for i in range(4)]
    edges = set()
    for group in spokes + sectors:
        edges.update(combinations(group, 2))
    for i in range(4):
        edges.update((u, v) for u in sectors[i] for v in spokes[i])
        edges.update((u, v) for u in sectors[i] for v in spokes[(i + 1) % 4])
    edges.update((u, v) for u in spokes[0] for v in spokes[2])
    edges.update((u, v) for u in spokes[1] for v in spokes[3])
    g = Graph(24, sorted(edges))
    return g, tuple(frozenset(c) for c in spokes)


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) conditioned on connectivity (resampled until connected)."""
    while True:
        edges = [
            (u, v) for u, v in combinations(range(n), 2) if rng.random() < p
        ]
        if not edges:
            continue
        g = Graph(n, edges)
        if g.is_connected():
            return g
