"""Shared brute-force oracles, independent of the library's flow machinery.

Everything here recomputes connectivity facts from first principles
(subset scans plus plain BFS) so library results are checked against a
second route, not against themselves.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from vertexcuts.graph import Graph
from vertexcuts import families


def bfs_components(g: Graph, removed: frozenset) -> list[set[int]]:
    seen: set[int] = set(removed)
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def brute_is_cut(g: Graph, cut) -> bool:
    return len(bfs_components(g, frozenset(cut))) >= 2


def brute_separates(g: Graph, cut, u: int, v: int) -> bool:
    cut = frozenset(cut)
    if u in cut or v in cut:
        return False
    for comp in bfs_components(g, cut):
        if u in comp:
            return v not in comp
    return False


def brute_pair_cuts(g: Graph, u: int, v: int, k: int) -> list[frozenset]:
    """All k-subsets separating u from v."""
    others = [x for x in range(g.n) if x not in (u, v)]
    return [
        frozenset(c)
        for c in combinations(others, k)
        if brute_separates(g, frozenset(c), u, v)
    ]


def brute_pair_connectivity(g: Graph, u: int, v: int) -> int:
    """Vertex connectivity of a nonadjacent pair by growing subset scans."""
    assert not g.has_edge(u, v)
    for k in range(g.n - 1):
        if brute_pair_cuts(g, u, v, k):
            return k
    return g.n - 1


def brute_mixed_connectivity(g: Graph, u: int, v: int) -> int:
    if not g.has_edge(u, v):
        return brute_pair_connectivity(g, u, v)
    reduced = g.without_edge(u, v)
    if not brute_separates(reduced, frozenset(), u, v):
        return 1 + brute_pair_connectivity(reduced, u, v)
    return 1


def brute_min_cuts(g: Graph) -> tuple[int, list[frozenset]]:
    """Global minimum vertex cuts by subset scan (small n only)."""
    if g.is_complete():
        return g.n - 1, []
    for k in range(1, g.n - 1):
        cuts = [
            frozenset(c)
            for c in combinations(range(g.n), k)
            if brute_is_cut(g, frozenset(c))
        ]
        if cuts:
            return k, cuts
    return g.n - 1, []


def random_kappa_graphs(seed: int, count: int, n_lo: int, n_hi: int, kappa_max: int):
    """Connected non-complete random graphs with 1 <= kappa <= kappa_max."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(n_lo, n_hi)
        g = families.random_connected(n, rng.uniform(0.15, 0.6), rng)
        if g.is_complete():
            continue
        kappa, _ = brute_min_cuts(g) if n <= 13 else (None, None)
        if kappa is None:
            from vertexcuts.flow import vertex_connectivity

            kappa, _ = vertex_connectivity(g)
        if 1 <= kappa <= kappa_max:
            out.append((g, kappa))
    return out


@pytest.fixture(scope="session")
def c8() -> Graph:
    return families.cycle(8)


@pytest.fixture(scope="session")
def petersen() -> Graph:
    return families.petersen()
