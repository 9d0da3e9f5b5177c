"""Undirected graph representation and the cut / side / region algebra.

A *cut* is a vertex set whose removal disconnects the graph; a *side* is a
connected component of the remainder; a *region* is a union of sides.  All
higher layers (flow, structure theory, the connectivity index) are built on
the operations here.

Vertices are dense integers ``0..n-1``.  Graphs are immutable after
construction and safe for unrestricted concurrent reads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphFormatError

VertexSet = frozenset[int]

IN_CUT = -1  # side_of() marker for vertices belonging to the cut itself


class Graph:
    """Simple undirected graph on vertices 0..n-1, immutable after load."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        norm: set[tuple[int, int]] = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex out of range in edge ({u}, {v})")
            if u == v:
                raise GraphFormatError(f"self-loop at {u}")
            e = (u, v) if u < v else (v, u)
            if e in norm:
                raise GraphFormatError(f"parallel edge {e}")
            norm.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: frozenset[tuple[int, int]] = frozenset(norm)
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in adj
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges

    def vertices(self) -> range:
        return range(self.n)

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return len(_component_of(self.adj, 0, frozenset())) == self.n

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def without_edge(self, u: int, v: int) -> "Graph":
        """Copy with one edge removed; used by the mixed-cut definition."""
        e = (u, v) if u < v else (v, u)
        if e not in self.edges:
            raise GraphFormatError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})

    def induced(self, keep: VertexSet) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on ``keep`` with dense relabeling.

        Returns the subgraph and the old->new id mapping.
        """
        order = sorted(keep)
        remap = {v: i for i, v in enumerate(order)}
        edges = [
            (remap[u], remap[v])
            for (u, v) in self.edges
            if u in keep and v in keep
        ]
        return Graph(len(order), edges), remap

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _component_of(
    adj: Sequence[Sequence[int]], start: int, removed: frozenset
) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


@dataclass(frozen=True)
class SidePartition:
    """Connected components left after removing a vertex set.

    ``sides`` are ordered by their minimum vertex id, so side indices are
    deterministic.  ``side_of`` maps every vertex to its side index, or to
    ``IN_CUT`` for vertices of the removed set.
    """

    cut: VertexSet
    sides: tuple[VertexSet, ...]
    side_of: tuple[int, ...]

    def side_count(self) -> int:
        return len(self.sides)

    def is_cut(self) -> bool:
        return len(self.sides) >= 2

    def side_containing(self, v: int) -> VertexSet:
        i = self.side_of[v]
        if i == IN_CUT:
            raise ValueError(f"vertex {v} lies in the cut")
        return self.sides[i]


def components_after_removal(g: Graph, u: Iterable[int]) -> SidePartition:
    """Partition of ``V - u`` into connected components (the sides of u)."""
    cut = frozenset(u)
    for v in cut:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    side_of = [IN_CUT] * g.n
    sides: list[VertexSet] = []
    for start in range(g.n):
        if start in cut or side_of[start] != IN_CUT:
            continue
        comp = _component_of(g.adj, start, cut)
        idx = len(sides)
        sides.append(frozenset(comp))
        for v in comp:
            side_of[v] = idx
    # scanning starts from the smallest unvisited vertex, so sides are
    # already ordered by minimum contained id
    return SidePartition(cut, tuple(sides), tuple(side_of))


def is_cut(g: Graph, u: Iterable[int]) -> bool:
    """True iff removing ``u`` leaves at least two components."""
    cut = frozenset(u)
    if len(cut) >= g.n:
        raise ValueError("cut must be a strict subset of the vertices")
    return components_after_removal(g, cut).is_cut()


def side_of(p: SidePartition, v: int) -> int:
    """Side index of ``v``, or IN_CUT."""
    return p.side_of[v]


def region_of(p: SidePartition, a: Iterable[int]) -> VertexSet:
    """Union of the sides of ``p`` that intersect ``a`` (cut vertices ignored)."""
    hit = {p.side_of[v] for v in a if p.side_of[v] != IN_CUT}
    out: set[int] = set()
    for i in hit:
        out |= p.sides[i]
    return frozenset(out)


def neighborhood_in(g: Graph, p: Iterable[int], a: Iterable[int]) -> VertexSet:
    """Vertices of ``a`` adjacent to at least one vertex of ``p``, minus ``p``."""
    pset = set(p)
    aset = set(a)
    out = set()
    for v in pset:
        for w in g.adj[v]:
            if w in aset and w not in pset:
                out.add(w)
    return frozenset(out)


def neighborhood(g: Graph, p: Iterable[int]) -> VertexSet:
    """Open neighborhood N(p)."""
    pset = set(p)
    out = set()
    for v in pset:
        out.update(g.adj[v])
    return frozenset(out - pset)


# ---------------------------------------------------------------------------
# edge-list I/O


def parse_edge_list(text: str) -> tuple[Graph, tuple[str, ...]]:
    """Parse an edge-list document: one ``u v`` pair per line, ``#`` comments.

    Labels may be arbitrary tokens; they are relabeled to 0..n-1 (numeric
    labels sort numerically, otherwise lexicographically) and the label
    vector is returned for output mapping.  Disconnected or non-simple
    inputs are rejected.
    """
    pairs: list[tuple[str, str]] = []
    labels: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        a, b = parts
        pairs.append((a, b))
        labels.add(a)
        labels.add(b)
    if not pairs:
        raise GraphFormatError("empty edge list")
    if all(tok.lstrip("-").isdigit() for tok in labels):
        order = sorted(labels, key=int)
    else:
        order = sorted(labels)
    remap = {tok: i for i, tok in enumerate(order)}
    g = Graph(len(order), [(remap[a], remap[b]) for a, b in pairs])
    if not g.is_connected():
        raise GraphFormatError("input graph is disconnected")
    return g, tuple(order)


def load_edge_list(path: str) -> tuple[Graph, tuple[str, ...]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph, labels: Sequence[str] | None = None) -> str:
    lab = labels if labels is not None else [str(i) for i in range(g.n)]
    lines = [f"{lab[u]} {lab[v]}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"
