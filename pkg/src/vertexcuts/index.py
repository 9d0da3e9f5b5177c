"""The per-vertex small-cut index and its (kappa+1)-connectivity queries.

For each vertex u the index stores the unique minimum cut with the
smallest u-side (when one of size at most ceil((n - kappa)/2) exists), the
side size, a constant-size side identifier, one bit per cut neighbor
telling whether the mixed cut through that neighbor separates the pair,
and the side itself when it has fewer than kappa vertices.  Queries walk
five cases and answer in O(1), emitting an O(kappa) witness on demand.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
from dataclasses import dataclass, field

from .errors import IndexFormatError, VertexCutError
from .flow import bulk_small_cuts, vertex_connectivity
from .graph import Graph, VertexSet, components_after_removal
from .local_cut import (
    expand,
    find_small,
    find_small_reference,
    small_side_threshold,
)
from .sparsify import nagamochi_ibaraki

FORMAT_VERSION = 1


def cut_digest(cut: VertexSet) -> str:
    """64-bit hex digest of a sorted cut; stable across runs."""
    blob = ",".join(str(v) for v in sorted(cut)).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


@dataclass(frozen=True)
class SmallRecord:
    """Stored facts about one vertex's minimal small-side cut."""

    vertex: int
    small: VertexSet | None
    side_size: int
    side_id: tuple[int, str] | None  # (min side vertex, cut digest)
    bits: dict[int, bool] = field(default_factory=dict)
    tiny_side: VertexSet | None = None

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SmallRecord)
            and self.vertex == other.vertex
            and self.small == other.small
            and self.side_size == other.side_size
            and self.side_id == other.side_id
            and self.bits == other.bits
            and self.tiny_side == other.tiny_side
        )


@dataclass(frozen=True)
class SmallCutIndex:
    n: int
    kappa: int
    t: int
    records: tuple[SmallRecord, ...]

    def record(self, v: int) -> SmallRecord:
        return self.records[v]


# ---------------------------------------------------------------------------
# query answers


@dataclass(frozen=True)
class Separated:
    """kappa(u, v) = kappa, witnessed by a vertex cut."""

    cut: VertexSet
    verdict = "separated"


@dataclass(frozen=True)
class MixedSeparated:
    """kappa(u, v) = kappa for an adjacent pair: the edge plus kappa-1 vertices."""

    edge: tuple[int, int]
    vertices: VertexSet
    verdict = "mixed-separated"


@dataclass(frozen=True)
class AtLeastKappaPlus1:
    verdict = "at-least-kappa-plus-1"


QueryAnswer = Separated | MixedSeparated | AtLeastKappaPlus1


def compute_small_reference(g: Graph, u: int, kappa: int) -> VertexSet | None:
    """Ground-truth minimal small-side cut at the half threshold."""
    t = small_side_threshold(g.n, kappa)
    if t < 1:
        return None
    return find_small_reference(g, u, t, kappa)


def _bit_value(g: Graph, u: int, v: int, small: VertexSet) -> bool:
    """Does the mixed cut {u,v} + Small(u) - {v} separate u from v?"""
    reduced = g.without_edge(u, v)
    part = components_after_removal(reduced, small - {v})
    return part.side_of[u] != part.side_of[v]


def _record_for(g: Graph, u: int, small: VertexSet | None, kappa: int) -> SmallRecord:
    if small is None:
        return SmallRecord(u, None, g.n, None)
    part = components_after_removal(g, small)
    side = part.side_containing(u)
    bits = {
        v: _bit_value(g, u, v, small)
        for v in g.adj[u]
        if v in small
    }
    tiny = side if len(side) <= kappa - 1 else None
    return SmallRecord(
        vertex=u,
        small=small,
        side_size=len(side),
        side_id=(min(side), cut_digest(small)),
        bits=bits,
        tiny_side=tiny,
    )


class _Builder:
    """Shared state for the randomized construction: best cut per vertex."""

    def __init__(self, g: Graph, kappa: int):
        self.g = g
        self.kappa = kappa
        self.t = small_side_threshold(g.n, kappa)
        self.best: list[VertexSet | None] = [None] * g.n
        self.best_size: list[int] = [g.n] * g.n

    def update(self, v: int, cut: VertexSet | None) -> None:
        if cut is None or v in cut:
            return
        side = components_after_removal(self.g, cut).side_containing(v)
        if len(side) <= min(self.best_size[v] - 1, self.t):
            self.best[v] = cut
            self.best_size[v] = len(side)

    def update_side(self, cut: VertexSet) -> None:
        part = components_after_removal(self.g, cut)
        for side in part.sides:
            if len(side) <= self.t:
                for v in side:
                    if len(side) <= min(self.best_size[v] - 1, self.t):
                        self.best[v] = cut
                        self.best_size[v] = len(side)


def build(
    g: Graph, seed: int = 0, mode: str = "exact", presparsified: bool = False
) -> SmallCutIndex:
    """Construct the index; ``exact`` is deterministic ground truth.

    The randomized mode follows the staged search: per-vertex local probes
    at the smallest scale, sampled scales with region expansion and bulk
    closure sweeps for unbalanced cuts, random pairs for balanced cuts, and
    a final bit pass for adjacent pairs.  The graph is sparsified to the
    (kappa+1)-certificate first; both modes agree w.h.p.
    """
    if mode not in ("exact", "randomized"):
        raise ValueError(f"unknown mode {mode!r}")
    if not g.is_connected():
        raise VertexCutError("index construction needs a connected graph")
    kappa, _ = vertex_connectivity(g)
    if kappa >= 1 and not presparsified and not g.is_complete():
        g = nagamochi_ibaraki(g, kappa + 1)
    t = small_side_threshold(g.n, kappa)

    if mode == "exact" or g.is_complete():
        records = tuple(
            _record_for(g, u, compute_small_reference(g, u, kappa), kappa)
            for u in range(g.n)
        )
        return SmallCutIndex(g.n, kappa, t, records)

    rng = random.Random(seed)
    n = g.n
    b = _Builder(g, kappa)

    # Step 1: very small cuts, every vertex
    s1 = min(100 * kappa, t)
    if s1 >= 1:
        for u in range(n):
            b.update(u, find_small(g, u, s1, kappa, rng))

    # Step 2: unbalanced cuts at doubling scales
    scale = 1
    while 100 * kappa < (1 << scale) <= t:
        alpha = 1 << scale
        scale += 1
        sample_size = min(n, math.ceil(n * math.log(max(n, 2)) / alpha))
        sample = sorted(rng.sample(range(n), sample_size))
        for u in sample:
            small_u = find_small(g, u, alpha, kappa, rng)
            if small_u is None:
                continue
            b.update_side(small_u)
            m = min(alpha, t // 2)
            if m < 1:
                continue
            side_u = components_after_removal(g, small_u).side_containing(u)
            if len(side_u) > 2 * m:
                continue
            y = expand(g, u, small_u, m, kappa, rng)
            for v in sorted(y):
                b.update(v, find_small(g, v, alpha, kappa, rng))
            side_y = components_after_removal(g, y).side_containing(u)
            c = side_u
            d = frozenset(range(n)) - y - side_y
            if not d:
                continue
            cuts, _ = bulk_small_cuts(g, c, d, kappa)
            for v in sorted(side_y - c):
                b.update(v, cuts.get(v))

    # Step 3: balanced cuts via random pairs
    if t >= 1:
        for _ in range(math.ceil(3 * math.log(max(n, 2)))):
            x = rng.randrange(n)
            y_v = rng.randrange(n)
            small_x = find_small(g, x, t, kappa, rng)
            if small_x is None:
                continue
            b.update_side(small_x)
            c = components_after_removal(g, small_x).side_containing(x)
            if y_v in c or y_v in small_x:
                continue
            cuts, _ = bulk_small_cuts(g, c, frozenset([y_v]), kappa)
            for v in sorted(cuts):
                b.update(v, cuts[v])

    # Step 4: adjacency bits, computed directly from the settled cuts
    records = tuple(_record_for(g, u, b.best[u], kappa) for u in range(n))
    return SmallCutIndex(n, kappa, t, records)


# ---------------------------------------------------------------------------
# queries


def _case_five(
    ix: SmallCutIndex, u: int, v: int
) -> QueryAnswer:
    """v in Small(u), u not in Small(v): decide from v's record."""
    rv = ix.record(v)
    ru = ix.record(u)
    if rv.small is None:
        return AtLeastKappaPlus1()
    if rv.side_size <= ix.kappa - 1:
        if u in (rv.tiny_side or frozenset()):
            return AtLeastKappaPlus1()
        return Separated(rv.small)
    if rv.side_size <= ru.side_size:
        return Separated(rv.small)
    return AtLeastKappaPlus1()


def query(ix: SmallCutIndex, u: int, v: int) -> QueryAnswer:
    """Answer whether kappa(u, v) = kappa (with witness) or >= kappa + 1.

    Follows the five stored-record cases in order; the graph itself is not
    consulted.  Adjacency inside the stored cut is visible through the bit
    table, which is keyed by cut neighbors.
    """
    if u == v:
        raise ValueError("query endpoints must differ")
    ru = ix.record(u)
    rv = ix.record(v)
    u_in_small_v = rv.small is not None and u in rv.small
    v_in_small_u = ru.small is not None and v in ru.small

    # Case I: same cut, same side
    if ru.small == rv.small and ru.side_id == rv.side_id:
        return AtLeastKappaPlus1()
    # Case II: neither endpoint inside the other's cut
    if not u_in_small_v and not v_in_small_u:
        if rv.side_size < ru.side_size:
            return Separated(rv.small)
        return Separated(ru.small)
    # Case III: endpoint is a cut neighbor; the stored bits decide.  A
    # separated adjacent pair is guaranteed a true bit on at least one end,
    # so both orientations are consulted before concluding kappa+1.
    mixed_u = v_in_small_u and v in ru.bits
    mixed_v = u_in_small_v and u in rv.bits
    if mixed_u or mixed_v:
        if mixed_u and ru.bits[v]:
            return MixedSeparated((u, v), ru.small - {v})
        if mixed_v and rv.bits[u]:
            return MixedSeparated((v, u), rv.small - {u})
        return AtLeastKappaPlus1()
    # Case IV: mutual cut membership
    if u_in_small_v and v_in_small_u:
        return AtLeastKappaPlus1()
    # Case V: one-sided membership
    if v_in_small_u:
        return _case_five(ix, u, v)
    return _case_five(ix, v, u)


def verify_answer(g: Graph, ix: SmallCutIndex, u: int, v: int, ans: QueryAnswer) -> bool:
    """Check an emitted witness against the graph (oracle-free)."""
    if isinstance(ans, Separated):
        part = components_after_removal(g, ans.cut)
        return (
            len(ans.cut) == ix.kappa
            and part.side_of[u] >= 0
            and part.side_of[v] >= 0
            and part.side_of[u] != part.side_of[v]
        )
    if isinstance(ans, MixedSeparated):
        a, c = ans.edge
        if not g.has_edge(a, c) or len(ans.vertices) != ix.kappa - 1:
            return False
        reduced = g.without_edge(a, c)
        part = components_after_removal(reduced, ans.vertices)
        return part.side_of[u] != part.side_of[v]
    return isinstance(ans, AtLeastKappaPlus1)


def answer_value(ix: SmallCutIndex, ans: QueryAnswer) -> int:
    """Collapse an answer to min(kappa(u,v), kappa+1)."""
    if isinstance(ans, AtLeastKappaPlus1):
        return ix.kappa + 1
    return ix.kappa


# ---------------------------------------------------------------------------
# serialization


def _record_to_json(r: SmallRecord) -> dict:
    return {
        "v": r.vertex,
        "small": sorted(r.small) if r.small is not None else None,
        "side_size": r.side_size,
        "side_id": [r.side_id[0], r.side_id[1]] if r.side_id else None,
        "bits": {str(k): v for k, v in sorted(r.bits.items())},
        "tiny_side": sorted(r.tiny_side) if r.tiny_side is not None else None,
    }


def serialize(ix: SmallCutIndex) -> bytes:
    doc = {
        "version": FORMAT_VERSION,
        "n": ix.n,
        "kappa": ix.kappa,
        "t": ix.t,
        "records": [_record_to_json(r) for r in ix.records],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()


def deserialize(blob: bytes) -> SmallCutIndex:
    try:
        doc = json.loads(blob.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise IndexFormatError(f"unreadable index payload: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("version") != FORMAT_VERSION:
        raise IndexFormatError("missing or unsupported format version")
    try:
        records = []
        for rec in doc["records"]:
            small = rec["small"]
            side_id = rec["side_id"]
            records.append(
                SmallRecord(
                    vertex=rec["v"],
                    small=frozenset(small) if small is not None else None,
                    side_size=rec["side_size"],
                    side_id=(side_id[0], side_id[1]) if side_id else None,
                    bits={int(k): bool(b) for k, b in rec["bits"].items()},
                    tiny_side=(
                        frozenset(rec["tiny_side"])
                        if rec["tiny_side"] is not None
                        else None
                    ),
                )
            )
        ix = SmallCutIndex(doc["n"], doc["kappa"], doc["t"], tuple(records))
    except (KeyError, TypeError, IndexError) as exc:
        raise IndexFormatError(f"malformed index document: {exc}") from exc
    if len(ix.records) != ix.n:
        raise IndexFormatError("record count does not match n")
    return ix


def storage_entries(ix: SmallCutIndex) -> int:
    """Stored words: cut vertices, bits, tiny sides, plus constant fields."""
    total = 0
    for r in ix.records:
        total += 4  # vertex, side_size, side_id pair
        if r.small is not None:
            total += len(r.small)
        total += len(r.bits)
        if r.tiny_side is not None:
            total += len(r.tiny_side)
    return total


# documented constant for the space bound: entries <= SPACE_FACTOR * kappa * n
SPACE_FACTOR = 8
