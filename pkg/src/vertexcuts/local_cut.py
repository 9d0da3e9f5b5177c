"""Local detection of small-sided minimum cuts, and region expansion.

``find_small(x, s)`` looks for the unique kappa-cut around ``x`` whose
x-side has at most ``s`` vertices.  The search is a randomized local flow
growth: repeated DFS passes over the residual split graph with a random
arc-traversal budget; a pass that exhausts its reachable set certifies a
cut.  Any witness found is reduced to the containment-minimal cut with one
exact flow computation, so a returned cut is always correct; randomness
only affects whether a witness is found at all.

``expand`` grows the known side around a vertex toward a size budget by
repeatedly searching for laminar cuts in the clique-overlay graph of the
current cut, in deterministic round-robin (dovetailed) order.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .errors import VertexCutError
from .graph import Graph, VertexSet, components_after_removal
from .flow import minimal_cut_toward

IN, OUT = 0, 1


def small_side_threshold(n: int, kappa: int) -> int:
    """The largest side size a half-balanced cut can have: ceil((n-kappa)/2)."""
    return -((kappa - n) // 2)


def _trial(
    g: Graph, x: int, budget: int, kappa: int, rng: random.Random
) -> VertexSet | None:
    """One local flow-growth pass; returns a verified kappa-cut or None.

    Works on the residual split digraph rooted at x_out.  Each of the
    kappa+1 rounds runs a DFS with a random arc budget; hitting the budget
    reverses the DFS path (pushing one unit toward a random frontier
    vertex), while exhausting the reachable set exposes the saturated
    in->out arcs as a vertex cut.
    """
    n = g.n
    # residual state per vertex: unit arc saturated? edge arcs' flow
    sat = [False] * n
    edge_flow: dict[tuple[int, int], int] = {}

    def residual_out(kind: int, v: int):
        # arcs leaving (v, kind) in the residual split graph
        if kind == IN:
            if not sat[v]:
                yield (OUT, v)
            for w in g.adj[v]:
                if edge_flow.get((w, v), 0) > 0:
                    yield (OUT, w)
        else:
            for w in g.adj[v]:
                if w != x:
                    yield (IN, w)
            if v != x and sat[v]:
                yield (IN, v)

    for _ in range(kappa + 1):
        tau = rng.randint(1, budget)
        seen = {(OUT, x)}
        path: list[tuple[int, int]] = [(OUT, x)]
        iters: list = [residual_out(OUT, x)]
        traversed = 0
        stopped = False
        while iters:
            it = iters[-1]
            nxt = next(it, None)
            if nxt is None:
                iters.pop()
                path.pop()
                continue
            traversed += 1
            if nxt not in seen:
                seen.add(nxt)
                path.append(nxt)
                iters.append(residual_out(*nxt))
            if traversed >= tau:
                stopped = True
                break
        if not stopped:
            cut = frozenset(
                v for v in range(n) if (IN, v) in seen and (OUT, v) not in seen
            )
            if len(cut) == kappa and x not in cut:
                return cut
            # reach covered the whole graph at this flow level; re-roll the
            # budget and push more flow
            continue
        # reverse the DFS path to the stopping point
        for (ka, va), (kb, vb) in zip(path, path[1:]):
            if ka == IN and kb == OUT and va == vb:
                sat[va] = True
            elif ka == OUT and kb == IN and va == vb:
                sat[va] = False
            elif ka == OUT and kb == IN:
                edge_flow[(va, vb)] = edge_flow.get((va, vb), 0) + 1
            else:  # IN -> OUT across an edge: cancel opposite flow
                edge_flow[(vb, va)] = edge_flow.get((vb, va), 0) - 1
    return None


_FOUND, _NO_SMALL, _USELESS = "found", "no-small", "useless"


def _probe(g: Graph, x: int, kappa: int, rng: random.Random) -> VertexSet | None:
    """Witness via one exact flow toward a random non-neighbor.

    Used when the arc budget already covers the whole graph, where the
    locality assumption behind the DFS growth buys nothing and a direct
    minimal cut probe has the same cost.
    """
    far = [y for y in range(g.n) if y != x and y not in g.adj[x]]
    if not far:
        return None
    y = rng.choice(far)
    cut = minimal_cut_toward(g, frozenset([x]), frozenset([y]))
    if len(cut) != kappa:
        return None
    return cut


def _settle(
    g: Graph, x: int, witness: VertexSet, s: int, kappa: int
) -> tuple[str, VertexSet | None]:
    """Reduce a witness cut around x to the unique minimal-side cut.

    A witness whose x-side fits under the half threshold pins down the
    unique minimal-side cut exactly; the verdict is then certain in both
    directions.  Larger witnesses settle nothing.
    """
    t = small_side_threshold(g.n, kappa)
    part = components_after_removal(g, witness)
    if part.side_of[x] < 0:
        return _USELESS, None
    side = part.side_containing(x)
    if len(side) > t:
        return _USELESS, None
    far = frozenset(range(g.n)) - side - witness
    if not far:
        return _USELESS, None
    cut = minimal_cut_toward(g, frozenset([x]), far)
    if len(cut) != kappa:
        raise VertexCutError("witness reduction produced a non-minimum cut")
    min_side = components_after_removal(g, cut).side_containing(x)
    if len(min_side) <= s:
        return _FOUND, cut
    return _NO_SMALL, None


def trial_schedule(n: int, m: int, s: int, kappa: int) -> list[int]:
    """Arc budgets for the doubling search: scales 2, 4, ..., s, repeated.

    Budgets are capped at the total residual arc count; past that point a
    DFS always exhausts and larger budgets only starve the flow pushes.
    """
    reps = max(6, 2 * math.ceil(math.log2(n + 2)))
    total_arcs = 2 * m + n + 2
    scales: list[int] = []
    s0 = 2
    while s0 < s:
        scales.append(s0)
        s0 *= 2
    scales.append(s)
    budgets = []
    for sc in scales:
        budgets.extend([min(8 * (kappa + 1) * (sc + kappa), total_arcs)] * reps)
    return budgets


def find_small(
    g: Graph, x: int, s: int, kappa: int, rng: random.Random
) -> VertexSet | None:
    """The unique kappa-cut with x-side of size <= s, w.h.p.

    If no such cut exists the answer None is always correct when a witness
    was settled, and correct w.h.p. otherwise; a returned cut is always
    verified, minimal, and of size kappa.
    """
    t = small_side_threshold(g.n, kappa)
    if s > t:
        raise ValueError(f"s={s} exceeds the half threshold {t}")
    if s < 1 or kappa < 1:
        raise ValueError("s and kappa must be positive")
    if g.degree(x) < kappa:
        raise VertexCutError(f"graph is not {kappa}-connected at vertex {x}")
    total_arcs = 2 * g.m + g.n + 2
    for budget in trial_schedule(g.n, g.m, s, kappa):
        witness = _trial(g, x, budget, kappa, rng)
        if witness is None and budget >= total_arcs:
            witness = _probe(g, x, kappa, rng)
        if witness is None:
            continue
        verdict, cut = _settle(g, x, witness, s, kappa)
        if verdict == _FOUND:
            return cut
        if verdict == _NO_SMALL:
            return None
    return None


def find_small_reference(
    g: Graph, x: int, s: int, kappa: int
) -> VertexSet | None:
    """Deterministic oracle for find_small via per-target minimal cuts."""
    t = small_side_threshold(g.n, kappa)
    if s > t:
        raise ValueError(f"s={s} exceeds the half threshold {t}")
    best_cut: VertexSet | None = None
    best_side: VertexSet | None = None
    near = set(g.adj[x]) | {x}
    for y in range(g.n):
        if y in near:
            continue
        cut = minimal_cut_toward(g, frozenset([x]), frozenset([y]))
        if len(cut) != kappa:
            continue  # x and y are more than kappa-connected
        side = components_after_removal(g, cut).side_containing(x)
        if len(side) <= s and (best_side is None or len(side) < len(best_side)):
            best_cut, best_side = cut, side
            if len(side) == 1:
                break
    return best_cut


@dataclass(frozen=True)
class CliqueOverlayGraph:
    """Induced graph on cut + far region, with the cut completed to a clique.

    Cuts of the overlay are exactly the laminar cuts of ``cut`` inside the
    far region, and overlay sides extend to original sides by gluing the
    excluded side back on.
    """

    graph: Graph
    to_original: tuple[int, ...]
    from_original: dict[int, int]
    cut: VertexSet
    excluded_side: VertexSet

    def lift(self, vs: VertexSet) -> VertexSet:
        return frozenset(self.to_original[v] for v in vs)


def build_overlay(g: Graph, cut: VertexSet, side: VertexSet) -> CliqueOverlayGraph:
    """Overlay graph on cut + complement-of-side, cliqued on the cut."""
    keep = frozenset(range(g.n)) - side
    order = sorted(keep)
    remap = {v: i for i, v in enumerate(order)}
    edges = {
        (remap[u], remap[v])
        for u, v in g.edges
        if u in keep and v in keep
    }
    for u, v in combinations(sorted(cut), 2):
        a, b = remap[u], remap[v]
        edges.add((a, b) if a < b else (b, a))
    return CliqueOverlayGraph(
        graph=Graph(len(order), sorted(edges)),
        to_original=tuple(order),
        from_original=remap,
        cut=frozenset(cut),
        excluded_side=frozenset(side),
    )


def expand(
    g: Graph,
    u: int,
    x: VertexSet,
    m: int,
    kappa: int,
    rng: random.Random,
) -> VertexSet:
    """Grow the cut around u until its side has at least m vertices.

    Starting from cut x with |Side_x(u)| <= 2m, repeatedly searches the
    clique-overlay of the current cut for a small laminar cut adopting the
    first one found under a deterministic round-robin schedule over the cut
    vertices.  The result Y satisfies Side_x(u) within Side_Y(u) and
    |Side_Y(u)| <= 2m; for m up to half the side threshold it w.h.p.
    dominates every cut whose u-side holds at most m vertices.
    """
    if m < 1 or 2 * m + kappa >= g.n:
        raise ValueError(f"budget m={m} leaves no room for a far side")
    part = components_after_removal(g, x)
    side = part.side_containing(u)
    if len(side) > 2 * m:
        raise ValueError("initial side exceeds 2m")
    y = frozenset(x)
    while len(side) < m:
        ov = build_overlay(g, y, side)
        n_ov = ov.graph.n
        t_ov = small_side_threshold(n_ov, kappa)
        s_ov = min(m, t_ov)
        if s_ov < 1:
            break
        adopted: VertexSet | None = None
        members = sorted(y)
        budgets = trial_schedule(n_ov, ov.graph.m, s_ov, kappa)
        for budget in budgets:  # round-robin: one trial per cut vertex per round
            for v in members:
                v_ov = ov.from_original[v]
                if ov.graph.degree(v_ov) < kappa:
                    continue
                witness = _trial(ov.graph, v_ov, budget, kappa, rng)
                if witness is None:
                    continue
                verdict, settled = _settle(ov.graph, v_ov, witness, s_ov, kappa)
                if verdict == _FOUND:
                    adopted = ov.lift(settled)
                    break
            if adopted is not None:
                break
        if adopted is None:
            break
        new_side = components_after_removal(g, adopted).side_containing(u)
        if not side < new_side or len(new_side) > 2 * m:
            raise VertexCutError("overlay cut failed the expansion contract")
        y, side = adopted, new_side
    return y
