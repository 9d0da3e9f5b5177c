"""Pairwise classification of minimum cuts, wheels, and matching cuts.

Every pair of distinct minimum cuts of a kappa-connected graph (with
n > 4*kappa) relates in exactly one of four ways: laminar, wheel, crossing
matching, or small.  ``classify_pair`` decides by testing the four witness
predicates directly, so its answers are self-certifying.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import UnclassifiedRegimeError, VertexCutError
from .flow import FlowNetwork, minimal_cut_toward
from .graph import (
    Graph,
    SidePartition,
    VertexSet,
    components_after_removal,
    is_cut,
    neighborhood_in,
    region_of,
)


# ---------------------------------------------------------------------------
# wheels


@dataclass(frozen=True)
class Wheel:
    """A w-wheel: center T, spokes C_1..C_w, sectors S_1..S_w (0-based here).

    Every C(i,j) = C_i + T + C_j is a kappa-cut; non-adjacent index pairs
    give two-sided cuts D(i,j) | D(j,i).  The host graph is retained so
    wheel cuts can be re-verified.
    """

    graph: Graph
    center: VertexSet
    spokes: tuple[VertexSet, ...]
    sectors: tuple[VertexSet, ...]
    kappa: int

    @property
    def w(self) -> int:
        return len(self.spokes)


def _sector_slots(
    g: Graph, center: VertexSet, spokes: tuple[VertexSet, ...]
) -> tuple[VertexSet, ...] | None:
    """Assign each leftover component to the unique consecutive spoke gap."""
    w = len(spokes)
    hub = set(center)
    for c in spokes:
        hub |= c
    rest = [v for v in range(g.n) if v not in hub]
    if not rest:
        return None
    part = components_after_removal(g, frozenset(hub))
    sectors: list[set[int]] = [set() for _ in range(w)]
    for comp in part.sides:
        nb = set()
        for v in comp:
            nb.update(g.adj[v])
        nb -= comp
        slots = [
            i
            for i in range(w)
            if nb <= (spokes[i] | center | spokes[(i + 1) % w])
        ]
        if len(slots) != 1:
            return None
        sectors[slots[0]].update(comp)
    if any(not s for s in sectors):
        return None
    return tuple(frozenset(s) for s in sectors)


def _separates_exactly(g: Graph, cut: VertexSet, target: VertexSet) -> bool:
    """True iff ``cut`` is a cut and ``target`` is a union of its sides."""
    part = components_after_removal(g, cut)
    if not part.is_cut():
        return False
    reg = region_of(part, target)
    return reg == target and len(reg) < g.n - len(cut)


def verify_wheel(
    g: Graph,
    center: VertexSet,
    spokes: tuple[VertexSet, ...] | list[VertexSet],
    kappa: int,
) -> Wheel | None:
    """Check the wheel definition and the derived cut laws; None on failure."""
    spokes = tuple(frozenset(c) for c in spokes)
    w = len(spokes)
    if w < 4:
        raise ValueError("a wheel needs at least 4 spokes")
    center = frozenset(center)
    parts = [center, *spokes]
    seen: set[int] = set()
    for p in parts:
        if seen & p:
            return None
        seen |= p
    if any(not c for c in spokes):
        return None
    sectors = _sector_slots(g, center, spokes)
    if sectors is None:
        return None
    for i in range(w):
        cut = spokes[i] | center | spokes[(i + 2) % w]
        if len(cut) != kappa:
            return None
        target = sectors[i] | spokes[(i + 1) % w] | sectors[(i + 1) % w]
        if not _separates_exactly(g, cut, target):
            return None
    wheel = Wheel(g, center, spokes, sectors, kappa)
    size = (kappa - len(center)) / 2
    if any(len(c) != size for c in spokes):
        return None
    # derived laws: all pair cuts verify; non-adjacent pairs two-sided
    for i, j in combinations(range(w), 2):
        cut, region = wheel_cut(wheel, i, j)
        if len(cut) != kappa or not _separates_exactly(g, cut, region):
            return None
        if (j - i) % w not in (1, w - 1):
            part = components_after_removal(g, cut)
            if part.side_count() != 2:
                return None
    return wheel


def wheel_cut(wh: Wheel, i: int, j: int) -> tuple[VertexSet, VertexSet]:
    """C(i,j) = C_i + T + C_j and the region D(i,j) it cuts off (0-based)."""
    if i == j:
        raise ValueError("indices must differ")
    w = wh.w
    cut = wh.spokes[i] | wh.center | wh.spokes[j]
    region: set[int] = set()
    k = i
    while True:
        region |= wh.sectors[k]
        nxt = (k + 1) % w
        if nxt == j:
            break
        region |= wh.spokes[nxt]
        k = nxt
    return cut, frozenset(region)


# ---------------------------------------------------------------------------
# matching cuts


def matching_cut(
    g: Graph, u: VertexSet, a: int, p: VertexSet, kappa: int
) -> VertexSet | None:
    """The matching cut (U - P) + N_A(P), if it exists.

    Exists iff |N_A(P)| = |P|, N_A(P) is a strict subset of the side, and
    the candidate separates the side remainder from P plus the far region.
    """
    u = frozenset(u)
    p = frozenset(p)
    if not p or not p <= u:
        raise ValueError("p must be a nonempty subset of the cut")
    part = components_after_removal(g, u)
    side = part.sides[a]
    matched = neighborhood_in(g, p, side)
    if len(matched) != len(p) or matched == side:
        return None
    cand = (u - p) | matched
    remainder = side - cand
    far = p | (frozenset(range(g.n)) - u - side)
    cpart = components_after_removal(g, cand)
    if not cpart.is_cut():
        return None
    if region_of(cpart, remainder) & far:
        return None
    if len(cand) != kappa:
        return None
    return cand


def bipartite_matching(
    left: list[int], right: list[int], adj: dict[int, set[int]]
) -> dict[int, int]:
    """Maximum bipartite matching (augmenting paths); left -> right map."""
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}

    def augment(v: int, seen: set[int]) -> bool:
        for w in sorted(adj.get(v, ())):
            if w in seen:
                continue
            seen.add(w)
            if w not in match_r or augment(match_r[w], seen):
                match_l[v] = w
                match_r[w] = v
                return True
        return False

    for v in left:
        augment(v, set())
    return match_l


def _min_tight_avoiding(
    g: Graph, u: VertexSet, side: VertexSet, x: int, alpha: int
) -> VertexSet | None:
    """Minimal P containing x with |N_side(P)| = |P| and alpha not matched.

    Solved as a minimum-closure problem: prizes on cut vertices, costs on
    their side neighbors, dependencies from each vertex to its neighborhood;
    the residual-reachable set after max-flow is the unique minimal optimal
    closure.  Restricting to vertices not adjacent to alpha keeps every
    deficit set illegal (it would yield a cut smaller than kappa), so the
    optimum is tight or there is no tight set at all.
    """
    if alpha in g.adj[x]:
        return None
    allowed = [w for w in sorted(u) if alpha not in g.adj[w]]
    rights = sorted(
        {w for v in allowed for w in g.adj[v] if w in side}
    )
    lid = {v: 1 + i for i, v in enumerate(allowed)}
    rid = {w: 1 + len(allowed) + i for i, w in enumerate(rights)}
    s, t = 0, 1 + len(allowed) + len(rights)
    net = FlowNetwork(2 + len(allowed) + len(rights))
    inf = len(allowed) + len(rights) + 2
    for v in allowed:
        net.add_arc(s, lid[v], inf if v == x else 1)
        for w in sorted(g.adj[v]):
            if w in rid:
                net.add_arc(lid[v], rid[w], inf)
    for w in rights:
        net.add_arc(rid[w], t, 1)
    net.max_flow(s, t)
    reach = net.residual_reachable(s)
    pset = frozenset(v for v in allowed if lid[v] in reach)
    matched = neighborhood_in(g, pset, side)
    if len(matched) != len(pset):
        return None
    return pset


def theta_star(
    g: Graph, u: VertexSet, a: int, kappa: int
) -> frozenset[VertexSet]:
    """Minimal matching-cut pivots: for each cut vertex, the smallest subset
    containing it that admits a matching cut into side ``a``.
    """
    u = frozenset(u)
    part = components_after_removal(g, u)
    side = part.sides[a]
    out: set[VertexSet] = set()
    for x in sorted(u):
        best: VertexSet | None = None
        for alpha in sorted(side):
            cand = _min_tight_avoiding(g, u, side, x, alpha)
            if cand is not None and (best is None or len(cand) < len(best)):
                best = cand
                if len(best) == 1:
                    break
        if best is not None:
            out.add(best)
    return frozenset(out)


def enumerate_theta(g: Graph, u: VertexSet, a: int) -> frozenset[VertexSet]:
    """Exhaustive Theta: every pivot subset admitting a matching cut."""
    u = frozenset(u)
    if len(u) > 20:
        raise ValueError("cut too large for exhaustive enumeration")
    part = components_after_removal(g, u)
    side = part.sides[a]
    members: set[VertexSet] = set()
    order = sorted(u)
    for r in range(1, len(order) + 1):
        for combo in combinations(order, r):
            p = frozenset(combo)
            matched = neighborhood_in(g, p, side)
            if len(matched) == len(p) and matched != side:
                members.add(p)
    return frozenset(members)


def min_crossing_matching(
    g: Graph, u: VertexSet, a: int, p: VertexSet, kappa: int
) -> VertexSet:
    """The cut separating P from the unmatched side remainder with the
    smallest P-region: a crossing matching cut of U, or the plain matching
    cut when no crossing one exists.
    """
    u = frozenset(u)
    p = frozenset(p)
    part = components_after_removal(g, u)
    if part.side_count() != 2:
        raise VertexCutError("crossing matching cuts need a two-sided cut")
    side = part.sides[a]
    plain = matching_cut(g, u, a, p, kappa)
    if plain is None:
        raise VertexCutError("Match(P) does not exist")
    matched = plain - (u - p)
    far = side - matched
    result = minimal_cut_toward(g, p, far)
    if len(result) != kappa:
        raise VertexCutError("separator is not a minimum cut")
    b_side = part.sides[1 - a]
    if result != plain:
        if not (result & b_side) or (result & side) != matched:
            raise VertexCutError("minimal separator violates the dichotomy")
    return result


def reduce_crossing_matching(
    g: Graph,
    u: VertexSet,
    a: int,
    w: VertexSet,
    q: VertexSet,
    p: VertexSet,
) -> VertexSet:
    """Rewrite a crossing matching cut w.r.t. Q into one w.r.t. P within Q."""
    u = frozenset(u)
    w = frozenset(w)
    q = frozenset(q)
    p = frozenset(p)
    kappa = len(u)
    if not p or not p <= q or not q <= u:
        raise VertexCutError("need nonempty p within q within the cut")
    part = components_after_removal(g, u)
    if part.side_count() != 2:
        raise VertexCutError("crossing matching cuts need a two-sided cut")
    side = part.sides[a]
    b_side = part.sides[1 - a]
    match_q = neighborhood_in(g, q, side)
    if len(match_q) != len(q) or match_q == side:
        raise VertexCutError("Match(Q) does not exist")
    if not (w & b_side) or (w & side) != match_q:
        raise VertexCutError("w is not a crossing matching cut w.r.t. q")
    match_p = neighborhood_in(g, p, side)
    if len(match_p) != len(p) or match_p == side:
        raise VertexCutError("Match(P) does not exist")
    result = (w - match_q) | (q - p) | match_p
    if len(result) != kappa or not is_cut(g, result):
        raise VertexCutError("reduction did not produce a kappa-cut")
    return result


# ---------------------------------------------------------------------------
# pairwise classification


@dataclass(frozen=True)
class LaminarRelation:
    kind = "laminar"
    host_side: int  # i*: side of u that contains w
    guest_side: int  # j*: side of w that contains u - w


@dataclass(frozen=True)
class WheelRelation:
    kind = "wheel"
    wheel: Wheel


@dataclass(frozen=True)
class CrossingMatchingRelation:
    kind = "crossing-matching"
    side_a: int  # side of u the matching part lives in
    pivot: VertexSet  # P: replaced subset of u
    matched: VertexSet  # N_A(P)


@dataclass(frozen=True)
class SmallRelation:
    kind = "small"
    which: str  # "first" if u is the small cut, "second" for w
    small_sides: tuple[VertexSet, ...]


CutRelation = (
    LaminarRelation | WheelRelation | CrossingMatchingRelation | SmallRelation
)


def _laminar_check(
    g: Graph,
    u: VertexSet,
    w: VertexSet,
    pu: SidePartition,
    pw: SidePartition,
) -> LaminarRelation | None:
    touched = [i for i, s in enumerate(pu.sides) if w & s]
    if len(touched) != 1:
        return None
    i_star = touched[0]
    outside = u - w
    guest = {pw.side_of[v] for v in outside}
    if len(guest) != 1:
        raise VertexCutError("laminar witness: u - w spans several sides of w")
    j_star = guest.pop()
    a_star = pu.sides[i_star]
    b_star = pw.sides[j_star]
    rest_a: set[int] = set()
    for i, s in enumerate(pu.sides):
        if i != i_star:
            rest_a |= s
    rest_b: set[int] = set()
    for j, s in enumerate(pw.sides):
        if j != j_star:
            rest_b |= s
    if b_star - a_star != outside | rest_a:
        raise VertexCutError("laminar witness identity failed (guest side)")
    if a_star - b_star != (w - u) | rest_b:
        raise VertexCutError("laminar witness identity failed (host side)")
    return LaminarRelation(host_side=i_star, guest_side=j_star)


def _small_check(
    guest: VertexSet, host: VertexSet, p_guest: SidePartition, which: str
) -> SmallRelation | None:
    inside = [s for s in p_guest.sides if s <= host]
    if len(inside) != p_guest.side_count() - 1 or not inside:
        return None
    total = sum(len(s) for s in inside)
    if total > len(host) - 1:
        raise VertexCutError("small witness exceeds kappa - 1 vertices")
    return SmallRelation(which=which, small_sides=tuple(inside))


def classify_pair(
    g: Graph, u: VertexSet, w: VertexSet, kappa: int
) -> CutRelation:
    """Classify cut w against cut u with a verified witness.

    Tests the predicates in the order laminar, small, wheel, crossing
    matching; cheap set algebra first.  Exactly one must verify for
    distinct minimum cuts when n > 4*kappa.
    """
    u = frozenset(u)
    w = frozenset(w)
    if u == w:
        raise ValueError("cuts must be distinct")
    # below 2*kappa + 1 vertices the two cuts can tile the whole graph and
    # none of the four relations need hold
    if g.n <= 2 * kappa:
        raise UnclassifiedRegimeError(
            f"classification needs n > 2*kappa (n={g.n}, kappa={kappa})"
        )
    if len(u) != kappa or len(w) != kappa:
        raise VertexCutError("both inputs must be kappa-sized")
    pu = components_after_removal(g, u)
    pw = components_after_removal(g, w)
    if not pu.is_cut() or not pw.is_cut():
        raise VertexCutError("both inputs must be cuts")

    lam = _laminar_check(g, u, w, pu, pw)
    if lam is not None:
        return lam
    small = _small_check(w, u, pw, "second") or _small_check(u, w, pu, "first")
    if small is not None:
        return small

    if pu.side_count() != 2 or pw.side_count() != 2:
        raise VertexCutError(
            "non-laminar, non-small pair with more than two sides"
        )
    quad = [[pu.sides[i] & pw.sides[j] for j in (0, 1)] for i in (0, 1)]
    if all(quad[i][j] for i in (0, 1) for j in (0, 1)):
        t = u & w
        spokes = (
            u & pw.sides[0],
            w & pu.sides[0],
            u & pw.sides[1],
            w & pu.sides[1],
        )
        wheel = verify_wheel(g, t, spokes, kappa)
        if wheel is None:
            raise VertexCutError("wheel witness failed to verify")
        return WheelRelation(wheel=wheel)

    for i0 in (0, 1):
        for j0 in (0, 1):
            if quad[i0][j0]:
                continue
            a1, a2 = i0, 1 - i0
            b1, b2 = 1 - j0, j0
            if not quad[a1][b1] or not quad[a2][b2]:
                continue
            u1 = u & pw.sides[b1]
            u2 = u & pw.sides[b2]
            w1 = w & pu.sides[a1]
            w2 = w & pu.sides[a2]
            if len(w2) != len(u1) or len(w1) != len(u2) or not u1 or not u2:
                raise VertexCutError("crossing witness size law failed")
            cand = matching_cut(g, u, a1, u2, kappa)
            if cand != (u - u2) | w1:
                raise VertexCutError("crossing witness matching cut failed")
            if quad[a2][b1] and len(u1) < len(u2):
                raise VertexCutError("crossing witness pivot inequality failed")
            return CrossingMatchingRelation(side_a=a1, pivot=u2, matched=w1)
    raise VertexCutError("pair fits no relation; classification failed")
