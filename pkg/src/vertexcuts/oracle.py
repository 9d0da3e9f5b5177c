"""Brute-force ground truth and structural-law checkers.

Everything here is exhaustive and gated to desk-scale instances; any
violation is returned as a machine-readable counterexample payload rather
than a bare assertion, so verification runs can report precisely.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import OracleSizeError
from .flow import mixed_connectivity, vertex_connectivity
from .graph import Graph, VertexSet, components_after_removal, is_cut, region_of
from .local_cut import small_side_threshold
from .structure import (
    CrossingMatchingRelation,
    Wheel,
    WheelRelation,
    classify_pair,
    enumerate_theta,
    matching_cut,
    verify_wheel,
    wheel_cut,
)
from .index import compute_small_reference

DEFAULT_MAX_N = 16
DEFAULT_MAX_KAPPA = 5


@dataclass
class Report:
    """Outcome of one checker on one instance."""

    name: str
    ok: bool
    counts: dict[str, int] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    skipped: str | None = None

    def fail(self, **payload) -> None:
        self.ok = False
        self.counterexamples.append(payload)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "counts": dict(sorted(self.counts.items())),
            "counterexamples": self.counterexamples,
            "skipped": self.skipped,
        }


def enumerate_min_cuts(
    g: Graph, max_n: int = DEFAULT_MAX_N, max_kappa: int = DEFAULT_MAX_KAPPA
) -> tuple[int, tuple[VertexSet, ...]]:
    """All minimum vertex cuts by exhaustive subset scan."""
    if g.n > max_n:
        raise OracleSizeError(f"n={g.n} exceeds the enumeration gate {max_n}")
    kappa, _ = vertex_connectivity(g)
    if kappa >= g.n - 1:
        return kappa, ()
    if kappa > max_kappa:
        raise OracleSizeError(f"kappa={kappa} exceeds the gate {max_kappa}")
    cuts = tuple(
        frozenset(c)
        for c in combinations(range(g.n), kappa)
        if is_cut(g, frozenset(c))
    )
    return kappa, cuts


def pairwise_connectivity_table(g: Graph) -> dict[tuple[int, int], int]:
    return {
        (u, v): mixed_connectivity(g, u, v)
        for u, v in combinations(range(g.n), 2)
    }


def check_classification_exhaustive(g: Graph) -> Report:
    """Every ordered pair of minimum cuts classifies with a verified witness."""
    rep = Report("classification", ok=True)
    kappa, cuts = enumerate_min_cuts(g)
    if g.n <= 2 * kappa:
        rep.skipped = f"n={g.n} <= 2*kappa={2 * kappa}"
        return rep
    rep.counts["cuts"] = len(cuts)
    for u in cuts:
        for w in cuts:
            if u == w:
                continue
            try:
                rel = classify_pair(g, u, w, kappa)
            except Exception as exc:  # counterexample payloads, not crashes
                rep.fail(u=sorted(u), w=sorted(w), error=str(exc))
                continue
            rep.counts[rel.kind] = rep.counts.get(rel.kind, 0) + 1
    return rep


_WHEEL_CASES = (
    "wheel-cut",
    "sector-laminar",
    "crossing-matching",
    "small-cut",
    "small-wheel",
    "subwheel",
)


def check_wheel_interaction(g: Graph, wh: Wheel, x: VertexSet) -> str | None:
    """First of the six interaction cases that holds for cut x, else None."""
    w = wh.w
    kappa = wh.kappa
    # 1: x is a wheel cut
    for i, j in combinations(range(w), 2):
        if x == wh.spokes[i] | wh.center | wh.spokes[j]:
            return _WHEEL_CASES[0]
    # 2: x inside a sector cut's closure
    for i in range(w):
        cut_i, _ = wheel_cut(wh, i, (i + 1) % w)
        if x <= cut_i | wh.sectors[i]:
            return _WHEEL_CASES[1]
    # 3: crossing matching relation with a sector or diagonal cut
    for d in (1, 2):
        for i in range(w):
            base = wh.spokes[i] | wh.center | wh.spokes[(i + d) % w]
            if base == x:
                continue
            try:
                rel = classify_pair(g, base, x, kappa)
            except Exception:
                continue
            if isinstance(rel, CrossingMatchingRelation):
                return _WHEEL_CASES[2]
    # 4: x itself is a small cut
    part = components_after_removal(g, x)
    sizes = sorted(len(s) for s in part.sides)
    if sum(sizes[:-1]) <= kappa - 1:
        return _WHEEL_CASES[3]
    # 5: the wheel is small
    sector_sizes = sorted(len(s) for s in wh.sectors)
    if sum(sector_sizes[:-1]) <= kappa:
        return _WHEEL_CASES[4]
    # 6: x extends the wheel
    for i, j in combinations(range(w), 2):
        hull = wh.sectors[i] | wh.center | wh.sectors[j]
        if x <= hull and x & wh.sectors[i] and x & wh.sectors[j]:
            spokes = []
            for k in range(w):
                spokes.append(wh.spokes[k])
                if k == i or k == j:
                    spokes.append(x & wh.sectors[k])
            if verify_wheel(g, wh.center, tuple(spokes), kappa):
                return _WHEEL_CASES[5]
    for i in range(w):
        for j in range(w):
            if i == j:
                continue
            hull = wh.sectors[i] | wh.center | wh.spokes[j]
            if x <= hull and x & wh.sectors[i]:
                spokes = []
                for k in range(w):
                    spokes.append(wh.spokes[k])
                    if k == i:
                        spokes.append(x & wh.sectors[k])
                if verify_wheel(g, wh.center, tuple(spokes), kappa):
                    return _WHEEL_CASES[5]
    return None


def discover_wheels(g: Graph, kappa: int, cuts: tuple[VertexSet, ...]) -> list[Wheel]:
    """Wheels assembled from wheel-type cut pairs, greedily extended."""
    wheels: list[Wheel] = []
    seen: set[tuple] = set()
    for u, w in combinations(cuts, 2):
        try:
            rel = classify_pair(g, u, w, kappa)
        except Exception:
            continue
        if not isinstance(rel, WheelRelation):
            continue
        wheel = rel.wheel
        grown = True
        while grown:
            grown = False
            for x in cuts:
                lab = _try_extend(g, wheel, x)
                if lab is not None:
                    wheel = lab
                    grown = True
                    break
        key = tuple(sorted(tuple(sorted(c)) for c in wheel.spokes))
        if key not in seen:
            seen.add(key)
            wheels.append(wheel)
    return wheels


def _try_extend(g: Graph, wh: Wheel, x: VertexSet) -> Wheel | None:
    """One case-6 extension step, if x refines the wheel."""
    w = wh.w
    for i, j in combinations(range(w), 2):
        hull = wh.sectors[i] | wh.center | wh.sectors[j]
        if x <= hull and x & wh.sectors[i] and x & wh.sectors[j]:
            spokes = []
            for k in range(w):
                spokes.append(wh.spokes[k])
                if k == i or k == j:
                    spokes.append(x & wh.sectors[k])
            cand = verify_wheel(g, wh.center, tuple(spokes), wh.kappa)
            if cand is not None:
                return cand
    for i in range(w):
        for j in range(w):
            if i == j:
                continue
            hull = wh.sectors[i] | wh.center | wh.spokes[j]
            if x <= hull and x & wh.sectors[i]:
                spokes = []
                for k in range(w):
                    spokes.append(wh.spokes[k])
                    if k == i:
                        spokes.append(x & wh.sectors[k])
                cand = verify_wheel(g, wh.center, tuple(spokes), wh.kappa)
                if cand is not None:
                    return cand
    return None


def check_wheel_laws(g: Graph, wh: Wheel) -> Report:
    """Spoke size law and two-sidedness of non-adjacent wheel cuts."""
    rep = Report("wheel-laws", ok=True)
    kappa = wh.kappa
    expected = (kappa - len(wh.center)) / 2
    for i, c in enumerate(wh.spokes):
        if len(c) != expected:
            rep.fail(spoke=i, size=len(c), expected=expected)
    for i, j in combinations(range(wh.w), 2):
        cut, region = wheel_cut(wh, i, j)
        part = components_after_removal(g, cut)
        if not part.is_cut() or len(cut) != kappa:
            rep.fail(pair=[i, j], error="wheel cut failed")
            continue
        if region_of(part, region) != region:
            rep.fail(pair=[i, j], error="region is not a union of sides")
        if (j - i) % wh.w not in (1, wh.w - 1):
            if part.side_count() != 2:
                rep.fail(pair=[i, j], sides=part.side_count())
    rep.counts["pairs"] = wh.w * (wh.w - 1) // 2
    return rep


def check_wheel_interactions(g: Graph) -> Report:
    """Every enumerated cut interacts with every discovered wheel somehow."""
    rep = Report("wheel-interactions", ok=True)
    kappa, cuts = enumerate_min_cuts(g)
    if g.n <= 2 * kappa:
        rep.skipped = f"n={g.n} <= 2*kappa={2 * kappa}"
        return rep
    wheels = discover_wheels(g, kappa, cuts)
    rep.counts["wheels"] = len(wheels)
    for wh in wheels:
        law = check_wheel_laws(g, wh)
        if not law.ok:
            rep.ok = False
            rep.counterexamples.extend(law.counterexamples)
        for x in cuts:
            label = check_wheel_interaction(g, wh, x)
            if label is None:
                rep.fail(cut=sorted(x), error="no interaction case holds")
            else:
                rep.counts[label] = rep.counts.get(label, 0) + 1
    return rep


def _laminar_cuts_of(
    g: Graph, u: VertexSet, side: VertexSet, cuts: tuple[VertexSet, ...], kappa: int
) -> list[VertexSet]:
    """Enumerated cuts laminar to u inside ``side`` and not (I,kappa-1)-small."""
    out = []
    for w in cuts:
        if w == u or not w <= (u | side):
            continue
        part = components_after_removal(g, w)
        sizes = sorted(len(s) for s in part.sides)
        if sum(sizes[:-1]) <= kappa - 1:
            continue
        out.append(w)
    return out


def check_laminar_structure(g: Graph, u: VertexSet, a: int) -> Report:
    """Maximal laminar cuts have disjoint regions, or obey the matching-cut
    trichotomy when matching cuts exist."""
    rep = Report("laminar-structure", ok=True)
    kappa, cuts = enumerate_min_cuts(g)
    part = components_after_removal(g, u)
    side = part.sides[a]
    if len(side) <= 2 * kappa:
        rep.skipped = "side not larger than 2*kappa"
        return rep
    sizes = sorted(len(s) for s in part.sides)
    if sum(sizes[:-1]) <= kappa - 1:
        rep.skipped = "reference cut is small"
        return rep
    wheels = discover_wheels(g, kappa, cuts)
    for wh in wheels:
        for i, j in combinations(range(wh.w), 2):
            if u == wh.spokes[i] | wh.center | wh.spokes[j]:
                rep.skipped = "reference cut is a wheel cut"
                return rep
    laminar = _laminar_cuts_of(g, u, side, cuts, kappa)
    rep.counts["laminar"] = len(laminar)
    regions = {}
    for w in laminar:
        pw = components_after_removal(g, w)
        guest = {pw.side_of[v] for v in (u - w)}
        if len(guest) != 1:
            rep.fail(w=sorted(w), error="host vertices split across sides")
            continue
        s_w = pw.sides[guest.pop()]
        regions[w] = frozenset(range(g.n)) - w - s_w
    theta = enumerate_theta(g, u, a)
    if theta:
        big_q = frozenset().union(*theta)
        x_cut = matching_cut(g, u, a, big_q, kappa)
        if x_cut is None:
            rep.fail(error="union pivot lost its matching cut")
            return rep
        match_q = x_cut - (u - big_q)
        px = components_after_removal(g, x_cut)
        for w in laminar:
            if w == x_cut:
                continue
            in_region = any(
                w <= x_cut | s for s in px.sides if s <= side - match_q
            )
            is_match = _is_matching_of(g, u, a, w, kappa)
            crossing = False
            if not in_region and not is_match:
                try:
                    rel = classify_pair(g, x_cut, w, kappa)
                    crossing = isinstance(rel, CrossingMatchingRelation)
                except Exception:
                    crossing = False
            if not (in_region or is_match or crossing):
                rep.fail(w=sorted(w), error="matching-cut trichotomy failed")
        rep.counts["branch"] = 1
        return rep
    maximal = [
        w
        for w in laminar
        if not any(
            w2 is not w and regions[w] < regions[w2] for w2 in laminar
        )
    ]
    for w in laminar:
        if w in maximal:
            continue
        if not any(
            regions[w] <= regions[w2] and w <= w2 | regions[w2]
            for w2 in maximal
        ):
            rep.fail(w=sorted(w), error="not under any maximal laminar cut")
    for w1, w2 in combinations(maximal, 2):
        if regions[w1] & regions[w2]:
            rep.fail(
                w1=sorted(w1), w2=sorted(w2), error="maximal regions intersect"
            )
    rep.counts["maximal"] = len(maximal)
    rep.counts["branch"] = 2
    return rep


def _is_matching_of(g: Graph, u: VertexSet, a: int, w: VertexSet, kappa: int) -> bool:
    p = u - w
    if not p:
        return False
    return matching_cut(g, u, a, p, kappa) == w


def check_small_uniqueness(g: Graph, u: int) -> Report:
    """Among enumerated cuts with a small u-side, a unique minimal one exists
    and matches the reference computation."""
    rep = Report("small-uniqueness", ok=True)
    kappa, cuts = enumerate_min_cuts(g)
    if kappa >= g.n - 1:
        rep.skipped = "complete graph"
        return rep
    t = small_side_threshold(g.n, kappa)
    sides = []
    for c in cuts:
        if u in c:
            continue
        side = components_after_removal(g, c).side_containing(u)
        if len(side) <= t:
            sides.append((c, side))
    rep.counts["small-cuts"] = len(sides)
    ref = compute_small_reference(g, u, kappa)
    if not sides:
        if ref is not None:
            rep.fail(error="reference found a cut but enumeration did not")
        return rep
    min_side = min((s for _, s in sides), key=len)
    for c, s in sides:
        if not min_side <= s:
            rep.fail(cut=sorted(c), error="minimal side not nested")
    ref_side = (
        components_after_removal(g, ref).side_containing(u) if ref else None
    )
    if ref is None or ref_side != min_side:
        rep.fail(error="reference disagrees with enumeration", ref=sorted(ref or []))
    return rep
