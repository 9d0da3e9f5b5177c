"""Acceptance criteria, one test per criterion, each printing a PASS line.

The corpus mixes the named desk graphs with 100 random connected graphs
(n in [8, 40], density varied).  Exact-mode indexes are built once and
shared across criteria.
"""

import random
from itertools import combinations

import pytest

from vertexcuts import families
from vertexcuts.flow import (
    SplitNetwork,
    bulk_small_cuts,
    minimal_cut_toward,
    mixed_connectivity,
    pq_dag,
    vertex_connectivity,
)
from vertexcuts.graph import Graph, components_after_removal, neighborhood_in
from vertexcuts.index import (
    SPACE_FACTOR,
    answer_value,
    build,
    query,
    serialize,
    storage_entries,
    verify_answer,
)
from vertexcuts.oracle import (
    check_classification_exhaustive,
    check_small_uniqueness,
    check_wheel_laws,
    discover_wheels,
    enumerate_min_cuts,
)
from vertexcuts.sparsify import nagamochi_ibaraki
from vertexcuts.structure import (
    enumerate_theta,
    matching_cut,
    theta_star,
    verify_wheel,
)
from conftest import brute_pair_cuts

RANDOM_GRAPHS = 100
SEEDED_BUILDS = 100


def _named_corpus() -> list[tuple[str, Graph]]:
    return [
        ("cycle8", families.cycle(8)),
        ("petersen", families.petersen()),
        ("ladder5", families.ladder(5)),
        ("ladder6", families.ladder(6)),
        ("barbell-chain3", families.clique_chain(3, 4, 2)),
        ("barbell-chain4", families.clique_chain(4, 5, 3)),
        ("matched4", families.two_cliques_matched(4)),
    ]


@pytest.fixture(scope="module")
def corpus():
    rng = random.Random(20240817)
    graphs = _named_corpus()
    i = 0
    while i < RANDOM_GRAPHS:
        n = rng.randint(8, 40)
        p = rng.uniform(0.08, 0.6)
        g = families.random_connected(n, p, rng)
        if g.is_complete():
            continue
        graphs.append((f"random{i}-n{n}", g))
        i += 1
    return graphs


@pytest.fixture(scope="module")
def exact_indexes(corpus):
    return {name: build(g, mode="exact") for name, g in corpus}


def test_criterion_1_query_correctness(corpus, exact_indexes):
    pairs = mismatches = 0
    for name, g in corpus:
        ix = exact_indexes[name]
        for u, v in combinations(range(g.n), 2):
            ans = query(ix, u, v)
            want = min(mixed_connectivity(g, u, v), ix.kappa + 1)
            pairs += 1
            if answer_value(ix, ans) != want or not verify_answer(g, ix, u, v, ans):
                mismatches += 1
    assert mismatches == 0
    print(
        f"\n[acceptance] 1 query-correctness: PASS "
        f"({len(corpus)} graphs, {pairs} pairs, 0 mismatches)"
    )


def test_criterion_2_randomized_construction(corpus, exact_indexes):
    eligible = [(name, g) for name, g in corpus if g.n <= 40]
    agree = 0
    discrepancies = []
    for seed in range(SEEDED_BUILDS):
        name, g = eligible[seed % len(eligible)]
        rnd = build(g, seed=seed, mode="randomized")
        if rnd.records == exact_indexes[name].records:
            agree += 1
        else:
            discrepancies.append({"seed": seed, "graph": name})
    for d in discrepancies:
        print(f"[acceptance] randomized-build discrepancy: {d}")
    assert agree >= 99, discrepancies
    print(
        f"\n[acceptance] 2 randomized-construction: PASS "
        f"({agree}/{SEEDED_BUILDS} seeded builds identical to exact)"
    )


def test_criterion_3_classification_exhaustive(corpus):
    graphs = checked_pairs = 0
    for name, g in corpus:
        if g.n > 14:
            continue
        kappa, _ = vertex_connectivity(g)
        if g.n <= 4 * kappa:
            continue
        rep = check_classification_exhaustive(g)
        assert rep.ok, (name, rep.counterexamples)
        graphs += 1
        checked_pairs += sum(
            v for k, v in rep.counts.items() if k != "cuts"
        )
    assert graphs > 0
    print(
        f"\n[acceptance] 3 classification-exhaustive: PASS "
        f"({graphs} graphs, {checked_pairs} ordered pairs, 0 counterexamples)"
    )


def test_criterion_4_wheel_laws(corpus):
    wheels = 0
    for name, g in corpus:
        if g.n > 14:
            continue
        kappa, cuts = enumerate_min_cuts(g)
        if g.n <= 2 * kappa:
            continue
        for wh in discover_wheels(g, kappa, cuts):
            rep = check_wheel_laws(g, wh)
            assert rep.ok, (name, rep.counterexamples)
            expected = (kappa - len(wh.center)) / 2
            assert all(len(c) == expected for c in wh.spokes)
            wheels += 1
    assert wheels > 0
    # the six-spoke, eight-cut wheel with a two-vertex center
    g, center, spokes = families.synthetic_wheel(6, 2, 3, 3)
    kappa, _ = vertex_connectivity(g)
    assert kappa == 8
    wh = verify_wheel(g, center, spokes, kappa)
    assert wh is not None
    assert all(len(c) == 3 for c in wh.spokes)
    rep = check_wheel_laws(g, wh)
    assert rep.ok, rep.counterexamples
    print(
        f"\n[acceptance] 4 wheel-laws: PASS "
        f"({wheels} discovered wheels + synthetic 6-wheel of 8-cuts, |C_i|=3)"
    )


def _matching_instances(corpus):
    for name, g in corpus:
        if g.n > 14:
            continue
        kappa, cuts = enumerate_min_cuts(g)
        if kappa > 12 or not cuts:
            continue
        for cut in cuts:
            part = components_after_removal(g, cut)
            for a in range(part.side_count()):
                yield name, g, kappa, cut, a, part.sides[a]
    g = families.two_cliques_matched(5)
    cut = frozenset(range(5))
    yield "matched5", g, 5, frozenset(g.adj[0]), 0, None


def test_criterion_5_matching_cut_algebra(corpus):
    rng = random.Random(5)
    instances = theta_members = 0
    for name, g, kappa, cut, a, _side in _matching_instances(corpus):
        part = components_after_removal(g, cut)
        side = part.sides[a]
        theta = enumerate_theta(g, cut, a)
        members = sorted(theta, key=sorted)
        theta_members += len(members)
        for p in members:
            # every member admits the matching cut and a Hall matching
            w = matching_cut(g, cut, a, p, kappa)
            assert w is not None, (name, sorted(p))
            matched = neighborhood_in(g, p, side)
            assert len(matched) == len(p)
            assert _has_perfect_matching(g, p, matched)
        sample = members if len(members) <= 12 else rng.sample(members, 12)
        for p in sample:
            for q in sample:
                if p & q:
                    assert (p & q) in theta
                    assert neighborhood_in(g, p & q, side) == neighborhood_in(
                        g, p, side
                    ) & neighborhood_in(g, q, side)
                if len(side) > len(p | q):
                    assert (p | q) in theta
                    assert neighborhood_in(g, p | q, side) == neighborhood_in(
                        g, p, side
                    ) | neighborhood_in(g, q, side)
        star = theta_star(g, cut, a, kappa)
        assert len(star) <= kappa
        minimal = {}
        for x in sorted(cut):
            containing = [p for p in members if x in p]
            if containing:
                minimal[x] = min(containing, key=lambda s: (len(s), sorted(s)))
        assert star == frozenset(minimal.values())
        instances += 1
    assert instances > 0
    print(
        f"\n[acceptance] 5 matching-cut-algebra: PASS "
        f"({instances} cut-sides, {theta_members} Theta members verified)"
    )


def _has_perfect_matching(g, left, right):
    from vertexcuts.structure import bipartite_matching

    adj = {v: {w for w in g.adj[v] if w in right} for v in left}
    return len(bipartite_matching(sorted(left), sorted(right), adj)) == len(left)


def test_criterion_6_small_uniqueness_and_nesting(corpus, exact_indexes):
    uniq = nest = 0
    for name, g in corpus:
        if g.n <= 14:
            for u in range(g.n):
                rep = check_small_uniqueness(g, u)
                assert rep.ok, (name, u, rep.counterexamples)
                uniq += 1
        if g.n <= 20:
            ix = exact_indexes[name]
            sides = {}
            for u in range(g.n):
                r = ix.record(u)
                if r.small is not None:
                    sides[u] = components_after_removal(g, r.small).side_containing(u)
            for u, side_u in sides.items():
                for v in side_u - {u}:
                    assert v in sides and sides[v] <= side_u, (name, u, v)
                    nest += 1
    assert uniq > 0 and nest > 0
    print(
        f"\n[acceptance] 6 small-uniqueness+laminar-nesting: PASS "
        f"({uniq} uniqueness checks, {nest} nesting pairs, 0 violations)"
    )


def test_criterion_7_sparsification(corpus):
    graphs = pairs = 0
    for name, g in corpus:
        if g.n > 20:
            continue
        for k in (1, 2, 3):
            h = nagamochi_ibaraki(g, k)
            assert h.m <= (k + 1) * g.n
            assert h.edges <= g.edges
            for u, v in combinations(range(g.n), 2):
                assert min(mixed_connectivity(h, u, v), k + 1) == min(
                    mixed_connectivity(g, u, v), k + 1
                ), (name, k, u, v)
                pairs += 1
        graphs += 1
    assert graphs > 0
    print(
        f"\n[acceptance] 7 sparsification: PASS "
        f"({graphs} graphs x k in 1..3, {pairs} pair checks, exact)"
    )


def test_criterion_8_picard_queyrenne(corpus):
    counted = bulk_checked = 0
    for name, g in corpus:
        if g.n > 12:
            continue
        nonadj = [
            (u, v)
            for u, v in combinations(range(g.n), 2)
            if not g.has_edge(u, v)
        ]
        for u, v in nonadj[:6]:
            sn = SplitNetwork(g, frozenset({u}), frozenset({v}))
            value = sn.run()
            dag = pq_dag(sn)
            assert dag.count_min_cut_sets() == len(brute_pair_cuts(g, u, v, value))
            counted += 1
            kappa, _ = vertex_connectivity(g)
            if value != kappa:
                continue
            cuts, covered = bulk_small_cuts(
                g, frozenset({u}), frozenset({v}), kappa
            )
            for w in covered:
                oracle = minimal_cut_toward(g, frozenset({u, w}), frozenset({v}))
                assert cuts[w] == oracle, (name, u, v, w)
                bulk_checked += 1
    assert counted > 0 and bulk_checked > 0
    print(
        f"\n[acceptance] 8 picard-queyrenne: PASS "
        f"({counted} closure counts exact, {bulk_checked} bulk cuts vs oracle)"
    )


def test_criterion_9_space_bound(corpus, exact_indexes):
    for name, g in corpus:
        ix = exact_indexes[name]
        entries = storage_entries(ix)
        assert entries <= SPACE_FACTOR * max(ix.kappa, 1) * ix.n, (
            name,
            entries,
            ix.kappa,
            ix.n,
        )
        assert len(serialize(ix)) > 0
    print(
        f"\n[acceptance] 9 space-bound: PASS "
        f"(entries <= {SPACE_FACTOR}*kappa*n on all {len(corpus)} indexes)"
    )
