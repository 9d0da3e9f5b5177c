import random
from itertools import combinations

import pytest

from vertexcuts import families
from vertexcuts.errors import IndexFormatError
from vertexcuts.flow import mixed_connectivity
from vertexcuts.graph import Graph, components_after_removal
from vertexcuts.index import (
    AtLeastKappaPlus1,
    MixedSeparated,
    SPACE_FACTOR,
    Separated,
    answer_value,
    build,
    compute_small_reference,
    deserialize,
    query,
    serialize,
    storage_entries,
    verify_answer,
)
from conftest import brute_mixed_connectivity, random_kappa_graphs


def _oracle_verdict(g, ix, u, v):
    return min(brute_mixed_connectivity(g, u, v), ix.kappa + 1)


def test_compute_small_reference_examples(c8, petersen):
    assert compute_small_reference(petersen, 0, 3) == frozenset(petersen.adj[0])
    assert compute_small_reference(c8, 0, 2) == frozenset({1, 7})
    k5 = families.complete(5)
    assert all(compute_small_reference(k5, u, 4) is None for u in range(5))


def test_build_petersen_records(petersen):
    ix = build(petersen, mode="exact")
    assert ix.kappa == 3 and ix.t == 4
    for u in range(10):
        r = ix.record(u)
        assert r.small == frozenset(petersen.adj[u])
        assert r.side_size == 1
        assert r.tiny_side == frozenset({u})
        assert set(r.bits) == set(petersen.adj[u])
        assert all(r.bits.values())


def test_build_k5(petersen):
    k5 = families.complete(5)
    ix = build(k5, mode="exact")
    assert all(r.small is None for r in ix.records)
    for u, v in combinations(range(5), 2):
        assert isinstance(query(ix, u, v), AtLeastKappaPlus1)


def test_query_c8(c8):
    ix = build(c8, mode="exact")
    ans = query(ix, 0, 4)
    assert isinstance(ans, Separated)
    assert ans.cut == frozenset({1, 7})  # Case II tie resolved toward u
    assert _oracle_verdict(c8, ix, 0, 4) == 2


def test_query_petersen_adjacent(petersen):
    ix = build(petersen, mode="exact")
    ans = query(ix, 0, 1)
    assert isinstance(ans, MixedSeparated)
    assert ans.edge == (0, 1)
    assert ans.vertices == frozenset(petersen.adj[0]) - {1}
    assert brute_mixed_connectivity(petersen, 0, 1) == 3


def test_query_case_two_pendants():
    g = families.clique_with_pendants(5, 3, 2)
    ix = build(g, mode="exact")
    assert ix.kappa == 3
    a, b = 5, 6
    r = ix.record(a)
    assert r.small == frozenset({0, 1, 2}) and r.side_size == 1
    ans = query(ix, a, b)
    assert isinstance(ans, Separated) and ans.cut == frozenset({0, 1, 2})
    assert _oracle_verdict(g, ix, a, b) == 3


def test_query_case_one_positive():
    base = families.clique_with_pendants(5, 3, 2)
    g = Graph(7, list(base.edges) + [(5, 6)])
    ix = build(g, mode="exact")
    ra, rb = ix.record(5), ix.record(6)
    assert ra.small == rb.small and ra.side_id == rb.side_id
    ans = query(ix, 5, 6)
    assert isinstance(ans, AtLeastKappaPlus1)
    assert _oracle_verdict(g, ix, 5, 6) == ix.kappa + 1


def test_query_rejects_same_vertex(c8):
    ix = build(c8, mode="exact")
    with pytest.raises(ValueError):
        query(ix, 3, 3)


def test_query_full_oracle_sweep():
    instances = [
        (families.cycle(8), None),
        (families.petersen(), None),
        (families.ladder(6), None),
        (families.clique_chain(3, 4, 2), None),
    ]
    instances += [(g, k) for g, k in random_kappa_graphs(83, 10, 8, 13, 4)]
    for g, _ in instances:
        ix = build(g, mode="exact")
        for u, v in combinations(range(g.n), 2):
            ans = query(ix, u, v)
            assert answer_value(ix, ans) == _oracle_verdict(g, ix, u, v), (
                g.edges,
                u,
                v,
            )
            assert verify_answer(g, ix, u, v, ans)


def test_laminar_nesting_of_records():
    # v inside u's stored side implies v's side nests strictly inside
    for g, _ in random_kappa_graphs(89, 10, 8, 14, 4):
        ix = build(g, mode="exact")
        sides = {}
        for u in range(g.n):
            r = ix.record(u)
            if r.small is not None:
                sides[u] = components_after_removal(g, r.small).side_containing(u)
        for u, side_u in sides.items():
            for v in side_u - {u}:
                assert v in sides
                assert sides[v] <= side_u


def test_coverage_of_stored_cuts():
    # whenever the oracle says kappa, one of the two stored (mixed) cuts
    # separates the pair
    for g, _ in random_kappa_graphs(91, 8, 8, 12, 3):
        ix = build(g, mode="exact")
        for u, v in combinations(range(g.n), 2):
            if brute_mixed_connectivity(g, u, v) != ix.kappa:
                continue
            separated = False
            for a, b in ((u, v), (v, u)):
                r = ix.record(a)
                if r.small is None:
                    continue
                if not g.has_edge(u, v):
                    part = components_after_removal(g, r.small)
                    if (
                        part.side_of[u] >= 0
                        and part.side_of[v] >= 0
                        and part.side_of[u] != part.side_of[v]
                    ):
                        separated = True
                elif b in r.small:
                    reduced = g.without_edge(a, b)
                    part = components_after_removal(reduced, r.small - {b})
                    if part.side_of[a] != part.side_of[b]:
                        separated = True
            assert separated


def test_randomized_build_matches_exact():
    for i, (g, _) in enumerate(random_kappa_graphs(101, 12, 8, 20, 4)):
        exact = build(g, mode="exact")
        rnd = build(g, seed=i, mode="randomized")
        assert exact.records == rnd.records


def test_serialize_round_trip(petersen):
    ix = build(petersen, mode="exact")
    blob = serialize(ix)
    back = deserialize(blob)
    assert back.records == ix.records
    assert back.n == ix.n and back.kappa == ix.kappa and back.t == ix.t


def test_serialize_empty_records():
    ix = build(families.complete(5), mode="exact")
    assert deserialize(serialize(ix)).records == ix.records


def test_deserialize_corruption(petersen):
    ix = build(petersen, mode="exact")
    blob = serialize(ix)
    with pytest.raises(IndexFormatError):
        deserialize(blob[: len(blob) // 2])
    with pytest.raises(IndexFormatError):
        deserialize(b'{"version": 99}')
    with pytest.raises(IndexFormatError):
        deserialize(b"\xff\xfe garbage")


def test_space_bound():
    graphs = [families.petersen(), families.cycle(8), families.ladder(7)]
    graphs += [g for g, _ in random_kappa_graphs(103, 8, 8, 20, 5)]
    for g in graphs:
        ix = build(g, mode="exact")
        assert storage_entries(ix) <= SPACE_FACTOR * max(ix.kappa, 1) * ix.n
