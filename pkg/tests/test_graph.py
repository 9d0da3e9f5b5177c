import random

import pytest

from vertexcuts import families
from vertexcuts.errors import GraphFormatError
from vertexcuts.graph import (
    Graph,
    IN_CUT,
    components_after_removal,
    format_edge_list,
    is_cut,
    neighborhood_in,
    parse_edge_list,
    region_of,
    side_of,
)
from conftest import brute_min_cuts


def test_components_c8(c8):
    part = components_after_removal(c8, {1, 5})
    assert sorted(map(sorted, part.sides)) == [[0, 6, 7], [2, 3, 4]]
    assert part.sides[0] == frozenset({0, 6, 7})  # ordered by min vertex


def test_components_empty_removal(c8):
    part = components_after_removal(c8, frozenset())
    assert part.side_count() == 1
    assert part.sides[0] == frozenset(range(8))


def test_components_petersen_neighborhood(petersen):
    nb = frozenset(petersen.adj[0])
    part = components_after_removal(petersen, nb)
    assert frozenset({0}) in part.sides
    assert sorted(map(len, part.sides)) == [1, 6]


def test_is_cut(c8):
    assert is_cut(c8, {1, 5})
    assert not is_cut(c8, {1, 2})
    k5 = families.complete(5)
    assert not is_cut(k5, {0, 1, 2})
    with pytest.raises(ValueError):
        is_cut(c8, set(range(8)))


def test_side_of(c8):
    part = components_after_removal(c8, {1, 5})
    assert part.sides[side_of(part, 3)] == frozenset({2, 3, 4})
    assert side_of(part, 1) == IN_CUT
    assert part.sides[side_of(part, 0)] == frozenset({0, 6, 7})


def test_region_of(c8):
    part = components_after_removal(c8, {1, 5})
    assert region_of(part, {2, 7}) == frozenset({0, 2, 3, 4, 6, 7})
    assert region_of(part, {2, 3, 4}) == frozenset({2, 3, 4})
    assert region_of(part, {1, 5}) == frozenset()


def test_neighborhood_in(c8):
    assert neighborhood_in(c8, {1}, {2, 3, 4}) == frozenset({2})
    assert neighborhood_in(c8, set(), {2, 3}) == frozenset()
    star = families.complete_bipartite(1, 4)
    assert neighborhood_in(star, {0}, {1, 2, 3, 4}) == frozenset({1, 2, 3, 4})


def test_no_edges_between_sides():
    rng = random.Random(7)
    for _ in range(25):
        g = families.random_connected(rng.randint(6, 12), rng.uniform(0.2, 0.5), rng)
        removed = frozenset(rng.sample(range(g.n), rng.randint(1, 3)))
        part = components_after_removal(g, removed)
        for u, v in g.edges:
            su, sv = part.side_of[u], part.side_of[v]
            if su != IN_CUT and sv != IN_CUT:
                assert su == sv


def test_unblocked_path_inside_side():
    # from any side vertex there is a path to each cut vertex staying in
    # side + cut
    rng = random.Random(11)
    checked = 0
    for _ in range(30):
        g = families.random_connected(rng.randint(6, 11), rng.uniform(0.2, 0.5), rng)
        kappa, cuts = brute_min_cuts(g)
        if not cuts:
            continue
        cut = cuts[0]
        part = components_after_removal(g, cut)
        for side in part.sides:
            sub_nodes = side | cut
            for p in side:
                reach = {p}
                stack = [p]
                while stack:
                    x = stack.pop()
                    for y in g.adj[x]:
                        if y in sub_nodes and y not in reach:
                            reach.add(y)
                            stack.append(y)
                assert cut <= reach
                checked += 1
    assert checked > 0


def _separated_from_rest(g, blocker, inside):
    """inside is a union of components of g minus blocker."""
    part = components_after_removal(g, blocker)
    return region_of(part, inside) == frozenset(inside) and frozenset(
        inside
    ) != frozenset(range(g.n)) - frozenset(blocker)


def test_intersection_and_union_rules():
    rng = random.Random(13)
    inter = uni = 0
    for _ in range(40):
        g = families.random_connected(rng.randint(7, 11), rng.uniform(0.25, 0.5), rng)
        kappa, cuts = brute_min_cuts(g)
        if len(cuts) < 2:
            continue
        for _ in range(6):
            u, w = rng.sample(cuts, 2)
            pu = components_after_removal(g, u)
            pw = components_after_removal(g, w)
            p = set(rng.choice(pu.sides))
            q = set(rng.choice(pw.sides))
            if p & q:
                blocker = (u & q) | (u & w) | (w & p)
                if p & q != frozenset(range(g.n)) - frozenset(blocker):
                    assert _separated_from_rest(g, blocker, p & q)
                    inter += 1
            rest = frozenset(range(g.n)) - u - p - w - q
            if rest:
                blocker = (u - q) | (w - p)
                target = (p | q) - blocker
                if target and target != frozenset(range(g.n)) - frozenset(blocker):
                    assert _separated_from_rest(g, blocker, target)
                    uni += 1
    assert inter > 5 and uni > 5


def test_graph_validation():
    with pytest.raises(GraphFormatError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphFormatError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphFormatError):
        Graph(2, [(0, 5)])


def test_parse_edge_list():
    g, labels = parse_edge_list("# comment\n a b \n b c # trailing\n c a\n")
    assert g.n == 3 and g.m == 3
    assert labels == ("a", "b", "c")
    g2, labels2 = parse_edge_list("10 2\n2 1\n1 10\n")
    assert labels2 == ("1", "2", "10")  # numeric labels sort numerically
    with pytest.raises(GraphFormatError):
        parse_edge_list("0 1\n2 3\n")  # disconnected
    with pytest.raises(GraphFormatError):
        parse_edge_list("0 0\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("")


def test_format_round_trip(c8):
    text = format_edge_list(c8)
    g, labels = parse_edge_list(text)
    assert g == c8
    assert labels == tuple(str(i) for i in range(8))
