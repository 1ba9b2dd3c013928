from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings

from zfapprox import generators as gen
from zfapprox.graph import (Graph, ParseError, connected_components, induced_subgraph, is_clique,
                            is_connected, is_umbrella_order, is_vertex_cut,
                            minimum_clique_cover_interval, parse_graph, proper_interval_order,
                            serialize_graph, strong_product)
from zfapprox.oracles import min_clique_cover

from conftest import atlas, graphs, to_nx


def test_parse_path():
    g = parse_graph(b"3 2\n0 1\n1 2\n")
    assert g.n == 3 and list(g.edges()) == [(0, 1), (1, 2)]


def test_parse_triangle():
    g = parse_graph("3 3\n0 1\n1 2\n0 2\n")
    assert g == gen.complete(3)


@pytest.mark.parametrize("text,kind,line", [
    (b"2 1\n0 0\n", "self-loop", 2),
    (b"3 2\n0 1\n", "edge-count", 3),
    (b"2 1\n0 2\n", "vertex-range", 2),
    (b"3 2\n0 1\n0 1\n", "duplicate-edge", 3),
    (b"3 1\n1 0\n", "edge-order", 2),
    (b"x\n", "header", 1),
    (b"3 1\n0 1 2\n", "edge", 2),
    (b"\xff", "encoding", 1),
])
def test_parse_errors(text, kind, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.kind == kind
    assert info.value.line == line


@given(graphs(min_n=0, max_n=9))
def test_serialize_round_trip(g):
    assert parse_graph(serialize_graph(g)) == g
    assert serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g)


def test_induced_subgraph_examples():
    sub, idx = induced_subgraph(gen.complete(3), {0, 1})
    assert sub == Graph(2, [(0, 1)]) and idx == {0: 0, 1: 1}
    p4 = gen.path(4)
    sub, idx = induced_subgraph(p4, {0, 2})
    assert sub.n == 2 and sub.m == 0 and idx == {0: 0, 2: 1}
    sub, idx = induced_subgraph(p4, range(4))
    assert sub == p4 and all(idx[v] == v for v in range(4))


def test_induced_subgraph_rejects_foreign_vertices():
    with pytest.raises(ValueError):
        induced_subgraph(gen.path(3), {5})


@given(graphs(max_n=8))
def test_induced_subgraph_matches_networkx(g):
    keep = [v for v in range(g.n) if v % 2 == 0]
    sub, idx = induced_subgraph(g, keep)
    H = to_nx(g).subgraph(keep)
    assert sub.m == H.number_of_edges()
    assert all(sub.has_edge(idx[u], idx[v]) for u, v in H.edges())


def test_vertex_cut_examples():
    assert is_vertex_cut(gen.path(3), {1})
    assert not is_vertex_cut(gen.complete(3), {0})
    assert is_vertex_cut(gen.path(5), {2})


@given(graphs(min_n=2, max_n=8, connected=True))
def test_vertex_cut_matches_networkx(g):
    G = to_nx(g)
    for v in range(g.n):
        H = G.copy()
        H.remove_node(v)
        assert is_vertex_cut(g, {v}) == (not nx.is_connected(H))


def test_components_examples():
    assert connected_components(gen.path(3)) == [frozenset({0, 1, 2})]
    assert connected_components(Graph(3)) == [frozenset({0}), frozenset({1}), frozenset({2})]
    assert connected_components(Graph(4, [(0, 1), (2, 3)])) == [frozenset({0, 1}), frozenset({2, 3})]


@given(graphs(min_n=0, max_n=9))
def test_components_match_networkx(g):
    ours = connected_components(g)
    theirs = sorted((frozenset(c) for c in nx.connected_components(to_nx(g))), key=min)
    assert ours == theirs
    assert is_connected(g) == (len(ours) <= 1)


def test_strong_product_examples():
    p2 = gen.path(2)
    k4, _ = strong_product(p2, p2)
    assert k4 == gen.complete(4)
    g = gen.cycle(5)
    same, index = strong_product(g, Graph(1))
    assert same == g and all(index[v, 0] == v for v in range(5))
    g32, _ = strong_product(gen.path(3), p2)
    assert (g32.n, g32.m) == (6, 11)


@given(graphs(max_n=4), graphs(max_n=4))
@settings(max_examples=60)
def test_strong_product_matches_networkx(g, h):
    prod, index = strong_product(g, h)
    P = nx.strong_product(to_nx(g), to_nx(h))
    assert prod.m == P.number_of_edges()
    assert all(prod.has_edge(index[a], index[b]) for a, b in P.edges())


def test_proper_interval_examples():
    assert proper_interval_order(gen.path(4)) in ([0, 1, 2, 3], [3, 2, 1, 0])
    assert proper_interval_order(gen.cycle(4)) is None
    assert sorted(proper_interval_order(gen.complete(3))) == [0, 1, 2]


def test_c4_has_no_umbrella_order_by_exhaustion():
    c4 = gen.cycle(4)
    assert not any(is_umbrella_order(c4, list(p)) for p in permutations(range(4)))


def _brute_force_proper_interval(g):
    return any(is_umbrella_order(g, list(p)) for p in permutations(range(g.n)))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_recognition_matches_exhaustive_orders(n):
    for g in atlas(n):
        if g.n != n:
            continue
        order = proper_interval_order(g)
        assert (order is not None) == _brute_force_proper_interval(g)
        if order is not None:
            assert is_umbrella_order(g, order)


def test_clique_cover_examples():
    assert minimum_clique_cover_interval(gen.path(3), [0, 1, 2]) == [(0, 1), (1, 2)]
    assert minimum_clique_cover_interval(gen.complete(3), [0, 1, 2]) == [(0, 1, 2)]
    assert len(minimum_clique_cover_interval(gen.path(5), list(range(5)))) == 4
    assert len(min_clique_cover(gen.path(5))) == 4


def test_interval_clique_cover_is_minimum(rng):
    for _ in range(150):
        g, order = gen.random_proper_interval(rng.randint(1, 9), rng)
        cover = minimum_clique_cover_interval(g, order)
        assert all(is_clique(g, c) for c in cover)
        covered = {(min(u, v), max(u, v)) for c in cover for u in c for v in c if u != v}
        assert covered == set(g.edges())
        assert len(cover) == len(min_clique_cover(g))
