import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zfapprox import generators as gen
from zfapprox.arcs import (ArcSet, MergeError, P1Error, find_chain_twist, is_chain_twist,
                           is_forcing_arc_set, merge_via_cut, reduce_closed_walk,
                           restricted_forcing, reverse, satisfies_p1, sinks, sources,
                           subset_restrict, fas_size_bound_check)
from zfapprox.forcing import canonical_fas, is_zero_forcing_set
from zfapprox.graph import Graph, induced_subgraph
from zfapprox.oracles import brute_force_chain_twist, exact_z, naive_restricted_forcing

from conftest import graphs, random_p1


def test_arc_set_validation():
    with pytest.raises(ValueError):
        ArcSet(gen.path(3), [(0, 2)])
    with pytest.raises(ValueError):
        ArcSet(gen.path(3), [(0, 1), (1, 0)])


def test_p1_examples():
    assert satisfies_p1(ArcSet(gen.path(3), [(0, 1), (1, 2)]))
    assert not satisfies_p1(ArcSet(gen.complete(3), [(0, 1), (1, 2), (2, 0)]))
    assert not satisfies_p1(ArcSet(gen.star(2), [(0, 1), (0, 2)]))


def test_sources_and_sinks_examples():
    p3 = gen.path(3)
    a = ArcSet(p3, [(0, 1), (1, 2)])
    assert sources(a) == {0} and sinks(a) == {2}
    empty = ArcSet(gen.cycle(4))
    assert sources(empty) == sinks(empty) == set(range(4))
    b = ArcSet(p3, [(0, 1)])
    assert sources(b) == {0, 2} and sinks(b) == {1, 2}


def test_sources_need_p1():
    with pytest.raises(P1Error):
        sources(ArcSet(gen.star(2), [(0, 1), (0, 2)]))


def test_reverse_examples():
    p3 = gen.path(3)
    assert reverse(ArcSet(p3, [(0, 1), (1, 2)])).arcs == {(1, 0), (2, 1)}
    assert len(reverse(ArcSet(p3))) == 0
    g = Graph(8, [(3, 7)])
    assert reverse(ArcSet(g, [(3, 7)])).arcs == {(7, 3)}


def test_twist_on_triangle():
    t = find_chain_twist(ArcSet(gen.complete(3), [(0, 1), (1, 2)]))
    assert t.cycle == (0, 1, 2) and t.arc_flags == (True, True, False)
    assert find_chain_twist(ArcSet(gen.path(3), [(0, 1), (1, 2)])) is None


def three_chain_twist():
    # three dipaths 0->..->3, 4->..->7, 8->..->11 with cross edges
    # u_i v_j', v_i' w_j'', w_i'' u_j
    edges = [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (8, 9), (9, 10), (10, 11),
             (1, 6), (5, 10), (2, 9)]
    g = Graph(12, sorted(edges))
    arcs = [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (8, 9), (9, 10), (10, 11)]
    return ArcSet(g, arcs)


def test_twist_through_three_dipaths():
    a = three_chain_twist()
    assert satisfies_p1(a) and not is_forcing_arc_set(a)
    t = find_chain_twist(a)
    assert is_chain_twist(a, t.cycle)
    assert set(t.cycle) == {1, 2, 5, 6, 9, 10}
    assert t.arc_flags.count(False) == 3
    # every chain stalls one step in
    blue = restricted_forcing(a)
    assert {v for v in range(12) if blue[v]} == {0, 1, 4, 5, 8, 9}


def test_forcing_arc_set_examples():
    g = gen.cycle(5)
    assert is_forcing_arc_set(ArcSet(g))
    assert is_forcing_arc_set(canonical_fas(g, {0, 1}))
    assert not is_forcing_arc_set(ArcSet(gen.complete(3), [(0, 1), (1, 2), (2, 0)]))


def test_reduce_closed_walk_splits_figure_eight():
    # two triangles sharing vertex 0, walked as one closed walk
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)])
    a = ArcSet(g, [(0, 1), (1, 2), (0, 3), (3, 4)])
    with pytest.raises(ValueError):
        reduce_closed_walk(ArcSet(g), [0, 1, 2])
    cycle = reduce_closed_walk(ArcSet(g, [(0, 1), (1, 2), (2, 0), (3, 4)]), [0, 1, 2, 0, 3, 4])
    assert is_chain_twist(ArcSet(g, [(0, 1), (1, 2), (2, 0), (3, 4)]), cycle)
    assert not is_forcing_arc_set(a)


@given(graphs(max_n=7), st.randoms(use_true_random=False))
@settings(max_examples=300)
def test_characterisation_against_restricted_simulation(g, r):
    a = random_p1(g, r)
    truth = naive_restricted_forcing(g, a.arcs) == frozenset(range(g.n))
    assert is_forcing_arc_set(a) == truth
    assert (brute_force_chain_twist(g, a.arcs) is None) == truth
    twist = find_chain_twist(a)
    if twist is not None:
        assert is_chain_twist(a, twist.cycle)


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_reverse_keeps_forcing_arc_sets(g, r):
    a = random_p1(g, r)
    assert sources(reverse(a)) == sinks(a)
    if is_forcing_arc_set(a):
        assert is_forcing_arc_set(reverse(a))
        # sinks of a forcing arc set force the graph
        assert is_zero_forcing_set(g, sinks(a))


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_subsets_of_forcing_arc_sets(g, r):
    a = random_p1(g, r)
    if is_forcing_arc_set(a):
        arcs = sorted(a.arcs)
        keep = set(r.sample(arcs, r.randint(0, len(arcs))))
        assert is_forcing_arc_set(subset_restrict(a, lambda arc: arc in keep))


def test_subset_restrict_examples():
    a = canonical_fas(gen.path(5), {0})
    assert len(subset_restrict(a, lambda arc: False)) == 0
    assert subset_restrict(a, lambda arc: True) == a
    bag = {2, 3}
    kept = subset_restrict(a, lambda arc: arc[1] not in bag)
    assert bag <= sources(kept) and is_forcing_arc_set(kept)


def test_merge_on_p3():
    g = gen.path(3)
    g1, _ = induced_subgraph(g, {0, 1})
    g2, _ = induced_subgraph(g, {1, 2})
    merged = merge_via_cut(g, {1}, {0}, ArcSet(g1, [(1, 0)]), ArcSet(g2, [(0, 1)]))
    assert merged.arcs == {(1, 0), (2, 1)}
    assert is_forcing_arc_set(merged) and sources(merged) == {2}


def test_merge_on_p5():
    g = gen.path(5)
    g1, i1 = induced_subgraph(g, {0, 1, 2})
    g2, i2 = induced_subgraph(g, {2, 3, 4})
    a1 = ArcSet(g1, [(i1[2], i1[1]), (i1[1], i1[0])])
    a2 = ArcSet(g2, [(i2[2], i2[3]), (i2[3], i2[4])])
    merged = merge_via_cut(g, {2}, {0, 1}, a1, a2)
    assert merged.arcs == {(2, 1), (1, 0), (4, 3), (3, 2)}
    assert is_forcing_arc_set(merged) and sources(merged) == {4}


def test_merge_preconditions():
    g = gen.path(3)
    g1, _ = induced_subgraph(g, {0, 1})
    g2, _ = induced_subgraph(g, {1, 2})
    with pytest.raises(MergeError) as info:
        merge_via_cut(g, {1}, {0}, ArcSet(g1, [(1, 0)]), ArcSet(g2, [(1, 0)]))
    assert info.value.kind == "cut-not-source-a2"
    with pytest.raises(MergeError) as info:
        merge_via_cut(g, {0}, {1}, ArcSet(g1), ArcSet(g2))
    assert info.value.kind == "not-a-cut"
    with pytest.raises(MergeError) as info:
        merge_via_cut(g, {1}, {0, 2}, ArcSet(g1), ArcSet(g2))
    assert info.value.kind == "not-a-component"
    with pytest.raises(MergeError) as info:
        merge_via_cut(g, {1}, {0}, ArcSet(g), ArcSet(g2))
    assert info.value.kind == "wrong-host-a1"


def test_size_bound_examples():
    for n in range(1, 7):
        p = gen.path(n)
        z, s = exact_z(p)
        a = canonical_fas(p, s)
        assert z == 1 and len(a) == n - 1 and fas_size_bound_check(p, a, z)
        k = gen.complete(n)
        z, s = exact_z(k)
        a = canonical_fas(k, s)
        assert len(a) == (1 if n > 1 else 0) and fas_size_bound_check(k, a, z)
    assert fas_size_bound_check(gen.cycle(4), ArcSet(gen.cycle(4)), 2)


def test_random_p1_helper_is_p1():
    rnd = random.Random(3)
    for _ in range(50):
        g = gen.random_connected(7, rnd)
        assert satisfies_p1(random_p1(g, rnd))
