import itertools

import networkx as nx
import pytest

from chromaroot.gentri import (
    K3,
    GentriTrace,
    brute_minor,
    double_subdivide,
    enumerate_gentri,
    gentri_upto,
    h0,
    h1,
    h2,
    is_generalised_edge,
    is_generalised_triangle,
    minor_witness,
    poset_minor,
    reverse_steps,
)
from chromaroot.graph import (
    Graph,
    GraphError,
    canonical_code,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    graph6_decode,
)
from oracles import atlas, to_nx

# frozen census of isomorphism classes per vertex count
CENSUS = {3: 1, 5: 1, 7: 1, 9: 3, 11: 6, 13: 20, 15: 69}


def _closure_by_networkx(n_max):
    """Double-subdivision closure deduplicated with networkx isomorphism tests."""
    levels = {3: [to_nx(K3)]}
    n = 3
    while n + 2 <= n_max:
        nxt = []
        for h in levels[n]:
            for u, v in h.edges:
                k = h.copy()
                k.remove_edge(u, v)
                a, b = n, n + 1
                k.add_edges_from([(u, a), (a, v), (u, b), (b, v)])
                if not any(nx.is_isomorphic(k, o) for o in nxt):
                    nxt.append(k)
        n += 2
        levels[n] = nxt
    return {n: len(v) for n, v in levels.items()}


def test_census_matches_frozen_counts():
    levels = enumerate_gentri(15)
    assert {n: len(v) for n, v in levels.items()} == CENSUS


def test_census_matches_independent_closure():
    assert _closure_by_networkx(13) == {n: c for n, c in CENSUS.items() if n <= 13}


def test_parallel_enumeration_is_identical():
    assert enumerate_gentri(13, jobs=2) == enumerate_gentri(13)


def test_enumeration_arguments():
    with pytest.raises(ValueError):
        enumerate_gentri(8)
    with pytest.raises(ValueError):
        enumerate_gentri(1)


def test_recognition():
    for g in gentri_upto(15):
        assert is_generalised_triangle(g)
    for bad in (complete_graph(4), cycle_graph(5), complete_bipartite(2, 4),
                complete_bipartite(2, 3).add_edge(0, 1), complete_graph(2)):
        assert not is_generalised_triangle(bad)


def test_recognition_on_atlas():
    hits = [g for g in atlas(7) if is_generalised_triangle(g)]
    assert sorted(g.n for g in hits) == [3, 5, 7]


def test_double_subdivide():
    g = double_subdivide(K3, 0, 1)
    assert g.n == 5 and not g.has_edge(0, 1)
    assert nx.is_isomorphic(to_nx(g), to_nx(complete_bipartite(2, 3)))
    with pytest.raises(GraphError):
        double_subdivide(g, 0, 1)


def test_trace_replay():
    tr = GentriTrace(((0, 1), (0, 3)))
    g = tr.replay()
    assert g.n == 7 and is_generalised_triangle(g)


def test_reverse_steps():
    assert reverse_steps(K3) == []
    for g in gentri_upto(13):
        for h, cut in reverse_steps(g):
            assert h.n == g.n - 2 and is_generalised_triangle(h)
    with pytest.raises(GraphError):
        reverse_steps(cycle_graph(5))


def test_poset_is_a_partial_order():
    gs = gentri_upto(11)
    for a in gs:
        assert poset_minor(a, a) and poset_minor(K3, a)
    for a, b in itertools.permutations(gs, 2):
        if poset_minor(a, b):
            assert not poset_minor(b, a)
            for c in gs:
                if poset_minor(b, c):
                    assert poset_minor(a, c)


def test_poset_minor_rejects_non_members():
    with pytest.raises(GraphError):
        poset_minor(cycle_graph(5), K3)


def test_minor_witness_replays_to_host():
    g = h1()
    steps = minor_witness(K3, g)
    cur = None
    for g6, (u, v) in steps:
        base = graph6_decode(g6)
        if cur is not None:
            assert canonical_code(base) == canonical_code(cur)
        cur = double_subdivide(base, u, v)
    assert canonical_code(cur) == canonical_code(g)
    assert minor_witness(h1(), K3) is None


def test_poset_implies_brute_minor():
    gs = gentri_upto(11)
    for h, g in itertools.product(gs, repeat=2):
        if poset_minor(h, g):
            assert brute_minor(h, g)


def test_brute_minor_agrees_up_to_9_vertices():
    gs = gentri_upto(9)
    for h, g in itertools.product(gs, repeat=2):
        assert poset_minor(h, g) == brute_minor(h, g)


def test_minor_that_is_not_a_double_subdivision():
    h = graph6_decode("H?B@_^w")
    g = graph6_decode("J??E@bGLG]?")
    assert brute_minor(h, g) and not poset_minor(h, g)
    # explicit model: contract {4, 8, 9}, then h is a spanning subgraph of the quotient
    q = nx.contracted_nodes(nx.contracted_nodes(to_nx(g), 8, 4, self_loops=False), 8, 9, self_loops=False)
    assert nx.algorithms.isomorphism.GraphMatcher(q, to_nx(h)).subgraph_is_monomorphic()
    # and g is not one double subdivision of h
    assert not any(nx.is_isomorphic(to_nx(double_subdivide(h, u, v)), to_nx(g)) for u, v in h.edges)


def test_brute_minor_general_graphs():
    assert brute_minor(complete_graph(4), complete_graph(5))
    assert not brute_minor(complete_graph(4), cycle_graph(8))
    assert brute_minor(cycle_graph(4), complete_bipartite(3, 3))
    with pytest.raises(ValueError, match="connected"):
        brute_minor(Graph(2), K3)
    with pytest.raises(ValueError, match="oracle limit"):
        brute_minor(K3, cycle_graph(14))


def test_fixed_graphs():
    assert [g.n for g in (h0(), h1(), h2())] == [9, 11, 11]
    assert all(is_generalised_triangle(g) for g in (h0(), h1(), h2()))
    assert canonical_code(h1()) != canonical_code(h2())


def test_generalised_edges():
    assert is_generalised_edge(complete_graph(2), 0, 1)
    assert is_generalised_edge(cycle_graph(4), 0, 2)
    assert not is_generalised_edge(cycle_graph(4), 0, 1)
    assert not is_generalised_edge(K3, 0, 1)
    # K2 -> C4 -> subdivide one side of C4
    g = double_subdivide(double_subdivide(complete_graph(2), 0, 1), 0, 2)
    assert is_generalised_edge(g, 0, 1)
    assert not is_generalised_edge(g, 0, 2)
    with pytest.raises(GraphError):
        is_generalised_edge(g, 1, 1)
