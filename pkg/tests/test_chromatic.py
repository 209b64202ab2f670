from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from chromaroot.chromatic import (
    MemoStore,
    chromatic_polynomial,
    jackson_reduction_check,
    nontrivial_factor,
    q_eval,
    smallest_nontrivial_root,
)
from chromaroot.gentri import gentri_upto
from chromaroot.graph import Graph, GraphError, complete_bipartite, complete_graph, cycle_graph, path_graph
from chromaroot.poly import IntPoly, compare_roots, isolate_roots, refine
from oracles import atlas, chromatic_by_interpolation, colourings_naive, stable_partition_counts, colourings

T = IntPoly.t()


def P(g, store=None):
    return chromatic_polynomial(g, store).poly


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


def test_known_families():
    for n in range(1, 8):
        assert P(complete_graph(n)) == IntPoly.falling(n)
        assert P(path_graph(n)) == T * (T - 1) ** (n - 1)
        assert P(Graph(n)) == T**n
    for n in range(3, 10):
        assert P(cycle_graph(n)) == (T - 1) ** n + (T - 1) * (-1) ** n
    assert P(complete_bipartite(2, 3)) == T * (T - 1) * IntPoly.parse("t^3-5*t^2+10*t-7")


def test_colouring_oracle_is_consistent():
    # the partition-based count against plain enumeration of all assignments
    for g in atlas(5):
        parts = stable_partition_counts(g)
        for k in range(4):
            assert colourings(g, k, parts) == colourings_naive(g, k)


def test_atlas_up_to_6_matches_interpolation():
    for g in atlas(6):
        assert list(P(g).coeffs) == chromatic_by_interpolation(g)


def test_generalised_triangles_match_interpolation():
    for g in gentri_upto(9):
        assert list(P(g).coeffs) == chromatic_by_interpolation(g)


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_deletion_contraction(g):
    for u, v in g.edges[:2]:
        assert P(g) == P(g.remove_edge(u, v)) - P(g.contract(u, v))


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_addition_contraction(g):
    non_edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    for u, v in non_edges[:2]:
        assert P(g) == P(g.add_edge(u, v)) + P(g.contract(u, v))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_gluing_on_a_vertex_and_an_edge(a, b):
    # union over one shared vertex: P = P1 P2 / t
    g = Graph(a.n + b.n - 1, list(a.edges) + [(x + a.n - 1, y + a.n - 1) for x, y in b.edges])
    assert P(g) * T == P(a) * P(b)
    if a.n >= 2 and b.n >= 2:
        a2, b2 = a.add_edge(a.n - 2, a.n - 1), b.add_edge(0, 1)
        shift = a.n - 2
        h = Graph(a.n + b.n - 2, list(a2.edges) + [(x + shift, y + shift) for x, y in b2.edges])
        assert P(h) * T * (T - 1) == P(a2) * P(b2)


def test_memo_store_shares_isomorphic_entries(tmp_path):
    store = MemoStore()
    g = cycle_graph(6).add_edge(0, 3)
    p1 = P(g, store)
    size = len(store)
    perm = [3, 5, 0, 1, 4, 2]
    assert P(g.relabel(perm), store) == p1
    assert len(store) == size
    path = tmp_path / "cache.json"
    store.save(str(path))
    fresh = MemoStore()
    assert fresh.load(str(path)) == size
    assert P(g, fresh) == p1
    assert MemoStore().load(str(tmp_path / "missing.json")) == 0


def test_memo_store_rejects_other_versions(tmp_path):
    path = tmp_path / "c.json"
    path.write_text('{"version": 99, "entries": {}}')
    with pytest.raises(ValueError, match="version"):
        MemoStore().load(str(path))


def test_q_sign_and_positivity_below_32_27():
    for g in gentri_upto(11):
        res = chromatic_polynomial(g)
        assert res.q_poly == res.poly * (-1) ** g.n
        for t in (Fraction(11, 10), Fraction(32, 27)):
            assert q_eval(g, t) > 0


def test_nontrivial_factor():
    assert nontrivial_factor(P(complete_graph(3))) == T - 2
    with pytest.raises(ArithmeticError):
        nontrivial_factor(T**2)


def test_smallest_root_small_cases():
    k3 = smallest_nontrivial_root(complete_graph(3))
    assert k3.exact == 2
    assert smallest_nontrivial_root(cycle_graph(4)) is None  # t^2-3t+3 has no real roots
    r = smallest_nontrivial_root(complete_bipartite(2, 3))
    (ref,) = isolate_roots(IntPoly.parse("t^3-5*t^2+10*t-7"), 1, 2)
    assert compare_roots(r, ref) == 0
    with pytest.raises(GraphError):
        smallest_nontrivial_root(path_graph(4))


def test_smallest_root_against_numpy():
    for g in gentri_upto(11):
        coeffs = chromatic_by_interpolation(g)
        roots = np.roots(coeffs[::-1])
        real = sorted(r.real for r in roots if abs(r.imag) < 1e-7 and 1 + 1e-7 < r.real <= 2 + 1e-7)
        got = smallest_nontrivial_root(g)
        if not real:
            assert got is None
        else:
            assert abs(float(refine(got, Fraction(1, 10**9))) - real[0]) < 1e-6


@pytest.mark.parametrize("t", [Fraction(9, 8), Fraction(6, 5), Fraction(3), Fraction(-2, 3)])
def test_jackson_reduction_identity(t):
    g = cycle_graph(6)
    assert jackson_reduction_check(g, [0, 1, 2, 3], [3, 4, 5, 0], 0, 3, t)
    h = complete_bipartite(2, 4)  # cut {0, 1}; split the four middle vertices 2 + 2
    assert jackson_reduction_check(h, [0, 1, 2, 3], [0, 1, 4, 5], 0, 1, t)


def test_jackson_reduction_preconditions():
    g = cycle_graph(6)
    with pytest.raises(GraphError, match="cover"):
        jackson_reduction_check(g, [0, 1, 2, 3], [3, 4, 0], 0, 3, 2)
    with pytest.raises(GraphError, match="intersect"):
        jackson_reduction_check(g, [0, 1, 2, 3, 4], [3, 4, 5, 0], 0, 3, 2)
    with pytest.raises(GraphError, match="not be an edge"):
        jackson_reduction_check(cycle_graph(6).add_edge(0, 3), [0, 1, 2, 3], [3, 4, 5, 0], 0, 3, 2)
    with pytest.raises(GraphError, match="2-connected"):
        jackson_reduction_check(path_graph(4), [0, 1, 2], [2, 3], 0, 2, 2)
