import json
from fractions import Fraction

import pytest

from chromaroot import verify as V
from chromaroot.chromatic import q_eval
from chromaroot.gentri import K2, h0, h1, h2, is_generalised_edge
from chromaroot.graph import canonical_code, complete_graph, cycle_graph
from chromaroot.poly import IntPoly, isolate_roots


def test_grid_shape():
    g = V.TGrid.dyadic(1, Fraction(5, 4))
    assert len(g.samples) >= 64 and g.samples[-1] == Fraction(5, 4)
    assert all(1 < t <= Fraction(5, 4) for t in g.samples)
    assert list(g.samples) == sorted(set(g.samples))
    q = V.constants_table().q_minus
    gq = V.TGrid.dyadic(1, q)
    assert gq.samples[-1] == q and len(gq.samples) >= 64
    with pytest.raises(ValueError):
        V.TGrid.dyadic(2, 1)


def test_constants_values():
    c = V.constants_table()
    assert abs(float(c.q) - 1.2252704261) < 1e-9
    assert abs(float(c.t0) - 1.2955977425) < 1e-9
    assert abs(float(c.t1) - 1.2904175420) < 1e-9
    assert abs(float(c.k23) - 1.4301597090) < 1e-9
    assert abs(float(c.gamma) - 0.571218) < 1e-6
    assert abs(float(c.alpha) - 1.632293) < 1e-6
    assert abs(float(c.beta) - 0.387365) < 1e-6
    assert 0 < c.q.hi - c.q_minus < Fraction(1, 10**12)
    assert V.certify_constants().passed


def test_abg_at_independent_of_table():
    # gamma from its defining polynomial in q, alpha and beta via the two beta forms
    q = Fraction(49, 40)
    g, a, b = V.abg_at(q)
    assert g == (q - 2) * (q**2 - 2 * q - 2) / 4
    assert b == g * (q - 1) / ((1 - g) * (2 - q))


def test_constants_inequalities_at_fixed_points():
    c = V.constants_table()
    i1, i2, i3 = V.constants_lhs(Fraction(9, 8), c)
    assert i1 >= c.alpha and i2 >= c.beta and i3 >= 0
    i1, i2, i3 = V.constants_lhs(c.q_minus, c)
    assert i1 - c.alpha >= 0 and i2 - c.beta >= 0 and i3 >= 0
    rep = V.check_constants_inequalities()
    assert rep.passed and rep.details["violations"] == 0
    with pytest.raises(ValueError):
        V.check_constants_inequalities(V.TGrid.dyadic(1, Fraction(3, 2)))


def test_k1_base_cases():
    t = Fraction(9, 8)
    k3, k2_, c4 = complete_graph(3), complete_graph(2), cycle_graph(4)
    assert q_eval(k3, t) == (2 - t) * q_eval(k2_, t)
    assert q_eval(k3, t) >= q_eval(k2_, t) / 2
    s = q_eval(c4.add_edge(0, 2), t) - q_eval(c4, t) / 2
    assert s == t * (t - 1) * ((t - 2) ** 2 - (t - 1)) / 2 and s > 0


def test_k2_base_cases():
    c = V.constants_table()
    t = Fraction(6, 5)
    c4 = cycle_graph(4)
    s = q_eval(c4.add_edge(0, 2), t) - c.gamma * q_eval(c4, t)
    assert s == t * (t - 1) * ((1 - c.gamma) * (t - 2) ** 2 - c.gamma * (t - 1)) and s > 0
    qk2 = q_eval(complete_graph(2), t)
    assert q_eval(complete_graph(3), t) > Fraction(3, 4) * qk2 > c.beta * qk2


def test_generalised_edge_collection():
    es = V.collect_generalised_edges(10)
    sizes = [h.n for h, _, _ in es]
    assert sorted(sizes) == [2, 4, 6] + [8] * 5 + [10] * 15
    assert all(is_generalised_edge(*e) for e in es)


def test_gluing_helpers():
    k2 = (K2, 0, 1)
    g, u, v = V.glue_at_vertex(k2, k2, 1, 1)
    assert g == complete_graph(3)
    c4 = (cycle_graph(4), 0, 2)
    g, u, v = V.glue_parallel(c4, c4, False)
    assert g.n == 6 and g.m == 8 and is_generalised_edge(g, u, v) is False
    g, u, v = V.glue_parallel(c4, k2, True)
    assert g == cycle_graph(4).add_edge(0, 2)


def test_lemma_sweeps_small():
    assert V.verify_K1_lemma(9).passed
    assert V.verify_K2_lemma(9).passed
    with pytest.raises(ValueError):
        V.verify_K1_lemma(7, V.TGrid.dyadic(1, Fraction(3, 2)))


def test_omega_examples():
    for f, n in (("all_K", 11), ("K1", 11), ("K1K2", 11)):
        rep = V.omega_scan(f, n)
        assert rep.passed, rep.details
        assert Fraction(rep.details["minimum"]["lo"]) > Fraction(rep.details["limit_value"])


def test_omega_minima_do_not_increase_with_n():
    for f in V.CLASS_FILTERS:
        vals = [float(V.omega_scan(f, n).details["minimum"]["approx"]) for n in (7, 9, 11, 13)]
        assert vals == sorted(vals, reverse=True)


def test_omega_empty_class(monkeypatch):
    monkeypatch.setattr(V, "class_members", lambda f, n: [])
    rep = V.omega_scan("K1", 5)
    assert not rep.passed and rep.witnesses == ["no members"]


def test_unknown_class_filter():
    with pytest.raises(ValueError):
        V.class_members("nope", 5)


def test_certify_above():
    (r,) = isolate_roots(IntPoly.parse("t^2-2"), 1, 2)
    assert V.certify_above(r, Fraction(141, 100)).lo > Fraction(141, 100)
    assert V.certify_above(r, Fraction(142, 100)) is None


def test_forbidden_minor_examples():
    rep7 = V.crosscheck_forbidden_minors(7)
    assert rep7.passed and rep7.details["minimal_non_K1"] == [] and rep7.details["minimal_non_K2"] == []
    rep9 = V.crosscheck_forbidden_minors(9)
    assert rep9.details["minimal_non_K1"] == [canonical_code(h0()).decode()]
    rep11 = V.crosscheck_forbidden_minors(11)
    assert rep11.passed
    assert sorted(rep11.details["minimal_non_K2"]) == sorted(canonical_code(h).decode() for h in (h1(), h2()))


def test_reports_serialise_deterministically():
    reps = [V.certify_constants(), V.j_sequence_check(2)]
    a = V.dump_reports(reps, {"x": 1})
    assert a == V.dump_reports(reps, {"x": 1})
    blob = json.loads(a)
    assert blob["passed"] and [c["name"] for c in blob["checks"]] == ["constants", "j_sequences"]


def test_svg_output():
    svg = V.suite_svg([V.omega_scan("K1", 9)])
    assert svg.startswith("<svg") and "K1" in svg and "t0" in svg
