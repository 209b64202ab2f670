from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from chromaroot.poly import (
    IntPoly,
    PolyError,
    RootInterval,
    compare_roots,
    isolate_roots,
    poly_gcd,
    refine,
    squarefree_part,
    sturm_count,
)
from oracles import sign_samples

coeff_lists = st.lists(st.integers(-50, 50), min_size=0, max_size=7)
polys = coeff_lists.map(IntPoly)
fractions = st.fractions(min_value=-5, max_value=5, max_denominator=50)


@given(polys, polys, fractions)
def test_ring_operations_agree_with_evaluation(a, b, t):
    assert (a + b).eval(t) == a.eval(t) + b.eval(t)
    assert (a - b).eval(t) == a.eval(t) - b.eval(t)
    assert (a * b).eval(t) == a.eval(t) * b.eval(t)


@given(polys, coeff_lists, st.sampled_from([1, -1]))
def test_exact_division_recovers_factor(a, low, lead):
    b = IntPoly(low + [lead])
    assert (a * b).exact_div(b) == a


@given(polys)
def test_parse_str_roundtrip(p):
    assert IntPoly.parse(str(p)) == p


def test_parse_forms():
    assert IntPoly.parse("t^3-2*t^2+4*t-4").coeffs == (-4, 4, -2, 1)
    assert IntPoly.parse("x**2 - 1") == IntPoly([-1, 0, 1])
    assert IntPoly.parse("-t") == IntPoly([0, -1])


def test_falling_and_derivative():
    assert IntPoly.falling(3) == IntPoly([0, 2, -3, 1])
    assert IntPoly([1, 2, 3]).derivative() == IntPoly([2, 6])
    assert IntPoly([4, 6]).content() == 2


def test_inexact_division_raises():
    with pytest.raises(PolyError):
        IntPoly([1, 0, 1]).exact_div(IntPoly([1, 1]))
    with pytest.raises(PolyError):
        IntPoly([1, 1]).divmod_exact(IntPoly([1, 2]))


def test_gcd_and_squarefree():
    a = IntPoly.from_roots([1, 1, 2, 5])
    b = IntPoly.from_roots([1, 2, 2, -3])
    g = poly_gcd(a, b)
    assert g == IntPoly.from_roots([1, 2]) or g == -IntPoly.from_roots([1, 2])
    sq = squarefree_part(IntPoly.from_roots([3, 3, 3, -1]))
    assert sq.degree == 2 and sq.eval(3) == 0 and sq.eval(-1) == 0


roots_st = st.lists(st.integers(-6, 6), min_size=1, max_size=6)


@settings(max_examples=150, deadline=None)
@given(roots_st, st.integers(-7, 6), st.integers(1, 6))
def test_sturm_count_matches_known_roots(roots, lo, span):
    hi = lo + span
    # shift roots to half-integers so the integer endpoints never hit one
    p = IntPoly([1])
    for r in roots:
        p = p * IntPoly([-(2 * r + 1), 2])
    expected = len({r for r in roots if lo < r + Fraction(1, 2) < hi})
    assert sturm_count(p, lo, hi) == expected
    assert len(isolate_roots(p, lo, hi)) == expected


def test_sturm_count_endpoint_root_raises():
    with pytest.raises(PolyError, match="endpoint"):
        sturm_count(IntPoly.from_roots([1, 2]), 1, 3)


def test_isolate_handles_endpoint_and_repeated_roots():
    p = IntPoly.from_roots([0, 1, 1, 2])
    rs = isolate_roots(p, -1, 3)
    assert len(rs) == 3
    assert len(isolate_roots(p, 0, 2)) == 1  # only t = 1 is inside
    assert all(r.hi - r.lo > 0 for r in rs)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=7))
def test_isolation_agrees_with_dense_sign_sampling(cs):
    p = IntPoly(cs)
    assume(p.degree >= 1)
    lo, hi = Fraction(-3, 1) + Fraction(1, 7919), Fraction(3) + Fraction(1, 7919)
    assume(p.sign_at(lo) and p.sign_at(hi))
    n = len(isolate_roots(p, lo, hi))
    sq = squarefree_part(p)
    # each isolated interval carries a sign change of the squarefree part
    assert n >= sign_samples(list(sq.coeffs), lo, hi, 400)
    assert n == sturm_count(sq, lo, hi)


def test_refine_and_interval_validation():
    p = IntPoly.parse("t^2-2")
    (r,) = isolate_roots(p, 1, 2)
    r = refine(r, Fraction(1, 10**15))
    assert r.width < Fraction(1, 10**15)
    assert r.lo * r.lo < 2 < r.hi * r.hi
    with pytest.raises(PolyError):
        RootInterval(p, 2, 1)
    with pytest.raises(PolyError, match="no sign change"):
        RootInterval(p, 2, 3)
    with pytest.raises(PolyError, match="endpoint"):
        RootInterval(IntPoly([-1, 1]), 1, 2)


def test_refine_exact_root():
    p = IntPoly.from_roots([2]) * IntPoly.parse("t^2-3")
    rs = isolate_roots(p, 1, 3)
    assert len(rs) == 2
    fine = [refine(r, Fraction(1, 10**9)) for r in rs]
    assert any(f.contains(2) for f in fine)


def test_compare_roots():
    (a,) = isolate_roots(IntPoly.parse("t^2-2"), 1, 2)
    (b,) = isolate_roots(IntPoly.parse("t^2-3"), 1, 2)
    (c,) = isolate_roots(IntPoly.parse("t^2-2") * IntPoly.parse("t^2-5"), 1, 2)
    assert compare_roots(a, b) == -1
    assert compare_roots(b, a) == 1
    assert compare_roots(a, c) == 0


@pytest.mark.parametrize(
    "text, lo, hi, value",
    [
        ("t^3-2*t^2+4*t-4", 1, 2, 1.2955977425),
        ("t^4-4*t^3+4*t^2-4*t+4", 1, 2, 1.2252704261),
        ("t^6-8*t^5+27*t^4-56*t^3+82*t^2-76*t+31", 0, 2, 1.2904175420),
        ("t^3-5*t^2+10*t-7", 1, 2, 1.4301597090),
    ],
)
def test_reference_roots(text, lo, hi, value):
    rs = isolate_roots(IntPoly.parse(text), lo, hi)
    r = refine(rs[0], Fraction(1, 10**12))
    assert abs(float(r) - value) < 1e-9


def test_as_json_is_stringly():
    (r,) = isolate_roots(IntPoly.parse("t^2-2"), 1, 2)
    d = r.as_json()
    assert Fraction(d["lo"]) == r.lo and "approx" in d
