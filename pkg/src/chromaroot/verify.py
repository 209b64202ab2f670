"""Verification harness: certified constants, the inequality sweeps over
enumerated class members, omega scans, minor cross-checks and structural
checks.  Every check returns a :class:`Report`; reports serialise to JSON with
a fixed key order so that runs are byte-for-byte reproducible."""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .chromatic import chromatic_polynomial, q_poly, smallest_nontrivial_root
from .classes import (
    CutProperty,
    gen_edge_has_property,
    hamiltonian_path,
    in_K1,
    in_K1K2,
    in_K2,
    j_sequence_k1,
    j_sequence_k2,
    to_ham_form,
    whitney_switch,
    SwitchStep,
)
from .gentri import (
    K2,
    _terminal_code,
    brute_minor,
    gentri_upto,
    h0,
    h1,
    h2,
    poset_minor,
    reverse_steps,
)
from .graph import Graph, bridges_of, canonical_code, components, graph6_encode, two_cuts
from .poly import IntPoly, RootInterval, compare_roots, isolate_roots, refine

WITNESS_LIMIT = 20
MIN_SAMPLES = 64
CONSTANT_WIDTH = Fraction(1, 10**12)

QUARTIC = IntPoly.parse("t^4-4*t^3+4*t^2-4*t+4")
CUBIC_T0 = IntPoly.parse("t^3-2*t^2+4*t-4")
SEXTIC_T1 = IntPoly.parse("t^6-8*t^5+27*t^4-56*t^3+82*t^2-76*t+31")
CUBIC_K23 = IntPoly.parse("t^3-5*t^2+10*t-7")

CLASS_FILTERS = ("all_K", "K1", "K2", "K1K2", "ham_path")


def _fmt(x: Fraction) -> str:
    return str(x)


# -- reports --------------------------------------------------------------------

@dataclass
class Report:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    def as_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details, "witnesses": self.witnesses}


def dump_reports(reports: Sequence[Report], meta: dict | None = None) -> str:
    blob = {
        "meta": meta or {},
        "passed": all(r.passed for r in reports),
        "checks": [r.as_json() for r in reports],
    }
    return json.dumps(blob, indent=2, sort_keys=False) + "\n"


class _Witnesses:
    """Counts violations and keeps the first few as witnesses."""

    def __init__(self):
        self.count = 0
        self.items: list = []

    def add(self, item) -> None:
        self.count += 1
        if len(self.items) < WITNESS_LIMIT:
            self.items.append(item)


def _pool_map(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# -- grids and constants ------------------------------------------------------------

@dataclass(frozen=True)
class TGrid:
    """Samples in the half-open interval (lo, hi]: a dyadic grid plus hi itself."""

    lo: Fraction
    hi: Fraction
    samples: tuple[Fraction, ...]

    @classmethod
    def dyadic(cls, lo, hi, min_samples: int = MIN_SAMPLES) -> "TGrid":
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise ValueError("grid needs lo < hi")
        m = 6
        while True:
            step = Fraction(1, 2**m)
            pts = []
            k = 1
            while lo + k * step < hi:
                pts.append(lo + k * step)
                k += 1
            pts.append(hi)
            if len(pts) >= min_samples:
                return cls(lo, hi, tuple(pts))
            m += 1

    def as_json(self) -> dict:
        return {"lo": _fmt(self.lo), "hi": _fmt(self.hi), "samples": len(self.samples)}


@dataclass(frozen=True)
class ConstantsTable:
    q: RootInterval
    t0: RootInterval
    t1: RootInterval
    k23: RootInterval
    q_minus: Fraction
    gamma: Fraction
    alpha: Fraction
    beta: Fraction
    thirty_two_27: Fraction = Fraction(32, 27)
    five_quarters: Fraction = Fraction(5, 4)

    def as_json(self) -> dict:
        return {
            "32/27": {"exact": "32/27", "approx": f"{float(self.thirty_two_27):.12f}"},
            "q": self.q.as_json(),
            "5/4": {"exact": "5/4", "approx": "1.250000000000"},
            "t1": self.t1.as_json(),
            "t0": self.t0.as_json(),
            "k23": self.k23.as_json(),
            "q_minus": _fmt(self.q_minus),
            "gamma": f"{float(self.gamma):.12f}",
            "alpha": f"{float(self.alpha):.12f}",
            "beta": f"{float(self.beta):.12f}",
        }


def _root_in(p: IntPoly, lo, hi, which: int = 0) -> RootInterval:
    roots = isolate_roots(p, lo, hi)
    return refine(roots[which], CONSTANT_WIDTH)


def abg_at(q: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """gamma, alpha, beta evaluated exactly at a rational stand-in for q."""
    gamma = (q - 2) * (q * q - 2 * q - 2) / 4
    alpha = (1 - gamma) * (2 - q) / (2 - q - gamma)
    beta = 1 - 1 / alpha
    return gamma, alpha, beta


_TABLE: ConstantsTable | None = None


def constants_table() -> ConstantsTable:
    global _TABLE
    if _TABLE is None:
        q = _root_in(QUARTIC, 1, 2)
        gamma, alpha, beta = abg_at(q.lo)
        _TABLE = ConstantsTable(
            q=q,
            t0=_root_in(CUBIC_T0, 1, 2),
            t1=_root_in(SEXTIC_T1, 0, 2),
            k23=_root_in(CUBIC_K23, 1, 2),
            q_minus=q.lo,
            gamma=gamma,
            alpha=alpha,
            beta=beta,
        )
    return _TABLE


def _near(x, target: float, tol: float) -> bool:
    return abs(float(x) - target) <= tol


def certify_constants() -> Report:
    c = constants_table()
    checks = {
        "t0": _near(c.t0, 1.296, 5e-4),
        "q": _near(c.q, 1.225, 5e-4),
        "t1": _near(c.t1, 1.290, 5e-4),
        "k23": _near(c.k23, 1.430, 5e-3),
        "gamma": round(float(c.gamma), 3) == 0.571,
        "alpha": round(float(c.alpha), 3) == 1.632,
        "beta": round(float(c.beta), 3) == 0.387,
        "widths": all(r.width <= CONSTANT_WIDTH for r in (c.q, c.t0, c.t1, c.k23)),
        "q_minus_gap": c.q.hi - c.q_minus < CONSTANT_WIDTH,
        "beta_forms_agree": c.beta
        == c.gamma * (c.q_minus - 1) / ((1 - c.gamma) * (2 - c.q_minus)),
    }
    # 32/27 < q < 5/4 < t1 < t0 < k23 via disjoint intervals
    chain = [(c.thirty_two_27, c.thirty_two_27), (c.q.lo, c.q.hi), (c.five_quarters, c.five_quarters),
             (c.t1.lo, c.t1.hi), (c.t0.lo, c.t0.hi), (c.k23.lo, c.k23.hi)]
    checks["ordering"] = all(a[1] < b[0] for a, b in zip(chain, chain[1:]))
    failed = [k for k, ok in checks.items() if not ok]
    return Report("constants", not failed, {"table": c.as_json(), "checks": checks}, failed)


# -- the alpha/beta/gamma inequalities -------------------------------------------------

def constants_lhs(t: Fraction, c: ConstantsTable) -> tuple[Fraction, Fraction, Fraction]:
    g, b = c.gamma, c.beta
    return (
        t / (t - 1) * g * g - 2 * g + 1,
        (1 - t) / g + 1,
        (1 - g) * (2 - t) * b - (t - 1) * g,
    )


def check_constants_inequalities(grid: TGrid | None = None) -> Report:
    c = constants_table()
    if grid is None:
        grid = TGrid.dyadic(1, c.q_minus)
    if grid.lo < 1 or grid.hi > c.q_minus:
        raise ValueError("grid must lie within (1, q-]")
    bounds = (c.alpha, c.beta, Fraction(0))
    wit = _Witnesses()
    margins = [None, None, None]
    prev = None
    for t in grid.samples:
        vals = constants_lhs(t, c)
        for i, (v, bnd) in enumerate(zip(vals, bounds)):
            if v < bnd:
                wit.add({"inequality": i + 1, "t": _fmt(t)})
            m = v - bnd
            margins[i] = m if margins[i] is None else min(margins[i], m)
            if prev is not None and not v < prev[i]:
                wit.add({"inequality": i + 1, "t": _fmt(t), "reason": "not decreasing"})
        prev = vals
    details = {
        "grid": grid.as_json(),
        "violations": wit.count,
        "min_margin": [f"{float(m):.6e}" for m in margins],
    }
    return Report("constants_inequalities", wit.count == 0, details, wit.items)


# -- generalised edges and instance generation ------------------------------------------

def collect_generalised_edges(n_max: int) -> list[tuple[Graph, int, int]]:
    """Generalised edges with at most ``n_max`` vertices, one per terminal-fixed
    isomorphism class, sorted by their terminal code.

    Every one with at least 4 vertices is the union of two bridges at a 2-cut
    of a generalised triangle with one more vertex, so those are scanned.
    """
    found: dict[bytes, tuple[Graph, int, int]] = {_terminal_code(K2, 0, 1): (K2, 0, 1)}
    for g in gentri_upto(n_max + 1):
        if g.n == 3:
            continue
        for cut in two_cuts(g):
            bs = bridges_of(g, cut)
            for b1, b2 in itertools.combinations(bs, 2):
                keep = sorted(set(b1.vertices) | set(b2.vertices))
                if len(keep) > n_max:
                    continue
                h, ids = g.induced(keep)
                item = (h, ids.index(cut.x), ids.index(cut.y))
                found.setdefault(_terminal_code(*item), item)
    return [found[k] for k in sorted(found)]


def glue_parallel(e1: tuple[Graph, int, int], e2: tuple[Graph, int, int], flip: bool) -> tuple[Graph, int, int]:
    """Union of two generalised edges identified at their terminals (``flip``
    swaps the terminals of the second)."""
    g1, u1, v1 = e1
    g2, u2, v2 = e2
    if flip:
        u2, v2 = v2, u2
    mapping = {u2: u1, v2: v1}
    nxt = g1.n
    for x in range(g2.n):
        if x not in mapping:
            mapping[x] = nxt
            nxt += 1
    edges = list(g1.edges) + [(mapping[a], mapping[b]) for a, b in g2.edges]
    return Graph(nxt, edges), u1, v1


def glue_at_vertex(e1, e2, w1: int, w2: int) -> tuple[Graph, int, int]:
    """G1 ∪ G2 + uv where the two edges share the terminal w (``w1`` in the
    first, ``w2`` in the second); returns the graph with u and v."""
    g1, a1, b1 = e1
    g2, a2, b2 = e2
    u = b1 if w1 == a1 else a1
    v2 = b2 if w2 == a2 else a2
    mapping = {w2: w1}
    nxt = g1.n
    for x in range(g2.n):
        if x not in mapping:
            mapping[x] = nxt
            nxt += 1
    edges = list(g1.edges) + [(mapping[a], mapping[b]) for a, b in g2.edges] + [(u, mapping[v2])]
    return Graph(nxt, edges), u, mapping[v2]


# -- lemma sweeps -------------------------------------------------------------------

def _q_values(g: Graph, samples: Sequence[Fraction]) -> list[Fraction]:
    p = q_poly(g)
    return [p.eval(t) for t in samples]


def _k1_item(arg):
    kind, g6, g, extra, samples = arg
    out = []
    if kind == "vertex":
        u, v = extra
        qg = _q_values(g, samples)
        qc = _q_values(g.contract(u, v), samples)
        for t, a, c in zip(samples, qg, qc):
            if not a >= c / 2:
                out.append(("a", g6, t))
            if not c > 0:
                out.append(("c", g6, t))
            if not a > 0:
                out.append(("e", g6, t))
    elif kind == "member":
        for t, a in zip(samples, _q_values(g, samples)):
            if not a > 0:
                out.append(("e", g6, t))
    else:
        u, w = extra
        qe = _q_values(g, samples)
        qp = _q_values(g.add_edge(u, w), samples) if g.n >= 4 else None
        for i, t in enumerate(samples):
            if not qe[i] > 0:
                out.append(("d", g6, t))
            if qp is not None and not qp[i] >= qe[i] / 2:
                out.append(("b", g6, t))
    return out


def _sweep(name: str, items: list, fn, jobs: int, counts: dict, grid: TGrid) -> Report:
    wit = _Witnesses()
    for res in _pool_map(fn, items, jobs):
        for clause, g6, t in res:
            wit.add({"clause": clause, "graph6": g6, "t": _fmt(t)})
    details = {"grid": grid.as_json(), "instances": counts, "violations": wit.count}
    return Report(name, wit.count == 0, details, wit.items)


def verify_K1_lemma(n_max: int, grid: TGrid | None = None, jobs: int = 1) -> Report:
    if grid is None:
        grid = TGrid.dyadic(1, Fraction(5, 4))
    if grid.lo < 1 or grid.hi > Fraction(5, 4):
        raise ValueError("grid must lie within (1, 5/4]")
    s = grid.samples
    items = []
    counts = {"a": 0, "b": 0, "c": 0, "d": 0, "e": 0}
    for g in gentri_upto(n_max):
        if not in_K1(g):
            continue
        g6 = graph6_encode(g)
        items.append(("member", g6, g, None, s))
        counts["e"] += 1
        for v in range(g.n):
            if g.degree(v) == 2:
                for u in g.neighbors(v):
                    items.append(("vertex", g6, g, (u, v), s))
                    counts["a"] += 1
                    counts["c"] += 1
    for h, u, w in collect_generalised_edges(n_max):
        if gen_edge_has_property(h, u, w, CutProperty.P1):
            items.append(("edge", graph6_encode(h), h, (u, w), s))
            counts["d"] += 1
            counts["b"] += h.n >= 4
    return _sweep("K1_lemma", items, _k1_item, jobs, counts, grid)


def _k2_item(arg):
    kind, g6, graphs, consts, samples = arg
    gamma, alpha, beta = consts
    out = []
    if kind == "e":
        for t, a in zip(samples, _q_values(graphs[0], samples)):
            if not a > 0:
                out.append(("e", g6, t))
    elif kind == "edge":
        h, u, v = graphs
        qe = _q_values(h, samples)
        qp = _q_values(h.add_edge(u, v), samples) if h.n >= 4 else None
        for i, t in enumerate(samples):
            if not qe[i] > 0:
                out.append(("f", g6, t))
            if qp is not None and not qp[i] >= gamma * qe[i]:
                out.append(("c", g6, t))
    elif kind == "parallel":
        g, g1, g2, big = graphs
        qg, q1, q2 = (_q_values(x, samples) for x in (g, g1, g2))
        for i, t in enumerate(samples):
            if not qg[i] > 0:
                out.append(("d", g6, t))
            if big and not qg[i] >= alpha / t * q1[i] * q2[i]:
                out.append(("a", g6, t))
    else:
        g, u, v = graphs
        qg = _q_values(g, samples)
        qc = _q_values(g.contract(u, v), samples)
        for i, t in enumerate(samples):
            if not qg[i] >= beta * qc[i]:
                out.append(("b", g6, t))
    return out


def verify_K2_lemma(n_max: int, grid: TGrid | None = None, jobs: int = 1) -> Report:
    c = constants_table()
    if grid is None:
        grid = TGrid.dyadic(1, c.q_minus)
    if grid.lo < 1 or grid.hi > c.q_minus:
        raise ValueError("grid must lie within (1, q-]")
    s = grid.samples
    consts = (c.gamma, c.alpha, c.beta)
    items = []
    counts = {"a": 0, "b": 0, "c": 0, "d": 0, "e": 0, "f": 0}
    for g in gentri_upto(n_max):
        if in_K2(g):
            items.append(("e", graph6_encode(g), (g,), consts, s))
            counts["e"] += 1
    edges = [e for e in collect_generalised_edges(n_max) if gen_edge_has_property(*e, CutProperty.P2)]
    for h, u, v in edges:
        items.append(("edge", graph6_encode(h), (h, u, v), consts, s))
        counts["f"] += 1
        counts["c"] += h.n >= 4
    for e1, e2 in itertools.combinations_with_replacement(edges, 2):
        if e1[0].n + e2[0].n - 2 <= n_max:
            for flip in (False, True):
                g, _, _ = glue_parallel(e1, e2, flip)
                big = e1[0].n >= 4 and e2[0].n >= 4
                items.append(("parallel", graph6_encode(g), (g, e1[0], e2[0], big), consts, s))
                counts["d"] += 1
                counts["a"] += big
        if e1[0].n + e2[0].n - 1 <= n_max:
            for w1, w2 in itertools.product(e1[1:], e2[1:]):
                g, u, v = glue_at_vertex(e1, e2, w1, w2)
                items.append(("vertex", graph6_encode(g), (g, u, v), consts, s))
                counts["b"] += 1
    return _sweep("K2_lemma", items, _k2_item, jobs, counts, grid)


# -- omega scans ----------------------------------------------------------------------

def class_members(class_filter: str, n_max: int) -> list[Graph]:
    tests: dict[str, Callable[[Graph], bool]] = {
        "all_K": lambda g: True,
        "K1": in_K1,
        "K2": in_K2,
        "K1K2": in_K1K2,
        "ham_path": lambda g: hamiltonian_path(g) is not None,
    }
    if class_filter not in tests:
        raise ValueError(f"unknown class filter {class_filter!r}")
    return [g for g in gentri_upto(n_max) if tests[class_filter](g)]


def class_limit(class_filter: str) -> tuple[str, Fraction]:
    """Name and rational lower bound that every root in the class must exceed."""
    c = constants_table()
    return {
        "all_K": ("32/27", c.thirty_two_27),
        "K1": ("5/4", c.five_quarters),
        "K2": ("q-", c.q_minus),
        "K1K2": ("t0-", c.t0.lo),
        "ham_path": ("t0-", c.t0.lo),
    }[class_filter]


def certify_above(r: RootInterval, bound: Fraction) -> RootInterval | None:
    """Refine ``r`` until its lower end exceeds ``bound``; None if the root is
    at or below it."""
    if r.exact is not None:
        return r if r.exact > bound else None
    while r.lo <= bound:
        if r.hi <= bound or r.poly.sign_at(bound) == 0:
            return None
        r = refine(r, r.width / 2)
    return r


def _root_item(g: Graph):
    return smallest_nontrivial_root(g)


def omega_scan(class_filter: str, n_max: int, jobs: int = 1) -> Report:
    members = class_members(class_filter, n_max)
    name = f"omega_{class_filter}"
    if not members:
        return Report(name, False, {"n_max": n_max, "members": 0}, ["no members"])
    roots = _pool_map(_root_item, members, jobs)
    best = None
    for g, r in zip(members, roots):
        if r is None:
            continue
        if best is None or compare_roots(r, best[1]) < 0:
            best = (g, r)
    limit_name, limit = class_limit(class_filter)
    details = {"n_max": n_max, "members": len(members), "limit": limit_name, "limit_value": _fmt(limit)}
    if best is None:
        details["minimum"] = None
        return Report(name, True, details)
    g, r = best
    cert = certify_above(r, limit)
    ok = cert is not None
    shown = refine(cert if ok else r, CONSTANT_WIDTH)
    details.update({
        "minimiser": graph6_encode(g),
        "minimiser_n": g.n,
        "minimum": shown.as_json(),
        "gap": f"{float(shown.lo - limit):.6e}",
    })
    wit = [] if ok else [{"graph6": graph6_encode(g), "root": shown.as_json()}]
    return Report(name, ok, details, wit)


def j_sequence_check(i_max: int = 4) -> Report:
    """Smallest non-trivial roots of both J-sequences strictly decrease in i."""
    details = {}
    wit = []
    limits = {"k1": Fraction(5, 4), "k2": constants_table().q_minus}
    for name, f in (("k1", j_sequence_k1), ("k2", j_sequence_k2)):
        roots = [smallest_nontrivial_root(f(i)) for i in range(i_max + 1)]
        # gap to the class limit is data only; no convergence rate is claimed
        details[name] = [
            dict(refine(r, CONSTANT_WIDTH).as_json(), gap=f"{float(r) - float(limits[name]):.9f}") for r in roots
        ]
        for i in range(i_max):
            if compare_roots(roots[i + 1], roots[i]) >= 0:
                wit.append({"sequence": name, "i": i + 1})
    return Report("j_sequences", not wit, details, wit)


# -- minors ---------------------------------------------------------------------------

def minor_equivalence(n_max: int) -> Report:
    """poset_minor against the brute-force oracle on every ordered pair."""
    gs = gentri_upto(n_max)
    wit = _Witnesses()
    pairs = 0
    for h in gs:
        for g in gs:
            pairs += 1
            a, b = poset_minor(h, g), brute_minor(h, g)
            if a != b:
                wit.add({"h": graph6_encode(h), "g": graph6_encode(g), "poset": a, "brute": b})
    details = {"n_max": n_max, "pairs": pairs, "mismatches": wit.count}
    return Report("minor_equivalence", wit.count == 0, details, wit.items)


def crosscheck_forbidden_minors(n_max: int) -> Report:
    gs = gentri_upto(n_max)
    H0, H1, H2 = h0(), h1(), h2()
    wit = _Witnesses()
    codes = {g: canonical_code(g) for g in gs}
    k1 = {codes[g]: in_K1(g) for g in gs}
    k2 = {codes[g]: in_K2(g) for g in gs}
    for g in gs:
        g6 = graph6_encode(g)
        if k1[codes[g]] == poset_minor(H0, g):
            wit.add({"graph6": g6, "class": "K1"})
        if k2[codes[g]] == (poset_minor(H1, g) or poset_minor(H2, g)):
            wit.add({"graph6": g6, "class": "K2"})

    def minimal(member: dict) -> list[bytes]:
        out = []
        for g in gs:
            if member[codes[g]]:
                continue
            preds = [canonical_code(p) for p, _ in reverse_steps(g)]
            if all(member.get(p, True) for p in preds):
                out.append(codes[g])
        return sorted(out)

    def expected(hs):
        return sorted(canonical_code(h) for h in hs if h.n <= n_max)

    min1, min2 = minimal(k1), minimal(k2)
    if min1 != expected([H0]):
        wit.add({"class": "K1", "minimal": [c.decode() for c in min1]})
    if min2 != expected([H1, H2]):
        wit.add({"class": "K2", "minimal": [c.decode() for c in min2]})
    details = {
        "n_max": n_max,
        "graphs": len(gs),
        "minimal_non_K1": [c.decode() for c in min1],
        "minimal_non_K2": [c.decode() for c in min2],
        "mismatches": wit.count,
    }
    return Report("forbidden_minors", wit.count == 0, details, wit.items)


# -- structural checks -------------------------------------------------------------------

def _switch_item(g: Graph) -> tuple[int, list]:
    p = chromatic_polynomial(g).poly
    n = 0
    bad = []
    for cut in two_cuts(g):
        for comp in components(g, (cut.x, cut.y)):
            n += 1
            h = whitney_switch(g, SwitchStep(cut, frozenset(comp)))
            if chromatic_polynomial(h).poly != p:
                bad.append({"graph6": graph6_encode(g), "cut": [cut.x, cut.y], "component": sorted(comp)})
    return n, bad


def whitney_check(n_max: int, jobs: int = 1) -> Report:
    gs = [g for g in gentri_upto(n_max) if g.n > 3]
    wit = _Witnesses()
    total = 0
    for n, bad in _pool_map(_switch_item, gs, jobs):
        total += n
        for b in bad:
            wit.add(b)
    details = {"n_max": n_max, "instances": total, "violations": wit.count}
    return Report("whitney_switch", wit.count == 0 and total > 0, details, wit.items)


def _hamform_item(g: Graph):
    h, steps = to_ham_form(g)
    path = hamiltonian_path(h)
    same = chromatic_polynomial(h).poly == chromatic_polynomial(g).poly
    return len(steps), path is not None, same


def hamform_check(n_max: int, jobs: int = 1) -> Report:
    members = [g for g in gentri_upto(n_max) if in_K1K2(g)]
    wit = _Witnesses()
    switches = 0
    for g, (k, has_path, same) in zip(members, _pool_map(_hamform_item, members, jobs)):
        switches += k
        if not (has_path and same):
            wit.add({"graph6": graph6_encode(g), "path": has_path, "same_poly": same})
    for g in gentri_upto(n_max):
        if hamiltonian_path(g) is not None and not in_K1K2(g):
            wit.add({"graph6": graph6_encode(g), "reason": "Hamiltonian path outside K1 ∩ K2"})
    details = {"n_max": n_max, "members": len(members), "switches": switches, "violations": wit.count}
    return Report("hamiltonian_form", wit.count == 0, details, wit.items)


# -- full suite ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SuiteConfig:
    n_max: int = 13
    lemma_n_max: int = 11
    minor_n_max: int = 11
    switch_n_max: int = 15
    min_samples: int = MIN_SAMPLES

    def as_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "lemma_n_max": self.lemma_n_max,
            "minor_n_max": self.minor_n_max,
            "switch_n_max": self.switch_n_max,
            "min_samples": self.min_samples,
        }


def run_suite(cfg: SuiteConfig = SuiteConfig(), jobs: int = 1,
              progress: Callable[[str], None] | None = None) -> list[Report]:
    c = constants_table()
    q_grid = TGrid.dyadic(1, c.q_minus, cfg.min_samples)
    k1_grid = TGrid.dyadic(1, Fraction(5, 4), cfg.min_samples)
    steps: list[tuple[str, Callable[[], Report]]] = [
        ("constants", certify_constants),
        ("constants_inequalities", lambda: check_constants_inequalities(q_grid)),
        ("K1_lemma", lambda: verify_K1_lemma(cfg.lemma_n_max, k1_grid, jobs)),
        ("K2_lemma", lambda: verify_K2_lemma(cfg.lemma_n_max, q_grid, jobs)),
    ]
    for f in CLASS_FILTERS:
        steps.append((f"omega_{f}", lambda f=f: omega_scan(f, cfg.n_max, jobs)))
    steps += [
        ("j_sequences", j_sequence_check),
        ("minor_equivalence", lambda: minor_equivalence(cfg.minor_n_max)),
        ("forbidden_minors", lambda: crosscheck_forbidden_minors(cfg.n_max)),
        ("whitney_switch", lambda: whitney_check(cfg.switch_n_max, jobs)),
        ("hamiltonian_form", lambda: hamform_check(cfg.n_max, jobs)),
    ]
    out = []
    for name, fn in steps:
        if progress:
            progress(name)
        out.append(fn())
    return out


# -- SVG ------------------------------------------------------------------------------------

def number_line_svg(marks: Iterable[tuple[str, float]], lo: float = 1.15, hi: float = 1.45) -> str:
    """Plain SVG number line with labelled ticks."""
    w, h, pad = 800, 160, 40

    def x(v: float) -> float:
        return pad + (v - lo) / (hi - lo) * (w - 2 * pad)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}">',
        f'<line x1="{pad}" y1="80" x2="{w - pad}" y2="80" stroke="black"/>',
    ]
    for k, (label, v) in enumerate(sorted(marks, key=lambda m: m[1])):
        y = 60 if k % 2 else 110
        parts.append(f'<line x1="{x(v):.2f}" y1="72" x2="{x(v):.2f}" y2="88" stroke="black"/>')
        parts.append(f'<text x="{x(v):.2f}" y="{y}" font-size="11" text-anchor="middle">{label} {v:.4f}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def suite_svg(reports: Sequence[Report]) -> str:
    c = constants_table()
    marks = [("32/27", 32 / 27), ("q", float(c.q)), ("5/4", 1.25), ("t1", float(c.t1)),
             ("t0", float(c.t0)), ("K23", float(c.k23))]
    for r in reports:
        if r.name.startswith("omega_") and r.details.get("minimum"):
            marks.append((r.name[6:], float(r.details["minimum"]["approx"])))
    return number_line_svg(marks)
