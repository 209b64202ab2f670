"""Exact chromatic polynomials, the sign-normalised Q(G, t) and smallest
non-trivial chromatic roots."""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import (
    Graph,
    GraphError,
    _articulation_points,
    _separating_pairs,
    canonical_code,
    components,
    connectivity_level,
    graph6_encode,
)
from .poly import IntPoly, Number, PolyError, RootInterval, isolate_roots, squarefree_part

T = IntPoly.t()
T_T1 = IntPoly([0, -1, 1])  # t(t-1)

# Graphs above this size are memoised by their labelled graph6 only; the
# canonical search gets expensive on the large symmetric test sequences.
CANON_LIMIT = 24
CACHE_VERSION = 1


class MemoStore:
    """Canonical-code -> chromatic polynomial map, safe to share between threads."""

    def __init__(self):
        self._data: dict[bytes, IntPoly] = {}
        self._lock = threading.Lock()

    def get(self, key: bytes) -> IntPoly | None:
        return self._data.get(key)

    def get_or_insert(self, key: bytes, poly: IntPoly) -> IntPoly:
        with self._lock:
            return self._data.setdefault(key, poly)

    def __len__(self) -> int:
        return len(self._data)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def save(self, path: str) -> None:
        entries = {k.decode(): list(p.coeffs) for k, p in sorted(self._data.items()) if k.startswith(b"c:")}
        tmp = f"{path}.tmp"
        with open(tmp, "w") as fh:
            json.dump({"version": CACHE_VERSION, "entries": entries}, fh)
        os.replace(tmp, path)

    def load(self, path: str) -> int:
        if not os.path.exists(path):
            return 0
        with open(path) as fh:
            blob = json.load(fh)
        if blob.get("version") != CACHE_VERSION:
            raise ValueError(f"unsupported cache version {blob.get('version')!r} in {path}")
        with self._lock:
            for k, cs in blob["entries"].items():
                self._data.setdefault(k.encode(), IntPoly(cs))
        return len(blob["entries"])


default_store = MemoStore()


@dataclass(frozen=True)
class ChromoResult:
    poly: IntPoly
    n: int

    @property
    def q_sign(self) -> int:
        """Q(G,t) = q_sign * P(G,t)."""
        return -1 if self.n % 2 else 1

    @property
    def q_poly(self) -> IntPoly:
        return self.poly * self.q_sign


def _memo_key(g: Graph) -> bytes:
    if g.n <= CANON_LIMIT:
        return b"c:" + canonical_code(g)
    return b"l:" + graph6_encode(g).encode()


def chromatic_polynomial(g: Graph, store: MemoStore | None = None) -> ChromoResult:
    return ChromoResult(_chrom(g, default_store if store is None else store), g.n)


def _chrom(g: Graph, store: MemoStore) -> IntPoly:
    n, m = g.n, g.m
    if n == 0:
        return IntPoly([1])
    if m == 0:
        return T**n
    if m == n * (n - 1) // 2:
        return IntPoly.falling(n)
    key = _memo_key(g)
    hit = store.get(key)
    if hit is not None:
        return hit
    return store.get_or_insert(key, _chrom_reduce(g, store))


def _glue(g: Graph, sides: list[list[int]], shared: list[int]) -> tuple[Graph, Graph]:
    first = sides[0] + shared
    rest = [v for side in sides[1:] for v in side] + shared
    return g.induced(first)[0], g.induced(rest)[0]


def _chrom_reduce(g: Graph, store: MemoStore) -> IntPoly:
    comps = components(g)
    if len(comps) > 1:
        p = IntPoly([1])
        for comp in comps:
            p = p * _chrom(g.induced(comp)[0], store)
        return p

    full = (1 << g.n) - 1
    cuts = _articulation_points(g.adj, full)
    if cuts:
        v = min(cuts)
        g1, g2 = _glue(g, components(g, (v,)), [v])
        return (_chrom(g1, store) * _chrom(g2, store)).exact_div(T)

    pairs = _separating_pairs(g)
    clique_pairs = [c for c in pairs if g.has_edge(c.x, c.y)]
    if clique_pairs:
        x, y = clique_pairs[0]
        g1, g2 = _glue(g, components(g, (x, y)), [x, y])
        return (_chrom(g1, store) * _chrom(g2, store)).exact_div(T_T1)
    if pairs:
        # addition-contraction across the most balanced separating pair
        def largest_side(c):
            return max(len(comp) for comp in components(g, (c.x, c.y)))

        x, y = min(pairs, key=lambda c: (largest_side(c), c))
        return _chrom(g.add_edge(x, y), store) + _chrom(g.contract(x, y), store)

    u, v = _deletion_edge(g)
    return _chrom(g.remove_edge(u, v), store) - _chrom(g.contract(u, v), store)


def _deletion_edge(g: Graph) -> tuple[int, int]:
    deg = g.degrees()
    best = max(deg[u] + deg[v] for u, v in g.edges)
    return next((u, v) for u, v in g.edges if deg[u] + deg[v] == best)


def q_poly(g: Graph, store: MemoStore | None = None) -> IntPoly:
    return chromatic_polynomial(g, store).q_poly


def q_eval(g: Graph, t: Number, store: MemoStore | None = None) -> Fraction:
    """Q(G,t) = (-1)^n P(G,t), exactly."""
    return q_poly(g, store).eval(t)


def nontrivial_factor(p: IntPoly) -> IntPoly:
    """P(G,t) / (t(t-1)) for a 2-connected graph; raises if the division is not exact."""
    try:
        return p.exact_div(T_T1)
    except PolyError as exc:
        raise ArithmeticError("chromatic polynomial not divisible by t(t-1)") from exc


def smallest_nontrivial_root(g: Graph, store: MemoStore | None = None) -> RootInterval | None:
    """Least root in (1, 2] of P(G,t)/(t(t-1)), or None.

    A root sitting exactly at 2 comes back with ``exact == 2`` so callers can
    tell it apart from roots strictly inside (1, 2).
    """
    if g.n < 3 or connectivity_level(g) < 2:
        raise GraphError("requires 2-connected graph")
    rest = nontrivial_factor(chromatic_polynomial(g, store).poly)
    return smallest_root_in(rest, Fraction(1), Fraction(2))


def smallest_root_in(p: IntPoly, lo: Fraction, hi: Fraction) -> RootInterval | None:
    """Least root of ``p`` in the half-open interval (lo, hi]."""
    if p.degree <= 0:
        return None
    inner = isolate_roots(p, lo, hi)
    if inner:
        return inner[0]
    if p.sign_at(hi) == 0:
        sq = squarefree_part(p)
        half = (hi - lo) / 4
        while True:
            a, b = hi - half, hi + half
            if sq.sign_at(a) and sq.sign_at(b) and sq.sign_at(a) != sq.sign_at(b):
                return RootInterval(sq, a, b, exact=hi)
            half /= 2
    return None


def jackson_reduction_check(
    g: Graph, side1: Iterable[int], side2: Iterable[int], u: int, v: int, t: Number,
    store: MemoStore | None = None,
) -> bool:
    """Evaluate both sides of Jackson's 2-cut reduction identity at ``t``.

    ``side1`` and ``side2`` are the vertex sets of G1 and G2; they must cover
    V(G), meet exactly in {u, v}, and carry every edge of G between them.
    """
    s1, s2 = set(side1), set(side2)
    t = Fraction(t)
    if connectivity_level(g) < 2:
        raise GraphError("G must be 2-connected")
    if s1 | s2 != set(g.vertices):
        raise GraphError("G1 and G2 must cover V(G)")
    if s1 & s2 != {u, v}:
        raise GraphError("G1 and G2 must intersect exactly in {u, v}")
    if g.has_edge(u, v):
        raise GraphError("uv must not be an edge of G")
    if len(s1) < 3 or len(s2) < 3:
        raise GraphError("both sides need at least 3 vertices")
    for a, b in g.edges:
        if not ({a, b} <= s1 or {a, b} <= s2):
            raise GraphError(f"edge ({a}, {b}) lies in neither G1 nor G2")

    def parts(side):
        h, ids = g.induced(side)
        return h, h.add_edge(ids.index(u), ids.index(v))

    g1, g1p = parts(s1)
    g2, g2p = parts(s2)
    q = {name: q_eval(h, t, store) for name, h in (("G", g), ("G1", g1), ("G1+", g1p), ("G2", g2), ("G2+", g2p))}
    lhs = t * (t - 1) * q["G"]
    rhs = t * q["G1+"] * q["G2+"] + (t - 1) * (
        q["G1"] * q["G2"] - q["G1+"] * q["G2"] - q["G1"] * q["G2+"]
    )
    return lhs == rhs
