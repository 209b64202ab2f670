"""Generalised triangles and generalised edges: construction, recognition,
enumeration up to isomorphism, and minor testing inside the class."""

from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .graph import (
    CutPair,
    Graph,
    GraphError,
    bridges_of,
    canonical_code,
    canonical_form,
    complete_bipartite,
    complete_graph,
    components,
    connectivity_level,
    graph6_decode,
    graph6_encode,
    is_connected,
    two_cuts,
    _bits,
)

K3 = complete_graph(3)
K2 = complete_graph(2)

BRUTE_MINOR_LIMIT = 13


def double_subdivide(g: Graph, u: int, v: int) -> Graph:
    """Replace edge uv by two new vertices ``n`` and ``n+1``, each joined to u and v."""
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    a, b = g.n, g.n + 1
    return g.remove_edge(u, v).add_vertices(2, [(u, a), (a, v), (u, b), (b, v)])


@dataclass(frozen=True)
class GentriTrace:
    """A construction of a generalised triangle: edges double-subdivided in
    turn, each given in the labelling of the graph it is applied to."""

    steps: tuple[tuple[int, int], ...] = ()
    base: Graph = K3

    def replay(self) -> Graph:
        g = self.base
        for u, v in self.steps:
            g = double_subdivide(g, u, v)
        return g


@dataclass(frozen=True)
class GenEdge:
    graph: Graph
    u: int
    v: int


def is_generalised_triangle(g: Graph) -> bool:
    if g.n == 3:
        return g.m == 3
    if g.n < 3 or connectivity_level(g) != 2:
        return False
    for cut in two_cuts(g):
        if g.has_edge(cut.x, cut.y):
            return False
        bridges = bridges_of(g, cut)
        if len(bridges) != 3:
            return False
        if any(b.graph.n >= 3 and connectivity_level(b.graph) >= 2 for b in bridges):
            return False
    return True


# -- enumeration -------------------------------------------------------------

def _children(g: Graph) -> list[tuple[bytes, Graph]]:
    out = {}
    for u, v in g.edges:
        h = double_subdivide(g, u, v)
        c, _ = canonical_form(h)
        out.setdefault(graph6_encode(c).encode(), c)
    return sorted(out.items())


def enumerate_gentri(n_max: int, jobs: int = 1) -> dict[int, list[Graph]]:
    """One canonical representative per isomorphism class, keyed by vertex count.

    Each level is the double-subdivision closure of the previous one; within a
    level graphs are ordered by canonical code.
    """
    if n_max < 3 or n_max % 2 == 0:
        raise ValueError("n_max must be odd and at least 3")
    return {n: list(gs) for n, gs in _enumerate(n_max, jobs).items()}


@lru_cache(maxsize=None)
def _enumerate_cached(n_max: int) -> dict[int, tuple[Graph, ...]]:
    return _enumerate(n_max, 1)


def _enumerate(n_max: int, jobs: int) -> dict[int, tuple[Graph, ...]]:
    levels: dict[int, tuple[Graph, ...]] = {3: (canonical_form(K3)[0],)}
    n = 3
    while n + 2 <= n_max:
        seen: dict[bytes, Graph] = {}
        parents = levels[n]
        if jobs > 1 and len(parents) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_children, parents))
        else:
            results = [_children(g) for g in parents]
        for kids in results:
            for code, c in kids:
                seen.setdefault(code, c)
        n += 2
        levels[n] = tuple(seen[k] for k in sorted(seen))
    return levels


def gentri_upto(n_max: int) -> list[Graph]:
    """Flat list of the enumerated classes with at most ``n_max`` vertices (cached)."""
    if n_max % 2 == 0:
        n_max -= 1
    levels = _enumerate_cached(max(n_max, 3))
    return [g for n in sorted(levels) for g in levels[n]]


# -- inverse double subdivision ----------------------------------------------------

def _reverse_with_edge(g: Graph) -> list[tuple[Graph, CutPair, tuple[int, int]]]:
    out = []
    for cut in two_cuts(g):
        trivial = [b for b in bridges_of(g, cut) if b.trivial]
        if len(trivial) < 2:
            continue
        drop = set(trivial[0].interior | trivial[1].interior)
        h, ids = g.remove_vertices(drop)
        x, y = ids.index(cut.x), ids.index(cut.y)
        out.append((h.add_edge(x, y), cut, (x, y)))
    return out


def reverse_steps(g: Graph) -> list[tuple[Graph, CutPair]]:
    """Every inverse double subdivision of ``g``: for each 2-cut with at least two
    trivial bridges, drop two of them and join the cut pair."""
    if g.n == 3:
        return []
    if not is_generalised_triangle(g):
        raise GraphError("not a generalised triangle")
    return [(h, cut) for h, cut, _ in _reverse_with_edge(g)]


_down: dict[bytes, frozenset[bytes]] = {}
_parents: dict[bytes, list[tuple[bytes, Graph, tuple[int, int]]]] = {}


def _predecessors(code: bytes) -> list[tuple[bytes, Graph, tuple[int, int]]]:
    """Canonical immediate predecessors of a canonical gentri, with the edge
    (in the predecessor's canonical labels) whose subdivision gives ``code``."""
    if code not in _parents:
        g = graph6_decode(code)
        preds = {}
        if g.n > 3:
            for h, _, (x, y) in _reverse_with_edge(g):
                c, perm = canonical_form(h)
                key = graph6_encode(c).encode()
                e = (min(perm[x], perm[y]), max(perm[x], perm[y]))
                preds.setdefault(key, (key, c, e))
        _parents[code] = [preds[k] for k in sorted(preds)]
    return _parents[code]


def downset(g: Graph) -> frozenset[bytes]:
    """Canonical codes of every generalised triangle H with H <= g."""
    return _downset(canonical_code(g))


def _downset(code: bytes) -> frozenset[bytes]:
    if code in _down:
        return _down[code]
    stack = [(code, False)]
    while stack:
        c, ready = stack.pop()
        if c in _down:
            continue
        preds = _predecessors(c)
        if ready:
            acc = {c}
            for p, _, _ in preds:
                acc |= _down[p]
            _down[c] = frozenset(acc)
        else:
            stack.append((c, True))
            stack.extend((p, False) for p, _, _ in preds if p not in _down)
    return _down[code]


def poset_minor(h: Graph, g: Graph) -> bool:
    """Whether g is obtainable from h by double subdivisions.

    This implies h is a minor of g.  The converse fails in general: the
    9-vertex ``H?B@_^w`` is a minor of the 11-vertex ``J??E@bGLG]?`` although
    the latter is not a double subdivision of it; see :func:`brute_minor`.
    """
    for x, name in ((h, "h"), (g, "g")):
        if not is_generalised_triangle(x):
            raise GraphError(f"{name} is not a generalised triangle")
    if h.n > g.n:
        return False
    return canonical_code(h) in downset(g)


def minor_witness(h: Graph, g: Graph) -> list[tuple[str, tuple[int, int]]] | None:
    """Subdivision sequence from h up to g as ``(graph6, edge)`` pairs: each edge
    is double-subdivided in the listed (canonically labelled) graph, and the
    last step yields a graph isomorphic to g.  None if h is not below g."""
    if not poset_minor(h, g):
        return None
    target = canonical_code(h)
    start = canonical_code(g)
    prev: dict[bytes, tuple[bytes, Graph, tuple[int, int]] | None] = {start: None}
    queue = deque([start])
    while queue:
        c = queue.popleft()
        if c == target:
            break
        for p, pg, e in _predecessors(c):
            if p not in prev and target in _downset(p):
                prev[p] = (c, pg, e)
                queue.append(p)
    steps = []
    c = target
    while prev[c] is not None:
        succ, pg, e = prev[c]
        steps.append((graph6_encode(pg), e))
        c = succ
    return steps


# -- brute-force minor oracle ------------------------------------------------------

def brute_minor(h: Graph, g: Graph) -> bool:
    """General minor test for connected h by exhaustive branch-set search.

    For connected h and a connected host the branch sets can be taken to
    partition V(g), so every partition into |V(h)| connected parts is tried
    (as the components of a spanning forest) and h is matched into the
    quotient graph, placing h-vertices in order of descending degree.
    """
    if g.n > BRUTE_MINOR_LIMIT:
        raise ValueError("oracle limit")
    if h.n == 0:
        return True
    if not is_connected(h):
        raise ValueError("brute_minor handles connected h only")
    if h.n > g.n or h.m > g.m:
        return False
    for comp in components(g):
        sub = g.induced(comp)[0]
        if sub.n >= h.n and sub.m >= h.m and _minor_connected(h, sub):
            return True
    return False


def _minor_connected(h: Graph, g: Graph) -> bool:
    k = h.n
    order = sorted(range(k), key=lambda v: (-h.degree(v), v))
    need = g.n - k
    seen = set()
    for forest in itertools.combinations(g.edges, need):
        parent = list(range(g.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        ok = True
        for a, b in forest:
            ra, rb = find(a), find(b)
            if ra == rb:
                ok = False
                break
            parent[ra] = rb
        if not ok:
            continue
        roots = [find(v) for v in range(g.n)]
        label = {r: i for i, r in enumerate(sorted(set(roots)))}
        part = tuple(label[r] for r in roots)
        if part in seen:
            continue
        seen.add(part)
        qadj = [0] * k
        for a, b in g.edges:
            pa, pb = part[a], part[b]
            if pa != pb:
                qadj[pa] |= 1 << pb
                qadj[pb] |= 1 << pa
        if _embeds(h, order, qadj):
            return True
    return False


def _embeds(h: Graph, order: list[int], qadj: list[int]) -> bool:
    """Injective map of h into the quotient (same vertex count) preserving edges."""
    k = h.n
    qdeg = [bin(a).count("1") for a in qadj]
    hdeg = h.degrees()
    image = [-1] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        hv = order[i]
        need = 0
        for hw in _bits(h.adj[hv]):
            if image[hw] >= 0:
                need |= 1 << image[hw]
        for qv in range(k):
            if used >> qv & 1 or qdeg[qv] < hdeg[hv]:
                continue
            if qadj[qv] & need != need:
                continue
            image[hv] = qv
            if extend(i + 1, used | 1 << qv):
                return True
            image[hv] = -1
        return False

    return extend(0, 0)


# -- fixed graphs ----------------------------------------------------------------

def h0() -> Graph:
    """K3 with every edge double-subdivided."""
    g = K3
    for u, v in K3.edges:
        g = double_subdivide(g, u, v)
    return g


def _k23_xy() -> tuple[Graph, int, int, int, int, int]:
    # parts {x, y} = {0, 1}, {u, v, w} = {2, 3, 4}
    return complete_bipartite(2, 3), 0, 1, 2, 3, 4


def h1() -> Graph:
    """K_{2,3} with every edge at x double-subdivided."""
    g, x, y, u, v, w = _k23_xy()
    for z in (u, v, w):
        g = double_subdivide(g, x, z)
    return g


def h2() -> Graph:
    """K_{2,3} with xu, xv and yw double-subdivided."""
    g, x, y, u, v, w = _k23_xy()
    for a, b in ((x, u), (x, v), (y, w)):
        g = double_subdivide(g, a, b)
    return g


def fixed_graphs() -> dict[str, Graph]:
    return {"h0": h0(), "h1": h1(), "h2": h2()}


# -- generalised edges -----------------------------------------------------------

def _terminal_code(g: Graph, u: int, v: int) -> bytes:
    # pendant markers pin the terminals (as an unordered pair) for the canonical form
    a = g.n
    return canonical_code(g.add_vertices(2, [(u, a), (v, a + 1)]))


def is_generalised_edge(g: Graph, u: int, v: int) -> bool:
    """Whether g arises from the edge uv by double subdivisions, terminals fixed.

    Exhaustive backward search: undo a subdivision by deleting two degree-2
    non-terminal vertices with the same neighbours {a, b} (ab not an edge) and
    adding ab.
    """
    if u == v:
        raise GraphError("terminals must differ")
    return _gen_edge_search(g, u, v, set())


def _gen_edge_search(g: Graph, u: int, v: int, dead: set[bytes]) -> bool:
    if g.n == 2:
        return g.m == 1
    if g.n % 2 or 3 * (g.n - 2) // 2 + 1 != g.m or g.has_edge(u, v):
        return False
    key = _terminal_code(g, u, v)
    if key in dead:
        return False
    groups: dict[int, list[int]] = {}
    for z in range(g.n):
        if z not in (u, v) and g.degree(z) == 2:
            groups.setdefault(g.adj[z], []).append(z)
    for mask, zs in sorted(groups.items()):
        if len(zs) < 2:
            continue
        a, b = _bits(mask)
        if g.has_edge(a, b):
            continue
        h, ids = g.remove_vertices(zs[:2])
        h = h.add_edge(ids.index(a), ids.index(b))
        if _gen_edge_search(h, ids.index(u), ids.index(v), dead):
            return True
    dead.add(key)
    return False
