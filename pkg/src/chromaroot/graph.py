"""Simple undirected graphs on dense integer vertex ids.

Vertices are always ``0..n-1``; every operation that removes or merges
vertices re-packs the ids and, where the caller may need it, returns the
mapping back to the original ids.  Adjacency is stored as one bitmask per
vertex, which keeps the small-graph algorithms here cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

CanonicalCode = bytes


class GraphError(ValueError):
    pass


class Graph:
    """Immutable simple graph with vertex set ``range(n)``."""

    __slots__ = ("n", "edges", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("negative vertex count")
        adj = [0] * n
        es = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u > v:
                u, v = v, u
            es.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(es))
        self.adj: tuple[int, ...] = tuple(adj)
        self._hash = hash((n, self.edges))

    @classmethod
    def from_adj(cls, adj: Sequence[int]) -> "Graph":
        n = len(adj)
        edges = [(u, v) for u in range(n) for v in _bits(adj[u]) if u < v]
        return cls(n, edges)

    # -- basic queries -------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(a).count("1") for a in self.adj]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    # -- derived graphs ------------------------------------------------
    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges + ((u, v),))

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = (min(u, v), max(u, v))
        if e not in set(self.edges):
            raise GraphError(f"({u}, {v}) is not an edge")
        return Graph(self.n, [f for f in self.edges if f != e])

    def add_vertices(self, k: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        return Graph(self.n + k, list(self.edges) + list(edges))

    def induced(self, keep: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``keep``; returns it with ``old_ids[new] = old``."""
        old_ids = tuple(sorted(set(keep)))
        pos = {v: i for i, v in enumerate(old_ids)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(old_ids), edges), old_ids

    def remove_vertices(self, drop: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        drop = set(drop)
        return self.induced(v for v in range(self.n) if v not in drop)

    def contract(self, u: int, v: int) -> "Graph":
        """Identify ``u`` and ``v`` (need not be adjacent), dropping loops and
        parallel edges.  The merged vertex keeps the smaller id; ids above the
        larger one shift down by one."""
        if u == v:
            raise GraphError("cannot contract a vertex with itself")
        a, b = min(u, v), max(u, v)

        def f(x: int) -> int:
            if x == b:
                return a
            return x - 1 if x > b else x

        edges = {(f(x), f(y)) for x, y in self.edges}
        return Graph(self.n - 1, [(x, y) for x, y in edges if x != y])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def disjoint_union(self, other: "Graph") -> "Graph":
        k = self.n
        return Graph(k + other.n, list(self.edges) + [(u + k, v + k) for u, v in other.edges])


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# -- connectivity --------------------------------------------------------

def _component_masks(adj: Sequence[int], alive: int) -> list[int]:
    comps = []
    rest = alive
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= alive & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Vertex lists of the components of ``g - removed``, ordered by least vertex."""
    alive = (1 << g.n) - 1
    for v in removed:
        alive &= ~(1 << v)
    return [list(_bits(c)) for c in _component_masks(g.adj, alive)]


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(_component_masks(g.adj, (1 << g.n) - 1)) == 1


def _disconnects(g: Graph, drop: Sequence[int]) -> bool:
    alive = (1 << g.n) - 1
    for v in drop:
        alive &= ~(1 << v)
    return len(_component_masks(g.adj, alive)) > 1


def connectivity_level(g: Graph) -> int:
    """Vertex connectivity capped at 3 (3 means "3 or more").

    Complete graphs report ``min(n - 1, 3)``.
    """
    if g.n == 0:
        raise GraphError("empty input")
    if not is_connected(g):
        return 0
    if g.m == g.n * (g.n - 1) // 2:
        return min(g.n - 1, 3)
    for k in (1, 2):
        for drop in itertools.combinations(range(g.n), k):
            if _disconnects(g, drop):
                return k
    return 3


def _articulation_points(adj: Sequence[int], alive: int) -> set[int]:
    """Articulation points of the subgraph induced on ``alive`` (iterative lowpoint DFS)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cuts: set[int] = set()
    counter = 0
    for root in _bits(alive):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack = [(root, -1, iter(list(_bits(adj[root] & alive))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(list(_bits(adj[w] & alive)))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if p != root and low[v] >= disc[p]:
                    cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return cuts


def cut_vertices(g: Graph) -> list[int]:
    if not is_connected(g):
        raise GraphError("requires connected graph")
    return sorted(_articulation_points(g.adj, (1 << g.n) - 1))


# -- 2-cuts and bridges --------------------------------------------------

@dataclass(frozen=True, order=True)
class CutPair:
    x: int
    y: int

    def __post_init__(self):
        if self.x == self.y:
            raise GraphError("cut pair needs two distinct vertices")
        if self.x > self.y:
            a, b = self.y, self.x
            object.__setattr__(self, "x", a)
            object.__setattr__(self, "y", b)

    def __iter__(self):
        return iter((self.x, self.y))

    def __contains__(self, v: object) -> bool:
        return v == self.x or v == self.y


@dataclass(frozen=True)
class Bridge:
    """An {x,y}-bridge: ``graph`` is dense-relabelled; ``vertex_map[i]`` is the
    host id of bridge vertex ``i``."""

    host_cut: CutPair
    graph: Graph
    vertex_map: tuple[int, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.vertex_map)

    @property
    def interior(self) -> frozenset[int]:
        return self.vertices - {self.host_cut.x, self.host_cut.y}

    @property
    def trivial(self) -> bool:
        return self.graph.n == 3

    def local(self, host_vertex: int) -> int:
        return self.vertex_map.index(host_vertex)

    def degree_of(self, host_vertex: int) -> int:
        return self.graph.degree(self.local(host_vertex))


def _separating_pairs(g: Graph) -> list[CutPair]:
    full = (1 << g.n) - 1
    found = set()
    for x in range(g.n):
        for y in _articulation_points(g.adj, full & ~(1 << x)):
            found.add(CutPair(x, y))
    return sorted(found)


def two_cuts(g: Graph) -> list[CutPair]:
    """All vertex pairs whose removal disconnects a 2-connected ``g``, sorted."""
    if connectivity_level(g) < 2:
        raise GraphError("requires 2-connected graph")
    return _separating_pairs(g)


def bridges_of(g: Graph, cut: CutPair) -> list[Bridge]:
    x, y = cut
    comps = components(g, (x, y))
    if len(comps) < 2:
        raise GraphError(f"{{{x}, {y}}} is not a 2-cut")
    out = []
    for comp in comps:
        sub, ids = g.induced(comp + [x, y])
        if sub.has_edge(ids.index(x), ids.index(y)):
            sub = sub.remove_edge(ids.index(x), ids.index(y))
        out.append(Bridge(cut, sub, ids))
    return out


# -- canonical form ------------------------------------------------------

def _refine(nbrs: Sequence[Sequence[int]], colours: list[int]) -> list[int]:
    """Colour refinement to the coarsest equitable partition refining ``colours``.

    Colours are renumbered by sorted signature, so the result depends only on
    the isomorphism type of (graph, initial colouring).
    """
    count = len(set(colours))
    while True:
        sigs = [(colours[v], tuple(sorted(colours[u] for u in nbrs[v]))) for v in range(len(nbrs))]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colours = [order[s] for s in sigs]
        if len(order) == count:
            return colours
        count = len(order)


def canonical_form(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Canonically relabelled copy of ``g`` and the permutation used
    (``perm[v]`` is the new id of ``v``).

    Individualisation-refinement search keeping the largest leaf code.
    Branches are skipped when the vertex is a twin of, or in the same orbit
    as, an already explored vertex of the cell; orbits come from the
    automorphisms exposed by equal leaves and fixing the current prefix.
    """
    n = g.n
    if n == 0:
        return g, ()
    nbrs = [g.neighbors(v) for v in range(n)]
    adj = g.adj
    state: dict = {"best": None, "best_perm": None, "first": None, "first_perm": None}
    autos: list[tuple[int, ...]] = []

    def record(p1: tuple[int, ...], p2: tuple[int, ...]) -> None:
        inv = [0] * n
        for v, i in enumerate(p1):
            inv[i] = v
        sigma = tuple(inv[p2[v]] for v in range(n))
        if any(sigma[v] != v for v in range(n)):
            autos.append(sigma)

    def orbit_rep(v: int, prefix: list[int]) -> int:
        gens = [a for a in autos if all(a[p] == p for p in prefix)]
        if not gens:
            return v
        parent = list(range(n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a in gens:
            for x in range(n):
                rx, ry = find(x), find(a[x])
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        return find(v)

    def search(colours: list[int], prefix: list[int]) -> None:
        ncol = max(colours) + 1
        if ncol == n:
            perm = tuple(colours)
            code = graph6_encode(g.relabel(perm)).encode()
            if state["first"] is None:
                state["first"], state["first_perm"] = code, perm
            elif code == state["first"]:
                record(state["first_perm"], perm)
            if state["best"] is None or code > state["best"]:
                state["best"], state["best_perm"] = code, perm
            elif code == state["best"] and perm != state["best_perm"]:
                record(state["best_perm"], perm)
            return
        sizes = [0] * ncol
        for c in colours:
            sizes[c] += 1
        target = next(c for c in range(ncol) if sizes[c] > 1)
        cell = [v for v in range(n) if colours[v] == target]
        reps: list[int] = []
        for v in cell:
            if any(adj[v] == adj[r] or adj[v] | 1 << v == adj[r] | 1 << r for r in reps):
                continue
            if reps:
                rv = orbit_rep(v, prefix)
                if any(orbit_rep(r, prefix) == rv for r in reps):
                    continue
            reps.append(v)
            split = [2 * c for c in colours]
            split[v] -= 1
            search(_refine(nbrs, split), prefix + [v])

    search(_refine(nbrs, [0] * n), [])
    perm = state["best_perm"]
    return g.relabel(perm), perm


def canonical_code(g: Graph) -> CanonicalCode:
    """Byte string equal for two graphs iff they are isomorphic (graph6 of the canonical form)."""
    return graph6_encode(canonical_form(g)[0]).encode()


# -- graph6 ----------------------------------------------------------------

def _encode_n(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def graph6_encode(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    bits += [0] * (-len(bits) % 6)
    body = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(b + 63) for b in _encode_n(g.n) + body)


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


def graph6_decode(s: str | bytes) -> Graph:
    if isinstance(s, bytes):
        s = s.decode("ascii")
    s = s.strip()
    start = 0
    if s.startswith(">>graph6<<"):
        start = 10
    data = s[start:]
    if not data:
        raise Graph6Error("empty graph6 string", start)
    vals = []
    for i, ch in enumerate(data):
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise Graph6Error(f"invalid graph6 character {ch!r}", start + i)
        vals.append(v)
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated vertex count", start + len(vals))
        n, pos = 0, 8
        for v in vals[2:8]:
            n = n << 6 | v
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated vertex count", start + len(vals))
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        off = start + min(len(vals), pos + need)
        raise Graph6Error(f"expected {need} adjacency bytes for n={n}, got {len(vals) - pos}", off)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    for k2 in range(nbits, need * 6):
        if vals[pos + k2 // 6] >> (5 - k2 % 6) & 1:
            raise Graph6Error("non-zero padding bits", start + pos + k2 // 6)
    return Graph(n, edges)


def read_graph6_file(path) -> list[Graph]:
    with open(path) as fh:
        return [graph6_decode(line) for line in fh if line.strip()]


def write_graph6_file(path, graphs: Iterable[Graph]) -> None:
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + "\n")
