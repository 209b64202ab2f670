"""2-cut properties P1/P2, the classes K1 and K2, Whitney 2-switches and the
Hamiltonian-path normal form, plus the two J-sequences."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .gentri import K3, double_subdivide, is_generalised_triangle
from .graph import (
    Bridge,
    CutPair,
    Graph,
    GraphError,
    bridges_of,
    components,
    two_cuts,
    _bits,
)

HAM_LIMIT = 21


class CutProperty(enum.Enum):
    P1 = "P1"
    P2 = "P2"


@dataclass(frozen=True)
class SwitchStep:
    cut: CutPair
    component_vertices: frozenset[int]


def _check_cut(g: Graph, cut: CutPair) -> list[Bridge]:
    if cut not in two_cuts(g):
        raise GraphError(f"{{{cut.x}, {cut.y}}} is not a 2-cut")
    return bridges_of(g, cut)


def bridges_satisfy(bridges: list[Bridge], p: CutProperty) -> bool:
    if p is CutProperty.P1:
        return all(b.degree_of(b.host_cut.x) == 1 or b.degree_of(b.host_cut.y) == 1 for b in bridges)
    return any(b.trivial for b in bridges)


def cut_satisfies(g: Graph, cut: CutPair, p: CutProperty) -> bool:
    return bridges_satisfy(_check_cut(g, cut), p)


def _require_gentri(g: Graph) -> None:
    if not is_generalised_triangle(g):
        raise GraphError("not a generalised triangle")


def _all_cuts(g: Graph, p: CutProperty) -> bool:
    if g.n == 3:
        return True
    return all(bridges_satisfy(bridges_of(g, c), p) for c in two_cuts(g))


def in_K1(g: Graph) -> bool:
    _require_gentri(g)
    return _all_cuts(g, CutProperty.P1)


def in_K2(g: Graph) -> bool:
    _require_gentri(g)
    return _all_cuts(g, CutProperty.P2)


def in_K1K2(g: Graph) -> bool:
    _require_gentri(g)
    return _all_cuts(g, CutProperty.P1) and _all_cuts(g, CutProperty.P2)


def classify(g: Graph) -> dict:
    """Summary used by the CLI: membership flags and per-cut properties."""
    out: dict = {"is_gentri": is_generalised_triangle(g), "in_K1": None, "in_K2": None, "two_cuts": []}
    if out["is_gentri"]:
        out["in_K1"] = _all_cuts(g, CutProperty.P1)
        out["in_K2"] = _all_cuts(g, CutProperty.P2)
    try:
        cuts = two_cuts(g)
    except GraphError:
        cuts = []
    for c in cuts:
        bs = bridges_of(g, c)
        out["two_cuts"].append({
            "cut": [c.x, c.y],
            "P1": bridges_satisfy(bs, CutProperty.P1),
            "P2": bridges_satisfy(bs, CutProperty.P2),
        })
    return out


def gen_edge_has_property(h: Graph, u: int, v: int, p: CutProperty) -> bool:
    """Property Pi for a generalised uv-edge: every 2-cut of h lying inside one
    of its two {u,v}-bridges has Pi.  K2 and single-edge inputs hold vacuously."""
    if h.n < 4:
        return True
    cut_uv = CutPair(u, v)
    sides = [b.vertices for b in bridges_of(h, cut_uv)]
    for c in two_cuts(h):
        if any({c.x, c.y} <= s for s in sides) and not bridges_satisfy(bridges_of(h, c), p):
            return False
    return True


# -- Whitney switches -----------------------------------------------------------

def whitney_switch(g: Graph, step: SwitchStep) -> Graph:
    """Re-attach the component with the roles of the two cut vertices exchanged."""
    x, y = step.cut
    comp = set(step.component_vertices)
    comps = [set(c) for c in components(g, (x, y))]
    if comp not in comps or len(comps) < 2:
        raise GraphError("switch component is not a component of G - {x, y}")
    swap = {x: y, y: x}
    edges = []
    for a, b in g.edges:
        if a in comp and b in swap:
            b = swap[b]
        elif b in comp and a in swap:
            a = swap[a]
        edges.append((a, b))
    return Graph(g.n, edges)


# -- Hamiltonian paths ------------------------------------------------------------

def hamiltonian_path(g: Graph) -> list[int] | None:
    """Some Hamiltonian path, via DP over (vertex subset, endpoint) restricted to
    reachable states."""
    n = g.n
    if n > HAM_LIMIT:
        raise ValueError(f"hamiltonian_path is limited to {HAM_LIMIT} vertices")
    if n == 0:
        return None
    if n == 1:
        return [0]
    full = (1 << n) - 1
    # ends[mask] = bitmask of vertices v such that some path covers mask and ends at v
    ends: dict[int, int] = {1 << v: 1 << v for v in range(n)}
    layer = list(ends)
    for _ in range(n - 1):
        nxt: dict[int, int] = {}
        for mask in layer:
            for v in _bits(ends[mask]):
                for w in _bits(g.adj[v] & ~mask):
                    m2 = mask | 1 << w
                    nxt[m2] = nxt.get(m2, 0) | 1 << w
        for m2, e in nxt.items():
            ends[m2] = e
        layer = list(nxt)
        if not layer:
            return None
    if full not in ends:
        return None
    path = [next(_bits(ends[full]))]
    mask = full
    while mask != 1 << path[-1]:
        v = path[-1]
        mask &= ~(1 << v)
        prev = ends[mask] & g.adj[v]
        path.append(next(_bits(prev)))
    return path[::-1]


def _bridge_at(g: Graph, cut: CutPair, containing: int) -> Bridge:
    return next(b for b in bridges_of(g, cut) if containing in b.interior)


def to_ham_form(g: Graph) -> tuple[Graph, list[SwitchStep]]:
    """Whitney-switch a member of K1 ∩ K2 into a graph with a Hamiltonian path.

    Take a 2-cut {x, y} with two trivial bridges x-u-y and x-v-y, then switch
    inside the remaining bridge until it carries a path from x through all of
    its vertices except y; u-y-v-x followed by that path is Hamiltonian.
    """
    g, steps, _ = ham_form_with_path(g)
    return g, steps


def is_hamiltonian_path(g: Graph, path: list[int]) -> bool:
    return sorted(path) == list(g.vertices) and all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def ham_form_with_path(g: Graph) -> tuple[Graph, list[SwitchStep], list[int]]:
    """:func:`to_ham_form` plus the Hamiltonian path the construction produces."""
    if not in_K1K2(g):
        raise GraphError("input must lie in K1 ∩ K2")
    if g.n == 3:
        return g, [], [0, 1, 2]
    steps: list[SwitchStep] = []
    cut = None
    for c in two_cuts(g):
        bs = bridges_of(g, c)
        triv = [b for b in bs if b.trivial]
        if len(triv) >= 2:
            cut, big = c, next(b for b in bs if b not in triv[:2])
            u, v = (min(b.interior) for b in triv[:2])
            break
    if cut is None:
        raise GraphError("no 2-cut with two trivial bridges")
    x, y = cut
    if big.degree_of(y) != 1:
        x, y = y, x
    g, path = _spanning_path(g, x, y, min(big.interior), steps)
    ham = [u, y, v] + path
    if not is_hamiltonian_path(g, ham):
        raise AssertionError("switch construction did not yield a Hamiltonian path")
    return g, steps, ham


def _spanning_path(g: Graph, x: int, y: int, inner: int, steps: list[SwitchStep]) -> tuple[Graph, list[int]]:
    """For the {x,y}-bridge containing ``inner``, in which y has degree 1:
    switch inside it until it has a path from x covering all its vertices but
    y.  Returns the switched graph and that path."""
    cut = CutPair(x, y)
    b = _bridge_at(g, cut, inner)
    if b.trivial:
        return g, [x, inner]
    (z,) = [w for w in g.neighbors(y) if w in b.interior]
    inner_xz = [br for br in bridges_of(g, CutPair(x, z)) if y not in br.vertices]
    triv = next(br for br in inner_xz if br.trivial)
    other = next(br for br in inner_xz if br is not triv)
    w = min(triv.interior)
    if other.degree_of(x) != 1:
        step = SwitchStep(CutPair(x, z), other.interior)
        g = whitney_switch(g, step)
        steps.append(step)
    g, sub = _spanning_path(g, z, x, min(other.interior), steps)
    return g, [x, w] + sub


# -- J-sequences ------------------------------------------------------------------

def j_sequence_k1(i: int) -> Graph:
    """J_0 = K3 with marked vertex 0; J_i double-subdivides every edge of J_{i-1} at 0."""
    if i < 0:
        raise ValueError("index must be non-negative")
    g = K3
    for _ in range(i):
        for u, v in [e for e in g.edges if 0 in e]:
            g = double_subdivide(g, u, v)
    return g


def j_sequence_k2_with_outer(i: int) -> tuple[Graph, list[int]]:
    """J_i for the outer-face sequence together with its outer cycle.

    Each outer edge ab is double-subdivided; the first new vertex joins the
    new outer cycle a-p-b and the second lies inside it.
    """
    if i < 0:
        raise ValueError("index must be non-negative")
    g, outer = K3, [0, 1, 2]
    for _ in range(i):
        new_outer = []
        for k, a in enumerate(outer):
            b = outer[(k + 1) % len(outer)]
            p = g.n
            g = double_subdivide(g, a, b)
            new_outer += [a, p]
        outer = new_outer
    return g, outer


def j_sequence_k2(i: int) -> Graph:
    return j_sequence_k2_with_outer(i)[0]


def outer_trivial_bridge_claim(g: Graph, outer: list[int]) -> bool:
    """Every 2-cut has a trivial bridge whose middle vertex is off the outer cycle."""
    on_outer = set(outer)
    if g.n == 3:
        return True
    return all(
        any(b.trivial and not (b.interior & on_outer) for b in bridges_of(g, c))
        for c in two_cuts(g)
    )
