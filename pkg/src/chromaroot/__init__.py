"""Exact chromatic polynomials and chromatic roots of generalised triangles."""

from .chromatic import (
    ChromoResult,
    MemoStore,
    chromatic_polynomial,
    jackson_reduction_check,
    q_eval,
    q_poly,
    smallest_nontrivial_root,
)
from .classes import (
    CutProperty,
    SwitchStep,
    classify,
    gen_edge_has_property,
    hamiltonian_path,
    in_K1,
    in_K1K2,
    in_K2,
    j_sequence_k1,
    j_sequence_k2,
    to_ham_form,
    whitney_switch,
)
from .gentri import (
    brute_minor,
    double_subdivide,
    enumerate_gentri,
    h0,
    h1,
    h2,
    is_generalised_edge,
    is_generalised_triangle,
    poset_minor,
)
from .graph import (
    Bridge,
    CutPair,
    Graph,
    GraphError,
    bridges_of,
    canonical_code,
    canonical_form,
    connectivity_level,
    graph6_decode,
    graph6_encode,
    two_cuts,
)
from .poly import IntPoly, RootInterval, compare_roots, isolate_roots, refine, sturm_count

__version__ = "0.1.0"
