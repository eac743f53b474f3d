"""Separation index of triangulated 2-spheres and tightness of 3-manifolds.

Exact values are returned as :class:`fractions.Fraction`.
"""

from ._core import (
    CapExceeded,
    Complex,
    betti,
    build_stacked,
    canonical_code,
    census,
    cyclic_polytope_boundary,
    decode,
    edge_flip,
    graph_separation_index,
    in_walkup_K3,
    is_flag,
    is_neighbourly,
    is_stacked,
    is_tight,
    is_tight_neighbourly,
    is_triangulated_2sphere,
    manifold_report,
    mu1_via_links,
    mu_vector,
    octahedron,
    read_facets,
    reduce_to_s24,
    replay,
    separation_index,
    separation_profile,
    stacked_value,
    standard_sphere,
    star_vertex,
    write_facets,
)

__all__ = [name for name in dir() if not name.startswith("_")]
