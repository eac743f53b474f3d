from fractions import Fraction

import pytest

import sepindex as si


def test_octahedron_index():
    assert si.separation_index(si.octahedron()) == Fraction(-4, 5)


def test_graph_index_paths():
    path = [(0, 1), (1, 2)]
    assert si.graph_separation_index(3, path) == Fraction(-2, 3)
    assert si.graph_separation_index(3, path, fast=True) == Fraction(-2, 3)


@pytest.mark.parametrize("n", [4, 7, 12])
def test_stacked_spheres_attain_the_bound(n):
    x = si.build_stacked(n, seed=3)
    assert si.is_stacked(x)
    assert si.separation_index(x) == si.stacked_value(n) == Fraction((n - 8) * (n + 1), 20)


def test_six_vertex_census():
    rows = si.census(6)
    assert len(rows) == 2
    assert sorted(r["s"] for r in rows) == [Fraction(-4, 5), Fraction(-7, 10)]
    assert {r["flag"] for r in rows} == {True, False}


def test_canonical_code_ignores_labels():
    x = si.octahedron()
    shuffled = si.Complex(6, [[{0: 3, 1: 2, 2: 5, 3: 0, 4: 1, 5: 4}[v] for v in f] for f in x.facets])
    assert si.canonical_code(shuffled) == si.canonical_code(x)
    assert si.canonical_code(si.decode(si.canonical_code(x))) == si.canonical_code(x)


def test_reduction_round_trip():
    x = si.build_stacked(9, seed=1)
    y = si.edge_flip(x, *_flippable(x))
    assert si.canonical_code(si.replay(si.reduce_to_s24(y))) == si.canonical_code(y)


def _flippable(x):
    edges = set(map(tuple, x.edges()))
    for a, b in edges:
        apexes = [next(v for v in f if v not in (a, b)) for f in x.facets if a in f and b in f]
        if tuple(sorted(apexes)) not in edges:
            return (a, b), tuple(apexes)
    raise AssertionError("no flippable edge")


def test_three_manifolds():
    s35 = si.standard_sphere(3)
    assert si.mu1_via_links(s35) == 0
    assert si.is_tight(s35)
    assert si.is_tight_neighbourly(s35)
    c8 = si.cyclic_polytope_boundary(8)
    report = si.manifold_report(c8)
    assert report["mu_1"] == {"num": 3, "den": 5}
    assert report["in_K3"] and not report["tight_neighbourly"]
    assert si.betti(c8) == [1, 0, 0, 1]


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        si.Complex(4, [[0, 1, 2]])
    with pytest.raises(si.CapExceeded):
        si.separation_index(si.build_stacked(30, seed=0))
    with pytest.raises(ValueError, match="line 2"):
        si.read_facets("4 4\n0 1 x\n")


def test_facets_text_round_trip():
    x = si.cyclic_polytope_boundary(6)
    assert si.read_facets(si.write_facets(x)) == x
