import pytest
from hypothesis import given, settings, strategies as st

from conftest import arcs
from dtc.errors import DomainError
from dtc.forest_complex import all_faces, directed_tree_complex, h_vector
from dtc.graph_core import Digraph, complete_digraph, double_directed, path_graph
from dtc.homology import betti, nonzero
from dtc.samples import planted_source_digraph
from dtc.source_shelling import (
    complete_source_shelling, generating_facets_source, gn_h_vector, gn_sphere_census,
    source_restriction, sphere_census, sphere_S_T, union_cover_check,
)


def test_g3_layers(g3):
    ss = complete_source_shelling(g3, "1")
    assert [len(layer) for layer in ss.layers] == [1, 4, 4]


def test_star_is_single_facet():
    star = Digraph.from_edges([("c", "x"), ("c", "y"), ("c", "z")])
    ss = complete_source_shelling(star, "c")
    assert len(ss.layers) == 1 and len(ss.order.facets) == 1
    assert generating_facets_source(star, "c") == frozenset()


def test_g2_order():
    ss = complete_source_shelling(complete_digraph(2), "1")
    assert list(ss.order.facets) == [arcs("12"), arcs("21")]
    assert generating_facets_source(complete_digraph(2), "1") == {arcs("21")}


def test_not_a_source(dp4):
    with pytest.raises(DomainError) as exc:
        complete_source_shelling(dp4, "a")
    assert exc.value.kind == "not-source"


def test_gn_h_vector_values():
    assert gn_h_vector(2) == (1, 1)
    assert gn_h_vector(3) == (1, 4, 4)
    assert gn_h_vector(4) == (1, 9, 27, 27)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_gn_h_vector_matches_enumeration(n):
    assert h_vector(directed_tree_complex(complete_digraph(n))) == gn_h_vector(n)


def test_g3_generating_facets(g3):
    assert generating_facets_source(g3, "1") == {arcs("21", "23"), arcs("31", "32"),
                                                 arcs("23", "31"), arcs("32", "21")}


def test_sphere_examples(g3):
    desc, s = sphere_S_T(g3, "1", arcs("23", "31"))
    assert desc.cycle_simplex == arcs("23", "31", "12") and desc.suspension_pairs == ()
    assert nonzero(betti(s)) == {1: 1} and len(s.facets) == 3
    desc, s = sphere_S_T(g3, "1", arcs("21", "23"))
    assert desc.cycle_simplex == arcs("21", "12")
    assert desc.suspension_pairs == (arcs("23", "13"),)
    assert len(s.facets) == 4 and nonzero(betti(s)) == {1: 1}


def test_sphere_requires_generating_facet(g3):
    with pytest.raises(DomainError):
        sphere_S_T(g3, "1", arcs("12", "13"))


@pytest.mark.parametrize("n", [3, 4])
def test_spheres_inside_complex(n):
    d = complete_digraph(n)
    faces = all_faces(directed_tree_complex(d))
    gens = generating_facets_source(d, "1")
    assert len(gens) == (n - 1) ** (n - 1)
    for t in gens:
        desc, s = sphere_S_T(d, "1", t)
        assert desc.dimension == n - 2
        assert all_faces(s) <= faces
        assert nonzero(betti(s)) == {n - 2: 1}


def test_census():
    assert gn_sphere_census(3) == {1: 2, 2: 2}
    assert sum(gn_sphere_census(2).values()) == 1
    for n in (2, 3, 4, 5):
        assert sphere_census(complete_digraph(n), "1") == gn_sphere_census(n)


def test_cover():
    assert all(e.covered for e in union_cover_check(complete_digraph(3)))
    assert len(union_cover_check(complete_digraph(3))) == 9
    assert all(e.covered for e in union_cover_check(complete_digraph(2)))
    assert all(e.covered for e in union_cover_check(double_directed(path_graph("ab"))))
    with pytest.raises(DomainError):
        union_cover_check(double_directed(path_graph("abc")))


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 5), st.floats(0.1, 0.9), st.randoms(use_true_random=False))
def test_planted_source_properties(n, density, rng):
    d, c = planted_source_digraph(n, rng, density)
    ss = complete_source_shelling(d, c)
    layer_of = {f: i for i, layer in enumerate(ss.layers) for f in layer}
    for f, r in zip(ss.order.facets, ss.order.restrictions):
        assert r == source_restriction(f, c)
        assert len(r) == layer_of[f]


@settings(max_examples=15, deadline=None)
@given(st.integers(3, 5), st.randoms(use_true_random=False))
def test_cover_on_two_source_digraphs(n, rng):
    d, c = planted_source_digraph(n, rng, 0.5)
    other = next(v for v in d.vertices if v != c)
    d = Digraph.from_edges(set(d.edges) | {(other, v) for v in d.vertices if v != other}, d.vertices)
    assert all(e.covered for e in union_cover_check(d))
