import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from conftest import arcs
from dtc.errors import DomainError
from dtc.forest_complex import (
    Complex, all_faces, conflict_graph, directed_tree_complex, f_triangle, f_vector, h_triangle,
    h_triangle_from_h_vector, h_vector, independency_complex, is_directed_forest, is_pure,
    relabel_edges, remove_interiors, skeleton,
)
from dtc.graph_core import Digraph, SimpleGraph, complete_digraph, cycle_graph, double_directed, path_graph
from dtc.samples import random_tree_orientation, random_tree


@st.composite
def small_digraphs(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    vs = [str(i) for i in range(n)]
    pairs = [(a, b) for a in vs for b in vs if a != b]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=9)) if pairs else []
    return Digraph.from_edges(chosen, vs)


def brute_facets(d: Digraph) -> frozenset:
    """Maximal directed forests by scanning every edge subset."""
    edges = d.sorted_edges
    forests = [frozenset(s) for k in range(len(edges) + 1)
               for s in itertools.combinations(edges, k) if is_directed_forest(d, s)]
    return frozenset(f for f in forests if not any(f < g for g in forests))


def test_is_directed_forest(g3):
    assert is_directed_forest(g3, [("1", "2"), ("2", "3")])
    assert not is_directed_forest(g3, [("1", "2"), ("3", "2")])
    assert not is_directed_forest(g3, [("1", "2"), ("2", "1")])


def test_facets_small():
    assert directed_tree_complex(complete_digraph(2)).facets == {arcs("12"), arcs("21")}
    c3 = directed_tree_complex(complete_digraph(3))
    assert len(c3.facets) == 9 and all(len(f) == 2 for f in c3.facets)


def test_facets_double_path(dp4):
    c = directed_tree_complex(dp4)
    assert c.facets == {arcs("ab", "bc", "cd"), arcs("ba", "bc", "cd"), arcs("cb", "ba", "cd"),
                        arcs("dc", "cb", "ba"), arcs("ab", "dc")}


def test_edgeless_complex_is_empty_face():
    c = directed_tree_complex(Digraph.from_edges([], ["a", "b"]))
    assert c.facets == {frozenset()} and f_triangle(c) == {(0, 0): 1}


def test_skeleton_and_purity(g3, dp4):
    c3 = directed_tree_complex(g3)
    assert len(skeleton(c3, 0).facets) == 6
    cp = directed_tree_complex(dp4)
    assert is_pure(skeleton(cp, 1)) and skeleton(cp, 1).dim == 1
    assert is_pure(c3) and not is_pure(cp)
    assert is_pure(Complex.from_faces([()]))


def test_vectors(g3):
    c3 = directed_tree_complex(g3)
    assert f_vector(c3) == (1, 6, 9) and h_vector(c3) == (1, 4, 4)
    assert h_vector(Complex.from_faces([{"p"}])) == (1, 0)
    tri = Complex.from_faces([{1, 2}, {2, 3}, {1, 3}])
    assert f_vector(tri) == (1, 3, 3) and h_vector(tri) == (1, 1, 1)


def test_h_vector_nonpure_raises(dp4):
    with pytest.raises(DomainError) as exc:
        h_vector(directed_tree_complex(dp4))
    assert exc.value.kind == "nonpure"


def test_triangles_double_path(dp4):
    c = directed_tree_complex(dp4)
    ft = f_triangle(c)
    assert ft[(2, 2)] == 1
    assert h_triangle(c) == {(2, 2): 1, (3, 0): 1, (3, 1): 3}


def test_pure_triangle_row(g3):
    c = directed_tree_complex(g3)
    assert all(i == 2 for i, _ in f_triangle(c))
    assert h_triangle(c) == h_triangle_from_h_vector(h_vector(c))


def test_independency_complex():
    k2 = SimpleGraph.from_edges([("a", "b")])
    assert independency_complex(k2).facets == {frozenset("a"), frozenset("b")}
    assert independency_complex(cycle_graph(4)).facets == {frozenset({"1", "3"}), frozenset({"2", "4"})}
    empty = SimpleGraph(("a", "b", "c"), frozenset())
    assert independency_complex(empty).facets == {frozenset("abc")}


def test_conflict_graph_examples():
    cg = conflict_graph(double_directed(path_graph("ab")))
    assert cg.edges == {frozenset({"a>b", "b>a"})}
    cg = conflict_graph(Digraph.from_edges([("1", "2"), ("3", "2")]))
    assert cg.edges == {frozenset({"1>2", "3>2"})}
    cg = conflict_graph(double_directed(path_graph("abc")))
    assert cg.edges == {frozenset(p) for p in [("b>a", "a>b"), ("a>b", "c>b"), ("c>b", "b>c")]}


def test_remove_interiors_keeps_boundary():
    tri = Complex.from_faces([{1, 2, 3}])
    rest = remove_interiors(tri, [{1, 2, 3}])
    assert rest.facets == {frozenset({1, 2}), frozenset({2, 3}), frozenset({1, 3})}


@settings(max_examples=60, deadline=None)
@given(small_digraphs())
def test_facets_match_brute_force(d):
    assert directed_tree_complex(d).facets == brute_facets(d)


@settings(max_examples=60, deadline=None)
@given(small_digraphs())
def test_forest_complex_inside_conflict_independence(d):
    ind = all_faces(relabel_edges(independency_complex(conflict_graph(d))))
    assert all_faces(directed_tree_complex(d)) <= ind


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.randoms(use_true_random=False))
def test_conflict_equality_on_trees(n, rng):
    d = random_tree_orientation(random_tree(n, rng), rng)
    assert relabel_edges(independency_complex(conflict_graph(d))).facets == directed_tree_complex(d).facets


@settings(max_examples=60, deadline=None)
@given(small_digraphs())
def test_face_count_identities(d):
    c = directed_tree_complex(d)
    f = f_vector(c)
    ft = f_triangle(c)
    for j in range(len(f)):
        assert sum(v for (i, jj), v in ft.items() if jj == j) == f[j]
    ht = h_triangle(c)
    assert sum(ht.values()) == len(c.facets)
    if is_pure(c):
        h = h_vector(c)
        assert sum(h) == len(c.facets)
        dd = len(h) - 2
        # inverse transform: f_{k-1} = sum_i C(d+1-i, k-i) h_i
        for k in range(len(f)):
            assert f[k] == sum(comb(dd + 1 - i, k - i) * h[i] for i in range(k + 1))
