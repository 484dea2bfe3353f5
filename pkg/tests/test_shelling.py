import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import arcs
from dtc.errors import DomainError
from dtc.forest_complex import Complex, directed_tree_complex, h_triangle, h_vector, remove_interiors
from dtc.graph_core import complete_digraph
from dtc.homology import betti, nonzero
from dtc.samples import crosspolytope_digraph, simplex_boundary
from dtc.shelling import (
    ShellingViolation, find_shelling, generating_facets_from_order, interval_partition_ok,
    is_shelling, is_vertex_decomposable, shelling_h_triangle, straightforward_layers,
    types_by_layer, order_from_layers, verify_shelling,
)
from dtc.source_shelling import complete_source_shelling


def test_g2_order():
    c = directed_tree_complex(complete_digraph(2))
    s = verify_shelling(c, [arcs("12"), arcs("21")])
    assert s.restrictions == (frozenset(), arcs("21"))
    assert shelling_h_triangle(s) == {(1, 0): 1, (1, 1): 1}
    assert generating_facets_from_order(s) == {arcs("21")}


def test_triangle_any_order():
    tri = simplex_boundary(2)
    assert all(is_shelling(tri, p) for p in itertools.permutations(tri.facets))


def test_nonpure_violation(dp4):
    c = directed_tree_complex(dp4)
    order = [arcs("ab", "dc")] + [f for f in c.sorted_facets if len(f) == 3]
    with pytest.raises(ShellingViolation) as exc:
        verify_shelling(c, order)
    assert (exc.value.i, exc.value.j) == (0, 1)


def test_order_must_be_facet_permutation(g3):
    c = directed_tree_complex(g3)
    with pytest.raises(DomainError) as exc:
        verify_shelling(c, c.sorted_facets[:-1])
    assert exc.value.kind == "bad-order"


def test_cone_has_single_interval():
    cone = Complex.from_faces([{0, 1, 2}])
    s = verify_shelling(cone, [{0, 1, 2}])
    assert shelling_h_triangle(s) == {(3, 0): 1}
    assert generating_facets_from_order(s) == frozenset()


def test_g3_generating_count(g3):
    s = complete_source_shelling(g3, "1").order
    assert len(generating_facets_from_order(s)) == 4


def test_find_shelling_examples(dp4):
    assert find_shelling(simplex_boundary(2)) is not None
    assert find_shelling(Complex.from_faces([{"a", "b"}, {"c", "d"}])) is None
    assert find_shelling(directed_tree_complex(dp4)) is not None


def test_vertex_decomposable_examples(dp4):
    assert is_vertex_decomposable(Complex.from_faces([{1, 2, 3}]))
    assert is_vertex_decomposable(directed_tree_complex(dp4))
    assert not is_vertex_decomposable(Complex.from_faces([{"a", "b"}, {"c", "d"}]))


def test_straightforward_crosspolytopes():
    for n, sizes in [(3, [1, 2, 1]), (4, [1, 3, 3, 1])]:
        c = directed_tree_complex(crosspolytope_digraph(n))
        f0 = frozenset(("1", str(v)) for v in range(2, n + 1))
        layers = straightforward_layers(c, f0)
        assert [len(layer) for layer in layers] == sizes
        s = order_from_layers(c, layers)
        t = types_by_layer(layers)
        assert all(len(r) == t[f] for f, r in zip(s.facets, s.restrictions))


def test_straightforward_fails_on_simplex_boundaries():
    for d in (2, 3):
        c = simplex_boundary(d)
        assert straightforward_layers(c, c.sorted_facets[0]) is None


def test_straightforward_single_facet():
    c = Complex.from_faces([{1, 2}])
    assert straightforward_layers(c, {1, 2}) == [[frozenset({1, 2})]]


def test_straightforward_bad_seed(g3):
    with pytest.raises(DomainError):
        straightforward_layers(directed_tree_complex(g3), {("1", "2")})


@st.composite
def small_complexes(draw):
    nv = draw(st.integers(2, 6))
    facets = draw(st.lists(st.sets(st.integers(0, nv - 1), min_size=1, max_size=3),
                           min_size=1, max_size=6))
    return Complex.from_faces(facets, range(nv))


@settings(max_examples=120, deadline=None)
@given(small_complexes())
def test_found_shellings_have_all_properties(c):
    s = find_shelling(c)
    if s is None:
        return
    assert interval_partition_ok(c, s)
    assert shelling_h_triangle(s) == h_triangle(c)
    gens = generating_facets_from_order(s)
    assert nonzero(betti(remove_interiors(c, gens))) == {}
    counts = {}
    for f in gens:
        counts[len(f) - 1] = counts.get(len(f) - 1, 0) + 1
    assert counts == nonzero(betti(c))


@settings(max_examples=60, deadline=None)
@given(small_complexes())
def test_vertex_decomposable_implies_shellable(c):
    if is_vertex_decomposable(c):
        assert find_shelling(c) is not None


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_pure_types_give_h_vector(rng):
    c = directed_tree_complex(complete_digraph(4))
    layers = complete_source_shelling(complete_digraph(4), "1").layers
    order = []
    for layer in layers:
        layer = list(layer)
        rng.shuffle(layer)
        order += layer
    s = verify_shelling(c, order)
    h = [0] * len(h_vector(c))
    for t in s.types:
        h[t] += 1
    assert tuple(h) == h_vector(c)
