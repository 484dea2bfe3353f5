"""Shellings of the forest complex of a digraph with a complete source c.

Facets are spanning trees; grouping them by the out-degree of c (largest
first) gives a shelling in which R(T) is the set of arcs of T not leaving c.
Trees where c is a leaf are the generating facets, and each spans a sphere
built as a join of a cycle boundary with two-point suspensions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial

from .errors import DomainError
from .forest_complex import Complex, directed_tree_complex
from .graph_core import Digraph, Edge, complete_sources
from .shelling import ShellingOrder, verify_shelling


@dataclass(frozen=True)
class SourceShelling:
    source: str
    layers: tuple[tuple[frozenset, ...], ...]
    order: ShellingOrder


@dataclass(frozen=True)
class SphereDescriptor:
    cycle_simplex: frozenset
    suspension_pairs: tuple[frozenset, ...]
    path_length: int

    @property
    def dimension(self) -> int:
        return len(self.cycle_simplex) - 2 + len(self.suspension_pairs)


def _require_source(d: Digraph, c: str) -> None:
    if c not in complete_sources(d):
        raise DomainError("not-source", f"{c} is not a complete source")


def out_degree_in(t: frozenset, v: str) -> int:
    return sum(1 for a, _ in t if a == v)


def complete_source_shelling(d: Digraph, c: str) -> SourceShelling:
    _require_source(d, c)
    cx = directed_tree_complex(d)
    n = len(d.vertices)
    layers: list[list[frozenset]] = [[] for _ in range(n)]
    for t in cx.sorted_facets:
        layers[n - 1 - out_degree_in(t, c)].append(t)
    while layers and not layers[-1]:
        layers.pop()
    order = verify_shelling(cx, [t for layer in layers for t in layer])
    return SourceShelling(c, tuple(tuple(layer) for layer in layers), order)


def source_restriction(t: frozenset, c: str) -> frozenset:
    return frozenset(e for e in t if e[0] != c)


def gn_h_vector(n: int) -> tuple[int, ...]:
    """Closed-form h-vector of the complete digraph on n vertices."""
    if n < 2:
        raise DomainError("bad-size", "n >= 2")
    return tuple(comb(n - 1, k) * (n - 1) ** k for k in range(n))


def generating_facets_source(d: Digraph, c: str) -> frozenset[frozenset]:
    """Spanning trees in which c is a leaf."""
    _require_source(d, c)
    cx = directed_tree_complex(d)
    return frozenset(t for t in cx.facets if out_degree_in(t, c) == 0)


def _tree_parents(t: frozenset) -> dict[str, str]:
    return {b: a for a, b in t}


def _root(d: Digraph, parent: dict[str, str]) -> str:
    roots = [v for v in d.vertices if v not in parent]
    if len(roots) != 1:
        raise DomainError("not-generating", "facet is not a spanning tree")
    return roots[0]


def path_to(parent: dict[str, str], v: str) -> list[str]:
    """Vertices from the root down to ``v``."""
    path = [v]
    while path[-1] in parent:
        path.append(parent[path[-1]])
    return path[::-1]


def sphere_descriptor(d: Digraph, c: str, t) -> SphereDescriptor:
    _require_source(d, c)
    t = frozenset(t)
    if not t <= d.edges or len(t) != len(d.vertices) - 1:
        raise DomainError("not-generating", "facet is not a spanning tree of d")
    parent = _tree_parents(t)
    root = _root(d, parent)
    if out_degree_in(t, c) != 0 or root == c:
        raise DomainError("not-generating", f"{c} is not a leaf of the tree")
    path = path_to(parent, c)
    k = len(path) - 1
    sigma = frozenset(list(zip(path, path[1:])) + [(c, path[0])])
    on_path = set(path)
    pairs = tuple(frozenset({(parent[y], y), (c, y)})
                  for y in d.vertices if y not in on_path)
    return SphereDescriptor(sigma, pairs, k)


def sphere_S_T(d: Digraph, c: str, t) -> tuple[SphereDescriptor, Complex]:
    """Join of the boundary of the cycle simplex with the suspension pairs."""
    desc = sphere_descriptor(d, c, t)
    ridges = [desc.cycle_simplex - {e} for e in desc.cycle_simplex]
    facets = set()
    for base, picks in product(ridges, product(*[sorted(p, key=d.edge_key) for p in desc.suspension_pairs])):
        facets.add(base | frozenset(picks))
    return desc, Complex(d.sorted_edges, frozenset(facets))


@dataclass(frozen=True)
class CoverEntry:
    facet: frozenset
    generator: frozenset
    covered: bool


def _cover_generator(d: Digraph, c: str, c2: str, t: frozenset) -> frozenset:
    parent = _tree_parents(t)
    children = [b for a, b in d.sorted_edges if (a, b) in t and a == c]
    if not children:
        return t
    root = _root(d, parent)
    # c2 below c means c lies on the path from the root to c2
    below = c in path_to(parent, c2)[:-1]
    rest = t - {(c, x) for x in children}
    if not below:
        return rest | {(c2, x) for x in children}
    anc = path_to(parent, c2)
    xi = anc[anc.index(c) + 1]
    return rest | {(c2, x) for x in children if x != xi} | {(c2, root)}


def union_cover_check(d: Digraph) -> list[CoverEntry]:
    """For each facet T, the generating facet T' with T in the sphere of T'.

    Uses the first two complete sources c, c' in vertex order and reroutes
    the arcs leaving c to leave c' instead.
    """
    srcs = complete_sources(d)
    if len(srcs) < 2:
        raise DomainError("insufficient-sources", "need two complete sources")
    c, c2 = srcs[0], srcs[1]
    cx = directed_tree_complex(d)
    out = []
    for t in cx.sorted_facets:
        g = _cover_generator(d, c, c2, t)
        _, sphere = sphere_S_T(d, c, g)
        out.append(CoverEntry(t, g, g in cx.facets and sphere.contains(t)))
    return out


def gn_sphere_census(n: int) -> dict[int, int]:
    """Closed-form count of spheres by path length k, for 0 < k < n."""
    if n < 2:
        raise DomainError("bad-size", "n >= 2")
    out = {}
    for k in range(1, n):
        v = Fraction(factorial(n - 1), factorial(n - k - 1)) * k * Fraction(n - 1) ** (n - k - 2)
        assert v.denominator == 1
        out[k] = int(v)
    return out


def sphere_census(d: Digraph, c: str) -> dict[int, int]:
    """Generating facets counted by the length of their root-to-c path."""
    out: dict[int, int] = {}
    for t in generating_facets_source(d, c):
        k = sphere_descriptor(d, c, t).path_length
        out[k] = out.get(k, 0) + 1
    return dict(sorted(out.items()))


def planted_source_digraph(n: int, rng, density: float = 0.5) -> tuple[Digraph, str]:
    """Random digraph on n vertices whose vertex ``c`` (chosen at random) is a complete source."""
    vs = [str(i) for i in range(1, n + 1)]
    c = rng.choice(vs)
    arcs: list[Edge] = [(c, v) for v in vs if v != c]
    for a in vs:
        for b in vs:
            if a != b and a != c and rng.random() < density:
                arcs.append((a, b))
    return Digraph.from_edges(arcs, vs), c
