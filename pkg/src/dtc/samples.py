"""Seeded random and named input families used by the tests and scripts."""
from __future__ import annotations

import random

import networkx as nx

from .graph_core import Digraph, SimpleGraph, double_directed
from .source_shelling import planted_source_digraph

__all__ = [
    "crosspolytope_digraph", "planted_r_source_graph", "planted_source_digraph",
    "random_dag", "random_tree", "random_tree_orientation", "simplex_boundary",
]


def crosspolytope_digraph(n: int) -> Digraph:
    """Vertices 1..n with arcs 1 -> * and 2 -> *; its complex is the
    boundary of the (n-1)-dimensional crosspolytope."""
    vs = [str(i) for i in range(1, n + 1)]
    arcs = [(s, v) for s in ("1", "2") for v in vs if v != s]
    return Digraph.from_edges(arcs, vs)


def simplex_boundary(d: int):
    from .forest_complex import Complex
    vs = list(range(d + 1))
    return Complex(tuple(vs), frozenset(frozenset(vs) - {v} for v in vs))


def planted_r_source_graph(n: int, r: int, rng: random.Random, extra: float = 0.25) -> tuple[SimpleGraph, list[str]]:
    """Random graph on n vertices with a planted complete r-source.

    Vertices are split into r stars; extra edges only join non-centers, so
    the centers stay pairwise at distance >= 3 and cover V with their closed
    neighborhoods.
    """
    if not 1 <= r <= n // 2:
        raise ValueError("need 1 <= r <= n/2 so every star has a leaf")
    vs = [str(i) for i in range(1, n + 1)]
    rng.shuffle(vs)
    centers = vs[:r]
    owner = {c: c for c in centers}
    rest = vs[r:]
    for i, v in enumerate(rest):
        owner[v] = centers[i] if i < r else rng.choice(centers)
    edges = [(owner[v], v) for v in rest]
    for i, u in enumerate(rest):
        for w in rest[i + 1:]:
            if rng.random() < extra:
                edges.append((u, w))
    labels = sorted(vs, key=int)
    return SimpleGraph.from_edges(edges, labels), sorted(centers, key=int)


def random_dag(n: int, rng: random.Random, density: float = 0.5) -> Digraph:
    """Arcs only go from a lower to a higher position of a random permutation."""
    vs = [str(i) for i in range(1, n + 1)]
    perm = vs[:]
    rng.shuffle(perm)
    arcs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return Digraph.from_edges(arcs, vs)


def random_tree(n: int, rng: random.Random) -> SimpleGraph:
    vs = [str(i) for i in range(n)]
    if n == 1:
        return SimpleGraph(("0",), frozenset())
    if n == 2:
        return SimpleGraph.from_edges([("0", "1")], vs)
    t = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
    return SimpleGraph.from_edges([(str(a), str(b)) for a, b in t.edges], vs)


def random_tree_orientation(t: SimpleGraph, rng: random.Random, p_double: float = 0.4) -> Digraph:
    """Each tree edge becomes one arc (random direction) or a pair of arcs."""
    arcs = []
    for a, b in t.sorted_edges:
        u = rng.random()
        if u < p_double:
            arcs += [(a, b), (b, a)]
        elif u < (1 + p_double) / 2:
            arcs.append((a, b))
        else:
            arcs.append((b, a))
    return Digraph.from_edges(arcs, t.vertices)


def double_random_tree(n: int, rng: random.Random) -> Digraph:
    return double_directed(random_tree(n, rng))
