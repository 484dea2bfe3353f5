"""Simplicial complexes stored by facets: the complex of directed forests of
a digraph, independence complexes, skeleta and face-count invariants.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Hashable, Iterable

from .errors import DomainError
from .graph_core import Digraph, Edge, SimpleGraph

Face = frozenset

DEFAULT_FACE_CAP = 5_000_000


def face_cap() -> int:
    return int(os.environ.get("DTC_FACE_CAP", DEFAULT_FACE_CAP))


def label_str(x: Hashable) -> str:
    if isinstance(x, tuple):
        return f"{x[0]}>{x[1]}"
    return str(x)


def maximal_sets(sets: Iterable[frozenset]) -> frozenset[frozenset]:
    """Inclusion-maximal members of ``sets``."""
    ordered = sorted(set(sets), key=len, reverse=True)
    kept: list[frozenset] = []
    for s in ordered:
        if not any(s < k for k in kept):
            kept.append(s)
    return frozenset(kept)


@dataclass(frozen=True)
class Complex:
    """A simplicial complex given by its facets.

    ``universe`` fixes the vertex order used for canonical sorting.  A
    complex with the single facet ``frozenset()`` is {∅}; ``facets`` empty
    means the void complex.
    """

    universe: tuple
    facets: frozenset[frozenset]

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable], universe: Iterable | None = None) -> "Complex":
        fs = maximal_sets(frozenset(f) for f in faces)
        if universe is None:
            universe = sorted({x for f in fs for x in f})
        return cls(tuple(universe), fs)

    @cached_property
    def pos(self) -> dict:
        return {x: i for i, x in enumerate(self.universe)}

    def key(self, face: Iterable) -> tuple[int, ...]:
        return tuple(sorted(self.pos[x] for x in face))

    def sorted_face(self, face: Iterable) -> list:
        return sorted(face, key=self.pos.__getitem__)

    @cached_property
    def sorted_facets(self) -> tuple[frozenset, ...]:
        return tuple(sorted(self.facets, key=self.key))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def vertices(self) -> frozenset:
        return frozenset(x for f in self.facets for x in f)

    def contains(self, face: Iterable) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def faces(self) -> dict[int, list[frozenset]]:
        """All faces grouped by cardinality, each group canonically sorted."""
        cap = face_cap()
        seen: set[frozenset] = set()
        for f in self.facets:
            if 2 ** len(f) > cap:
                raise DomainError("too-large", f"facet of size {len(f)} exceeds face cap {cap}")
            members = self.sorted_face(f)
            for k in range(len(members) + 1):
                for sub in combinations(members, k):
                    seen.add(frozenset(sub))
            if len(seen) > cap:
                raise DomainError("too-large", f"more than {cap} faces")
        by_size: dict[int, list[frozenset]] = {}
        for s in seen:
            by_size.setdefault(len(s), []).append(s)
        return {k: sorted(v, key=self.key) for k, v in sorted(by_size.items())}

    def format_face(self, face: Iterable) -> str:
        return " ".join(label_str(x) for x in self.sorted_face(face))

    def __repr__(self):
        return f"Complex(dim={self.dim}, facets={len(self.facets)})"


# ------------------------------------------------------------- forests

def is_directed_forest(d: Digraph, edges: Iterable[Edge]) -> bool:
    """In-degree at most one everywhere and no directed cycle."""
    edges = set(edges)
    unknown = edges - d.edges
    if unknown:
        raise DomainError("unknown-edge", ", ".join(label_str(e) for e in sorted(unknown)))
    parent: dict[str, str] = {}
    for a, b in edges:
        if b in parent:
            return False
        parent[b] = a
    for start in parent:
        seen = {start}
        v = start
        while v in parent:
            v = parent[v]
            if v in seen:
                return False
            seen.add(v)
    return True


class _Forest:
    """Partial forest with parent pointers; supports add/remove in LIFO order."""

    def __init__(self):
        self.parent: dict[str, str] = {}

    def root(self, v: str) -> str:
        while v in self.parent:
            v = self.parent[v]
        return v

    def can_add(self, e: Edge) -> bool:
        a, b = e
        return b not in self.parent and self.root(a) != b

    def add(self, e: Edge) -> None:
        self.parent[e[1]] = e[0]

    def remove(self, e: Edge) -> None:
        del self.parent[e[1]]


def _forests(d: Digraph, max_size: int | None = None):
    """Yield (forest, addable) for every directed forest with at most
    ``max_size`` edges; ``addable`` says whether some edge of ``d`` extends it.

    Depth-first over edges in canonical order, include-before-exclude.
    """
    edges = d.sorted_edges
    m = len(edges)
    limit = m if max_size is None else max_size
    forest = _Forest()
    chosen: list[Edge] = []

    def rec(i):
        if i == m:
            yield frozenset(chosen), any(
                e not in chosen and forest.can_add(e) for e in edges)
            return
        e = edges[i]
        if len(chosen) < limit and forest.can_add(e):
            forest.add(e)
            chosen.append(e)
            yield from rec(i + 1)
            chosen.pop()
            forest.remove(e)
        yield from rec(i + 1)

    yield from rec(0)


def directed_tree_complex(d: Digraph) -> Complex:
    """Complex whose faces are the directed forests contained in ``d``."""
    facets = [f for f, addable in _forests(d) if not addable]
    return Complex(d.sorted_edges, frozenset(facets))


def tree_complex_skeleton(d: Digraph, k: int) -> Complex:
    """k-skeleton of the directed-forest complex, built without the full complex.

    Facets are the forests with exactly k+1 edges plus the maximal forests
    with fewer edges.
    """
    facets = []
    for f, addable in _forests(d, max_size=k + 1):
        if len(f) == k + 1 or not addable:
            facets.append(f)
    return Complex(d.sorted_edges, frozenset(facets))


def skeleton(c: Complex, k: int) -> Complex:
    """Faces of dimension at most ``k``."""
    if k < -1:
        raise DomainError("bad-dimension", str(k))
    out = set()
    for f in c.facets:
        if len(f) <= k + 1:
            out.add(f)
        else:
            out.update(frozenset(s) for s in combinations(c.sorted_face(f), k + 1))
    return Complex(c.universe, maximal_sets(out))


def is_pure(c: Complex) -> bool:
    return len({len(f) for f in c.facets}) <= 1


# ---------------------------------------------------------- invariants

def f_vector(c: Complex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_d)."""
    faces = c.faces()
    return tuple(len(faces.get(s, ())) for s in range(c.dim + 2))


def h_vector(c: Complex) -> tuple[int, ...]:
    """(h_0, ..., h_{d+1}) of a pure complex."""
    if not is_pure(c):
        raise DomainError("nonpure", "h-vector needs a pure complex")
    f = f_vector(c)
    d = c.dim
    return tuple(
        sum((-1) ** (k - i) * comb(d + 1 - i, d + 1 - k) * f[i] for i in range(k + 1))
        for k in range(d + 2)
    )


def f_triangle(c: Complex) -> dict[tuple[int, int], int]:
    """Nonzero f_{i,j}: faces of size j whose largest containing facet has size i."""
    top: dict[frozenset, int] = {}
    for f in sorted(c.facets, key=len, reverse=True):
        for k in range(len(f) + 1):
            for sub in combinations(f, k):
                s = frozenset(sub)
                if s not in top:
                    top[s] = len(f)
        if len(top) > face_cap():
            raise DomainError("too-large", "face cap exceeded")
    tri: dict[tuple[int, int], int] = {}
    for s, i in top.items():
        tri[(i, len(s))] = tri.get((i, len(s)), 0) + 1
    return dict(sorted(tri.items()))


def h_triangle(c: Complex) -> dict[tuple[int, int], int]:
    """Nonzero h_{i,j} = sum_k (-1)^(j-k) C(i-k, j-k) f_{i,k}."""
    f = f_triangle(c)
    rows = sorted({i for i, _ in f})
    tri = {}
    for i in rows:
        for j in range(i + 1):
            v = sum((-1) ** (j - k) * comb(i - k, j - k) * f.get((i, k), 0) for k in range(j + 1))
            if v:
                tri[(i, j)] = v
    return tri


def h_triangle_from_h_vector(h: Iterable[int]) -> dict[tuple[int, int], int]:
    h = list(h)
    i = len(h) - 1
    return {(i, j): v for j, v in enumerate(h) if v}


# ------------------------------------------------- independence complexes

def maximal_independent_sets(vertices: Iterable, adj: dict) -> list[frozenset]:
    """Bron-Kerbosch with pivoting on the complement graph."""
    vertices = list(vertices)
    non = {v: set(vertices) - set(adj[v]) - {v} for v in vertices}
    out: list[frozenset] = []

    def bk(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(non[u] & p))
        for v in list(p - non[pivot]):
            bk(r | {v}, p & non[v], x & non[v])
            p = p - {v}
            x = x | {v}

    bk(set(), set(vertices), set())
    return out


def independency_complex(g: SimpleGraph) -> Complex:
    """Complex of independent vertex sets of ``g``."""
    return Complex(g.vertices, frozenset(maximal_independent_sets(g.vertices, g.neighbors)))


def edge_label(e: Edge) -> str:
    return f"{e[0]}>{e[1]}"


def parse_edge_label(s: str) -> Edge:
    a, b = s.split(">")
    return a, b


def conflict_graph(d: Digraph) -> SimpleGraph:
    """Graph on the arcs of ``d``: arcs sharing a head are adjacent, as are
    the two arcs of an opposite pair.  Labels are "src>dst"."""
    pairs = []
    for v in d.vertices:
        ins = [(u, v) for u in d.in_neighbors[v]]
        pairs += [(edge_label(a), edge_label(b)) for a, b in combinations(ins, 2)]
    for a, b in d.sorted_edges:
        if (b, a) in d.edges and d.edge_key((a, b)) < d.edge_key((b, a)):
            pairs.append((edge_label((a, b)), edge_label((b, a))))
    return SimpleGraph.from_edges(pairs, [edge_label(e) for e in d.sorted_edges])


def relabel_edges(c: Complex) -> Complex:
    """Map a complex on "src>dst" string labels to one on edge tuples."""
    return Complex(tuple(parse_edge_label(x) for x in c.universe),
                   frozenset(frozenset(parse_edge_label(x) for x in f) for f in c.facets))


# ------------------------------------------------------------ surgery

def remove_interiors(c: Complex, removed: Iterable[Iterable]) -> Complex:
    """Delete the open cells of the given facets; their boundaries stay."""
    removed = {frozenset(f) for f in removed}
    missing = removed - c.facets
    if missing:
        raise DomainError("not-a-facet", str(len(missing)))
    keep = [f for f in c.facets if f not in removed]
    for f in removed:
        keep += [f - {x} for x in f]
    return Complex(c.universe, maximal_sets(keep) if keep else frozenset())


def deletion(c: Complex, v) -> Complex:
    return Complex(c.universe, maximal_sets(f - {v} for f in c.facets))


def link(c: Complex, v) -> Complex:
    return Complex(c.universe, frozenset(f - {v} for f in c.facets if v in f))


def all_faces(c: Complex) -> set[frozenset]:
    return {f for group in c.faces().values() for f in group}
