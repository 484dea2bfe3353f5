"""Digraphs, simple graphs, text parsing and the graph predicates the
complex constructions key on.

Vertices are string labels.  The order in which a label first appears is
the fixed linear order used by every tie-break in the package.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DomainError, MalformedInput

Edge = tuple[str, str]


def _ordered_vertices(vertices: Iterable[str], pairs: Iterable[tuple[str, str]]) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for v in vertices:
        seen.setdefault(v, None)
    for a, b in pairs:
        seen.setdefault(a, None)
        seen.setdefault(b, None)
    return tuple(seen)


@dataclass(frozen=True)
class Digraph:
    vertices: tuple[str, ...]
    edges: frozenset[Edge]

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise MalformedInput("duplicate-vertex", str(self.vertices))
        for a, b in self.edges:
            if a == b:
                raise MalformedInput("loop", f"{a} {b}")
            if a not in vs or b not in vs:
                raise MalformedInput("unknown-vertex", f"{a} {b}")

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], vertices: Iterable[str] = ()) -> "Digraph":
        edges = [(str(a), str(b)) for a, b in edges]
        return cls(_ordered_vertices((str(v) for v in vertices), edges), frozenset(edges))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def edge_key(self, e: Edge) -> tuple[int, int]:
        return self.index[e[0]], self.index[e[1]]

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges, key=self.edge_key))

    @cached_property
    def out_neighbors(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        for a, b in self.sorted_edges:
            out[a].append(b)
        return {v: tuple(ns) for v, ns in out.items()}

    @cached_property
    def in_neighbors(self) -> dict[str, tuple[str, ...]]:
        inn: dict[str, list[str]] = {v: [] for v in self.vertices}
        for a, b in self.sorted_edges:
            inn[b].append(a)
        return {v: tuple(sorted(ns, key=self.index.__getitem__)) for v, ns in inn.items()}

    @cached_property
    def in_degree(self) -> dict[str, int]:
        return {v: len(ns) for v, ns in self.in_neighbors.items()}

    @cached_property
    def out_degree(self) -> dict[str, int]:
        return {v: len(ns) for v, ns in self.out_neighbors.items()}

    def underlying(self) -> "SimpleGraph":
        """Simple graph obtained by forgetting directions (opposite pairs merge)."""
        return SimpleGraph.from_edges(self.edges, self.vertices)

    def without_vertex(self, v: str) -> "Digraph":
        return Digraph(
            tuple(u for u in self.vertices if u != v),
            frozenset(e for e in self.edges if v not in e),
        )

    def without_edges(self, removed: Iterable[Edge]) -> "Digraph":
        return Digraph(self.vertices, self.edges - frozenset(removed))

    def is_acyclic(self) -> bool:
        indeg = dict(self.in_degree)
        queue = deque(v for v in self.vertices if indeg[v] == 0)
        seen = 0
        while queue:
            u = queue.popleft()
            seen += 1
            for w in self.out_neighbors[u]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return seen == len(self.vertices)

    def __str__(self):
        return f"Digraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise MalformedInput("duplicate-vertex", str(self.vertices))
        for e in self.edges:
            if len(e) != 2:
                raise MalformedInput("loop", str(sorted(e)))
            if not e <= vs:
                raise MalformedInput("unknown-vertex", str(sorted(e)))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], vertices: Iterable[str] = ()) -> "SimpleGraph":
        pairs = [(str(a), str(b)) for a, b in edges]
        for a, b in pairs:
            if a == b:
                raise MalformedInput("loop", f"{a} {b}")
        return cls(_ordered_vertices((str(v) for v in vertices), pairs),
                   frozenset(frozenset(p) for p in pairs))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def neighbors(self) -> dict[str, frozenset[str]]:
        nb: dict[str, set[str]] = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            nb[a].add(b)
            nb[b].add(a)
        return {v: frozenset(s) for v, s in nb.items()}

    def sorted_neighbors(self, v: str) -> list[str]:
        return sorted(self.neighbors[v], key=self.index.__getitem__)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[str, str], ...]:
        pairs = [tuple(sorted(e, key=self.index.__getitem__)) for e in self.edges]
        return tuple(sorted(pairs, key=lambda p: (self.index[p[0]], self.index[p[1]])))

    def degree(self, v: str) -> int:
        return len(self.neighbors[v])

    def leaves(self) -> list[str]:
        return [v for v in self.vertices if len(self.neighbors[v]) == 1]

    def distances_from(self, s: str) -> dict[str, int]:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in self.neighbors[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        return len(self.distances_from(self.vertices[0])) == len(self.vertices)

    def component_of(self, v: str) -> "SimpleGraph":
        keep = set(self.distances_from(v))
        return self.induced(keep)

    def induced(self, keep: Iterable[str]) -> "SimpleGraph":
        keep = set(keep)
        return SimpleGraph(tuple(u for u in self.vertices if u in keep),
                           frozenset(e for e in self.edges if e <= keep))

    def is_tree(self) -> bool:
        return bool(self.vertices) and self.is_connected() and len(self.edges) == len(self.vertices) - 1


# ---------------------------------------------------------------- parsing

def _pairs(text: str) -> list[tuple[str, str]]:
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if len(tok) == 1:
            continue
        if len(tok) == 2:
            if tok[0] == tok[1]:
                raise MalformedInput("loop", f"line {lineno}: {line!r}")
            pairs.append((tok[0], tok[1]))
        else:
            raise MalformedInput("bad-line", f"line {lineno}: {line!r}")
    return pairs


def _first_appearance(text: str) -> list[str]:
    order: dict[str, None] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        for t in line.split():
            order.setdefault(t, None)
    return list(order)


def parse_digraph(text: str) -> Digraph:
    """Read "src dst" lines; "#" starts a comment line.

    A line holding a single token declares an isolated vertex.  Repeated
    edges collapse; loops raise ``MalformedInput``.
    """
    pairs = _pairs(text)
    return Digraph.from_edges(pairs, _first_appearance(text))


def parse_graph(text: str) -> SimpleGraph:
    """Undirected counterpart of :func:`parse_digraph`; pairs are unordered."""
    pairs = _pairs(text)
    return SimpleGraph.from_edges(pairs, _first_appearance(text))


def format_digraph(d: Digraph) -> str:
    lines = [f"{a} {b}" for a, b in d.sorted_edges]
    used = {v for e in d.edges for v in e}
    lines += [v for v in d.vertices if v not in used]
    return "\n".join(lines) + "\n"


def format_graph(g: SimpleGraph) -> str:
    lines = [f"{a} {b}" for a, b in g.sorted_edges]
    used = {v for e in g.edges for v in e}
    lines += [v for v in g.vertices if v not in used]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------- constructors

def complete_digraph(n: int) -> Digraph:
    vs = [str(i) for i in range(1, n + 1)]
    return Digraph.from_edges([(a, b) for a in vs for b in vs if a != b], vs)


def cycle_graph(n: int) -> SimpleGraph:
    vs = [str(i) for i in range(1, n + 1)]
    return SimpleGraph.from_edges([(vs[i], vs[(i + 1) % n]) for i in range(n)], vs)


def path_graph(labels: Iterable[str]) -> SimpleGraph:
    vs = [str(v) for v in labels]
    return SimpleGraph.from_edges(list(zip(vs, vs[1:])), vs)


def double_directed(g: SimpleGraph) -> Digraph:
    """Replace every edge {u, v} by the two arcs u->v and v->u."""
    arcs = []
    for a, b in g.sorted_edges:
        arcs += [(a, b), (b, a)]
    return Digraph.from_edges(arcs, g.vertices)


# ------------------------------------------------------------- predicates

def complete_sources(d: Digraph) -> tuple[str, ...]:
    """Vertices with an arc to every other vertex, in vertex order."""
    n = len(d.vertices)
    return tuple(v for v in d.vertices if d.out_degree[v] == n - 1)


def is_strongly_independent(g: SimpleGraph, a: Iterable[str]) -> bool:
    a = list(a)
    for i, u in enumerate(a):
        for w in a[i + 1:]:
            if w in g.neighbors[u] or g.neighbors[u] & g.neighbors[w]:
                return False
    return True


def _strongly_independent_sets(g: SimpleGraph):
    """Yield every strongly independent set (as a tuple in vertex order).

    Two vertices may coexist iff they are at distance >= 3, so this is the
    independent-set enumeration of the square graph.
    """
    conflict = {v: set(g.neighbors[v]) for v in g.vertices}
    for v in g.vertices:
        for u in g.neighbors[v]:
            conflict[v] |= g.neighbors[u]
        conflict[v].discard(v)
    vs = g.vertices

    def rec(i, chosen, blocked):
        if i == len(vs):
            yield tuple(chosen)
            return
        v = vs[i]
        if v not in blocked:
            chosen.append(v)
            yield from rec(i + 1, chosen, blocked | conflict[v])
            chosen.pop()
        yield from rec(i + 1, chosen, blocked)

    yield from rec(0, [], frozenset())


def strongly_independent_number(g: SimpleGraph) -> tuple[int, tuple[str, ...]]:
    """Maximum size r(G) of a strongly independent set, with a witness.

    The witness is the first maximum set in include-first lexicographic
    enumeration order.
    """
    best: tuple[str, ...] = ()
    for s in _strongly_independent_sets(g):
        if len(s) > len(best):
            best = s
    return len(best), best


def complete_r_sources(g: SimpleGraph) -> list[tuple[str, ...]]:
    """Strongly independent sets whose closed neighborhoods cover V(G).

    Covering forces maximality and size r(G): any strongly independent set
    meets each closed neighborhood at most once.
    """
    out = []
    allv = set(g.vertices)
    for s in _strongly_independent_sets(g):
        covered = set(s)
        for x in s:
            covered |= g.neighbors[x]
        if covered == allv and s:
            out.append(s)
    return out


def is_complete_r_source(g: SimpleGraph, a: Iterable[str]) -> bool:
    a = list(a)
    if not a or any(x not in g.index for x in a) or len(set(a)) != len(a):
        return False
    if not is_strongly_independent(g, a):
        return False
    covered = set(a)
    for x in a:
        covered |= g.neighbors[x]
    return covered == set(g.vertices)


def is_essentially_tree(d: Digraph) -> bool:
    """True iff the underlying simple graph is a tree."""
    return d.underlying().is_tree()


def diameter(g: SimpleGraph) -> int:
    if not g.is_connected():
        raise DomainError("disconnected", "diameter of a disconnected graph")
    return max((max(g.distances_from(v).values()) for v in g.vertices), default=0)
