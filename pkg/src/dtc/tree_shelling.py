"""Forest complexes of digraphs that are essentially trees.

The shelling is built by peeling the first leaf v (neighbor x) and
recursing on three smaller digraphs:

    D'   = D - v
    D_0  = D' minus every arc y -> x
    D_p  = D_0 minus x -> y_p   (D_0 itself when x -> y_p is absent)

The same recursion yields h-triangles and generating facets.  For
double-directed trees the generating facets are counted by ordered
decompositions into basic trees, which gives the wedge-of-spheres type.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .errors import DomainError
from .forest_complex import directed_tree_complex
from .graph_core import Digraph, SimpleGraph, double_directed
from .shelling import ShellingOrder, verify_shelling

HTri = dict[tuple[int, int], int]


@dataclass(frozen=True)
class LeafCase:
    leaf: str
    neighbor: str
    case: str
    y_list: tuple[str, ...]
    s: int


def first_leaf(d: Digraph) -> str | None:
    nb: dict[str, set[str]] = {v: set() for v in d.vertices}
    for a, b in d.edges:
        nb[a].add(b)
        nb[b].add(a)
    for v in d.vertices:
        if len(nb[v]) == 1:
            return v
    return None


def leaf_case(d: Digraph) -> LeafCase | None:
    """Case of the first leaf: 'a' only x->v, 'b' only v->x, 'c' both."""
    v = first_leaf(d)
    if v is None:
        return None
    x = next(b if a == v else a for a, b in d.edges if v in (a, b))
    fwd, back = (x, v) in d.edges, (v, x) in d.edges
    case = "c" if fwd and back else ("a" if fwd else "b")
    ys = [y for y in d.in_neighbors[x] if y != v]
    # y_1..y_s are the in-neighbors with x -> y_i present
    ys.sort(key=lambda y: ((x, y) not in d.edges, d.index[y]))
    s = sum(1 for y in ys if (x, y) in d.edges)
    return LeafCase(v, x, case, tuple(ys), s)


def subproblems(d: Digraph, lc: LeafCase) -> tuple[Digraph, Digraph, list[Digraph]]:
    x = lc.neighbor
    d1 = d.without_vertex(lc.leaf)
    d0 = d1.without_edges((y, x) for y in lc.y_list)
    dps = [d0.without_edges([(x, y)]) if p < lc.s else d0 for p, y in enumerate(lc.y_list)]
    return d1, d0, dps


def _check_tree(d: Digraph) -> None:
    from .graph_core import is_essentially_tree
    if not is_essentially_tree(d):
        raise DomainError("shape", "digraph is not essentially a tree")


@lru_cache(maxsize=None)
def _order(d: Digraph) -> tuple[frozenset, ...]:
    lc = leaf_case(d)
    if lc is None:
        return (frozenset(),)
    d1, d0, dps = subproblems(d, lc)
    xv, vx = (lc.neighbor, lc.leaf), (lc.leaf, lc.neighbor)
    if lc.case == "a":
        return tuple(f | {xv} for f in _order(d1))
    if lc.case == "b":
        out = [h | {vx} for h in _order(d0)]
        for y, dp in zip(lc.y_list, dps):
            out += [g | {(y, lc.neighbor)} for g in _order(dp)]
        return tuple(out)
    return tuple([f | {xv} for f in _order(d1)] + [h | {vx} for h in _order(d0)])


def recursive_order(d: Digraph) -> tuple[frozenset, ...]:
    """Facet order from first-leaf elimination, without verification.

    Works for any digraph whose underlying graph is a forest.
    """
    return _order(d)


def recursive_shelling(d: Digraph) -> ShellingOrder:
    _check_tree(d)
    if not d.edges:
        raise DomainError("shape", "digraph has no edges")
    return verify_shelling(directed_tree_complex(d), _order(d))


def _shift(tri: HTri, di: int, dj: int) -> HTri:
    return {(i + di, j + dj): v for (i, j), v in tri.items()}


def _add(*tris: HTri) -> HTri:
    out: HTri = {}
    for t in tris:
        for k, v in t.items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in sorted(out.items()) if v}


@lru_cache(maxsize=None)
def _htri(d: Digraph) -> tuple:
    lc = leaf_case(d)
    if lc is None:
        return (((0, 0), 1),)
    d1, d0, dps = subproblems(d, lc)
    h = lambda g: dict(_htri(g))  # noqa: E731
    if lc.case == "a":
        out = _shift(h(d1), 1, 0)
    elif lc.case == "b":
        out = _add(_shift(h(d0), 1, 0), *[_shift(h(dp), 1, 1) for dp in dps])
    else:
        out = _add(_shift(h(d1), 1, 0), _shift(h(d0), 1, 1))
    return tuple(sorted(out.items()))


def h_triangle_via_recursion(d: Digraph) -> HTri:
    _check_tree(d)
    return dict(_htri(d))


@lru_cache(maxsize=None)
def _generating(d: Digraph) -> frozenset[frozenset]:
    lc = leaf_case(d)
    if lc is None:
        return frozenset({frozenset()})
    d1, d0, dps = subproblems(d, lc)
    x = lc.neighbor
    if lc.case == "a":
        return frozenset()
    if lc.case == "b":
        out = set()
        # every p contributes, not only p <= s: for p > s, D_p = D_0 and the
        # restriction of G + (y_p -> x) is R(G) + (y_p -> x)
        for y, dp in zip(lc.y_list, dps):
            out |= {g | {(y, x)} for g in _generating(dp)}
        return frozenset(out)
    return frozenset(h | {(lc.leaf, x)} for h in _generating(d0))


def generating_facets_tree(d: Digraph) -> frozenset[frozenset]:
    _check_tree(d)
    return _generating(d)


def dag_homotopy(d: Digraph) -> dict[int, int]:
    """Sphere counts for an acyclic digraph: one wedge of
    prod(indeg(v) - 1) spheres of dimension |V| - |R| - 1 over non-sources."""
    if not d.is_acyclic():
        raise DomainError("not-acyclic", "digraph has a directed cycle")
    roots = [v for v in d.vertices if d.in_degree[v] == 0]
    count = 1
    for v in d.vertices:
        if d.in_degree[v]:
            count *= d.in_degree[v] - 1
    if count == 0:
        return {}
    return {len(d.vertices) - len(roots) - 1: count}


# ---------------------------------------------------------- basic trees

def _require_tree(t: SimpleGraph) -> None:
    if not t.is_tree():
        raise DomainError("shape", "graph is not a tree")


def is_basic_tree(t: SimpleGraph) -> bool:
    _require_tree(t)
    n = len(t.vertices)
    if n == 2:
        return True
    leaves = {v for v in t.vertices if t.degree(v) == 1}
    if n % 2 or len(leaves) * 2 != n:
        return False
    return all(len(t.neighbors[u] & leaves) == 1 for u in t.vertices if u not in leaves)


@dataclass(frozen=True)
class BasicDecomposition:
    pieces: tuple[frozenset, ...]
    generating_facet: frozenset

    @property
    def m(self) -> int:
        return len(self.pieces)


def _connected_sets(nbrs: dict[str, frozenset], start: str, order: dict[str, int]):
    """Every connected vertex set containing ``start``, each exactly once."""

    def rec(current, frontier, banned):
        yield current
        for i, u in enumerate(frontier):
            grow = [w for w in sorted(nbrs[u], key=order.__getitem__)
                    if w not in current and w not in banned and w not in frontier]
            yield from rec(current | {u}, frontier[i + 1:] + grow, banned | set(frontier[:i]))

    first = [w for w in sorted(nbrs[start], key=order.__getitem__)]
    yield from rec(frozenset({start}), first, frozenset())


def _pieces(tree: SimpleGraph, v: str, order: dict[str, int]):
    """Basic subtrees B through leaf v meeting the decomposition conditions.

    Yields (vertex set, peripheral arcs).  When |tree| > 2, B is determined
    by its non-leaves X: a connected set containing v's neighbor in which
    every vertex has exactly one neighbor outside X.
    """
    if len(tree.vertices) == 2:
        (w,) = tree.neighbors[v]
        yield frozenset({v, w}), frozenset({(v, w)})
        return
    (x,) = tree.neighbors[v]
    nbrs = tree.neighbors
    for xs in _connected_sets(nbrs, x, order):
        outside = {u: nbrs[u] - xs for u in xs}
        if all(len(o) == 1 for o in outside.values()):
            arcs = frozenset((next(iter(o)), u) for u, o in outside.items())
            yield xs | {a for a, _ in arcs}, arcs


def enumerate_basic_decompositions(t: SimpleGraph) -> tuple[list[BasicDecomposition], dict[int, int]]:
    """All ordered decompositions of ``t`` into basic trees, with mu_m counts.

    Repeatedly takes the first leaf (global vertex order) of the residual
    forest, chooses a valid basic subtree B of its component, and deletes
    the vertices of B whose whole neighborhood lies in B.
    """
    _require_tree(t)
    order = t.index

    @lru_cache(maxsize=None)
    def rec(edges: frozenset) -> tuple[tuple[tuple[frozenset, ...], frozenset], ...]:
        if not edges:
            return (((), frozenset()),)
        used = {u for e in edges for u in e}
        g = SimpleGraph(tuple(u for u in t.vertices if u in used), edges)
        v = g.leaves()[0]
        comp = g.component_of(v)
        out = []
        for piece, arcs in _pieces(comp, v, order):
            done = {u for u in piece if comp.neighbors[u] <= piece}
            rest = frozenset(e for e in edges if not e & done)
            for tail, gen in rec(rest):
                out.append(((piece,) + tail, arcs | gen))
        return tuple(out)

    decomps = [BasicDecomposition(p, g) for p, g in rec(t.edges)]
    mu = Counter(dec.m for dec in decomps)
    return decomps, dict(sorted(mu.items()))


def tree_homotopy(t: SimpleGraph) -> dict[int, int]:
    """Sphere counts {dimension: mu_m} with dimension (n + m - 3) / 2."""
    _, mu = enumerate_basic_decompositions(t)
    n = len(t.vertices)
    out: dict[int, int] = {}
    for m, count in mu.items():
        if (n + m - 3) % 2:
            raise DomainError("internal-inconsistency", f"n={n}, m={m} has odd n+m-3")
        out[(n + m - 3) // 2] = out.get((n + m - 3) // 2, 0) + count
    return out


def all_trees(n: int) -> list[SimpleGraph]:
    """One tree per isomorphism class on n vertices, labelled "0".."n-1"."""
    if n == 1:
        return [SimpleGraph(("0",), frozenset())]
    out = []
    for tr in nx.nonisomorphic_trees(n):
        vs = [str(v) for v in sorted(tr.nodes)]
        out.append(SimpleGraph.from_edges([(str(a), str(b)) for a, b in sorted(tr.edges)], vs))
    return out


@dataclass
class ExtremalReport:
    n: int
    dims: list[tuple[str, tuple[int, ...]]]
    max_top: int | None
    top_formula: int
    min_bottom: int | None
    bottom_formula: int

    @property
    def top_matches(self) -> bool:
        return self.max_top == self.top_formula


def extremal_dims_report(n: int, trees: list[SimpleGraph] | None = None) -> ExtremalReport:
    """Homology dimensions per tree, the largest top dimension against
    ceil((n-2)/2), and the smallest bottom dimension (reported only)."""
    trees = all_trees(n) if trees is None else trees
    dims = []
    for t in trees:
        profile = tree_homotopy(t)
        label = ";".join(f"{a}-{b}" for a, b in t.sorted_edges)
        dims.append((label, tuple(sorted(profile))))
    tops = [ds[-1] for _, ds in dims if ds]
    bottoms = [ds[0] for _, ds in dims if ds]
    return ExtremalReport(
        n, dims,
        max(tops) if tops else None, -(-(n - 2) // 2),
        min(bottoms) if bottoms else None, n - n // 3 - 2,
    )


def double_tree(t: SimpleGraph) -> Digraph:
    return double_directed(t)
