"""Pure skeleta of double-directed forest complexes.

The k-skeleton of the complex of ↔G is pure exactly for k <= |V| - r(G) - 1,
where r(G) is the strong independence number.  When G has a complete
r-source the top pure skeleton is shellable; for cycles the picture is a
trichotomy in n mod 3.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import DomainError
from .forest_complex import Complex, maximal_independent_sets, skeleton, tree_complex_skeleton
from .graph_core import SimpleGraph, cycle_graph, double_directed, is_complete_r_source, strongly_independent_number
from .homology import betti, nonzero
from .shelling import ShellingOrder, verify_shelling


def max_pure_dimension(g: SimpleGraph) -> int:
    r, _ = strongly_independent_number(g)
    return len(g.vertices) - r - 1


def max_pure_skeleton(g: SimpleGraph) -> tuple[int, Complex]:
    m = max_pure_dimension(g)
    return m, tree_complex_skeleton(double_directed(g), m)


def forest_roots(vertices: Iterable[str], forest: frozenset) -> list[str]:
    heads = {b for _, b in forest}
    return [v for v in vertices if v not in heads]


def _membership_key(chosen: Iterable[str], ordered: list[str]) -> tuple[int, ...]:
    # earlier tuple <=> min of the symmetric difference lies in the first set
    chosen = set(chosen)
    return tuple(0 if v in chosen else 1 for v in ordered)


def skeleton_sort_key(g: SimpleGraph, sources: list[str], cx: Complex):
    nbrs = {x: g.sorted_neighbors(x) for x in sources}

    def key(f: frozenset):
        outs = {x: [b for a, b in f if a == x] for x in sources}
        degrees = tuple(-len(outs[x]) for x in sources)
        blocks = tuple(_membership_key(outs[x], nbrs[x]) for x in sources)
        return degrees, blocks, cx.key(f)

    return key


def r_source_skeleton_shelling(g: SimpleGraph, a: Iterable[str]) -> ShellingOrder:
    """Shelling of the top pure skeleton from a complete r-source ``a``.

    Facets are ordered by the out-degree vector of the sources (larger
    first, lexicographically), then block-wise by the sets of out-neighbors
    of each source, then canonically inside a block.
    """
    a = list(a)
    if not is_complete_r_source(g, a):
        raise DomainError("not-r-source", f"{a} is not a complete r-source")
    sources = sorted(a, key=g.index.__getitem__)
    m = len(g.vertices) - len(sources) - 1
    cx = tree_complex_skeleton(double_directed(g), m)
    order = sorted(cx.facets, key=skeleton_sort_key(g, sources, cx))
    return verify_shelling(cx, order)


def r_source_first_facet(g: SimpleGraph, a: Iterable[str]) -> frozenset:
    return frozenset((x, v) for x in a for v in g.neighbors[x])


def cyclic_complex(n: int) -> Complex:
    """Independent sets of the n-cycle on labels 1..n."""
    if n < 3:
        raise DomainError("bad-size", "n >= 3")
    vs = list(range(1, n + 1))
    adj = {i: {(i % n) + 1, ((i - 2) % n) + 1} for i in vs}
    return Complex(tuple(vs), frozenset(maximal_independent_sets(vs, adj)))


def cycle_arc_position(e: tuple[str, str], n: int) -> int:
    """Position in Z_{2n} of an arc of ↔C_n (vertices "1".."n").

    Arc (i-1 -> i) sits at 2i-1 and (i+1 -> i) at 2i, so consecutive
    positions are exactly the conflicting arcs.
    """
    a, b = int(e[0]), int(e[1])
    return 2 * b - 1 if a == (b - 2) % n + 1 else 2 * b


def lex_order(c: Complex) -> list[frozenset]:
    """A before B iff min(A △ B) lies in A."""
    return sorted(c.facets, key=lambda f: _membership_key(f, list(c.universe)))


@dataclass
class CycleShellingResult:
    n: int
    shellable: bool
    complex: Complex
    order: ShellingOrder | None = None
    certificate: dict[int, int] = field(default_factory=dict)
    method: str = ""


def cycle_skeleton_shelling(n: int) -> CycleShellingResult:
    if n < 3:
        raise DomainError("bad-size", "n >= 3")
    k, rem = divmod(n, 3)
    if rem == 0:
        g = cycle_graph(n)
        a = [str(i) for i in range(1, n + 1, 3)]
        order = r_source_skeleton_shelling(g, a)
        cx = tree_complex_skeleton(double_directed(g), 2 * k - 1)
        return CycleShellingResult(n, True, cx, order, method="r-source")
    if rem == 1:
        cx = skeleton(cyclic_complex(2 * n), 2 * k)
        return CycleShellingResult(n, True, cx, verify_shelling(cx, lex_order(cx)), method="lex")
    cx = skeleton(cyclic_complex(2 * n), 2 * k + 1)
    b = nonzero(betti(cx))
    return CycleShellingResult(n, False, cx, certificate=b, method="betti")


def certificate_is_obstruction(res: CycleShellingResult) -> bool:
    """A pure shellable complex has reduced homology in its top dimension only."""
    return len(res.certificate) >= 2 or any(d != res.complex.dim for d in res.certificate)
