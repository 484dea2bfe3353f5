"""Shelling orders of (possibly nonpure) complexes.

A facet order F_1..F_t is a shelling when, for every i < j, some earlier
facet F_l and vertex v of F_j satisfy F_i ∩ F_j ⊆ F_l ∩ F_j = F_j - {v}.
Purity is not required.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError
from .forest_complex import Complex, deletion, is_pure, link

DEFAULT_SEARCH_CAP = 30
DEFAULT_VD_CAP = 40


@dataclass(frozen=True)
class ShellingOrder:
    facets: tuple[frozenset, ...]
    restrictions: tuple[frozenset, ...]

    @property
    def types(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.restrictions)

    def __len__(self):
        return len(self.facets)


class ShellingViolation(DomainError):
    """Raised by :func:`verify_shelling`; ``i < j`` index the offending pair."""

    kind = "not-a-shelling"

    def __init__(self, i: int, j: int, earlier: frozenset, later: frozenset, candidates: frozenset):
        self.i, self.j = i, j
        self.earlier, self.later, self.candidates = earlier, later, candidates
        super().__init__(None, f"facets {i} and {j}: no earlier facet covers "
                               f"their intersection by a ridge of facet {j}")


def restriction_candidates(facet: frozenset, earlier: Iterable[frozenset]) -> frozenset:
    """Vertices v of ``facet`` with facet - {v} inside some earlier facet.

    facet - {v} ⊆ P holds exactly when facet - P == {v}.
    """
    out = set()
    for p in earlier:
        diff = facet - p
        if len(diff) == 1:
            out |= diff
    return frozenset(out)


def _first_bad(facet: frozenset, earlier: Sequence[frozenset], cand: frozenset) -> int | None:
    for i, p in enumerate(earlier):
        if not (facet - p) & cand:
            return i
    return None


def verify_shelling(c: Complex, order: Sequence[Iterable]) -> ShellingOrder:
    """Check ``order`` against the shelling condition.

    Returns the order with its restriction faces; raises
    :class:`ShellingViolation` on the first failing pair and
    ``DomainError('bad-order')`` if ``order`` is not a permutation of the facets.
    """
    order = [frozenset(f) for f in order]
    if len(order) != len(c.facets) or set(order) != c.facets:
        raise DomainError("bad-order", "order is not a permutation of the facets")
    restrictions = []
    for j, f in enumerate(order):
        cand = restriction_candidates(f, order[:j])
        i = _first_bad(f, order[:j], cand)
        if i is not None:
            raise ShellingViolation(i, j, order[i], f, cand)
        restrictions.append(cand)
    return ShellingOrder(tuple(order), tuple(restrictions))


def is_shelling(c: Complex, order: Sequence[Iterable]) -> bool:
    try:
        verify_shelling(c, order)
    except ShellingViolation:
        return False
    return True


def shelling_h_triangle(s: ShellingOrder) -> dict[tuple[int, int], int]:
    """Count facets by (size, restriction size)."""
    tri: dict[tuple[int, int], int] = {}
    for f, r in zip(s.facets, s.restrictions):
        tri[(len(f), len(r))] = tri.get((len(f), len(r)), 0) + 1
    return dict(sorted(tri.items()))


def generating_facets_from_order(s: ShellingOrder) -> frozenset[frozenset]:
    return frozenset(f for f, r in zip(s.facets, s.restrictions) if f == r)


def interval_partition_ok(c: Complex, s: ShellingOrder) -> bool:
    """Every face lies in exactly one interval [R(F_j), F_j]."""
    hits: dict[frozenset, int] = {}
    for f, r in zip(s.facets, s.restrictions):
        free = sorted(f - r, key=c.pos.__getitem__)
        for mask in range(1 << len(free)):
            face = r | {free[b] for b in range(len(free)) if mask >> b & 1}
            hits[face] = hits.get(face, 0) + 1
    faces = {f for group in c.faces().values() for f in group}
    return set(hits) == faces and all(v == 1 for v in hits.values())


def find_shelling(c: Complex, cap: int = DEFAULT_SEARCH_CAP) -> ShellingOrder | None:
    """Exhaustive backtracking search for a shelling order.

    Whether a facet may come next depends only on the set already placed,
    so failed sets are memoized as bitmasks.
    """
    facets = list(c.sorted_facets)
    n = len(facets)
    if n > cap:
        raise DomainError("too-large", f"{n} facets exceeds search cap {cap}")
    failed: set[int] = set()
    order: list[int] = []

    def ok(k: int) -> bool:
        earlier = [facets[i] for i in order]
        f = facets[k]
        return _first_bad(f, earlier, restriction_candidates(f, earlier)) is None

    def rec(mask: int) -> bool:
        if len(order) == n:
            return True
        if mask in failed:
            return False
        for k in range(n):
            if mask >> k & 1 or not ok(k):
                continue
            order.append(k)
            if rec(mask | 1 << k):
                return True
            order.pop()
        failed.add(mask)
        return False

    if not rec(0):
        return None
    return verify_shelling(c, [facets[i] for i in order])


def is_vertex_decomposable(c: Complex, cap: int = DEFAULT_VD_CAP) -> bool:
    """Recursive shedding-vertex test.

    Simplices (including {∅}) are vertex decomposable.  v sheds when no
    face of link(v) is a facet of the deletion, i.e. no facet of the link
    is a facet of the deletion.
    """
    if len(c.vertices) > cap:
        raise DomainError("too-large", f"{len(c.vertices)} vertices exceeds cap {cap}")
    memo: dict[frozenset, bool] = {}

    def vd(facets: frozenset) -> bool:
        if len(facets) <= 1:
            return True
        if facets in memo:
            return memo[facets]
        cx = Complex(c.universe, facets)
        result = False
        for v in sorted(cx.vertices, key=c.pos.__getitem__):
            lk = link(cx, v).facets
            dl = deletion(cx, v).facets
            if lk & dl:
                continue
            if vd(dl) and vd(lk):
                result = True
                break
        memo[facets] = result
        return result

    return vd(c.facets)


def _ridge_neighbors(facets: Sequence[frozenset]) -> dict[frozenset, list[frozenset]]:
    by_ridge: dict[frozenset, list[frozenset]] = {}
    for f in facets:
        for x in f:
            by_ridge.setdefault(f - {x}, []).append(f)
    nb: dict[frozenset, list[frozenset]] = {f: [] for f in facets}
    for group in by_ridge.values():
        for f in group:
            nb[f] += [g for g in group if g != f]
    return nb


def straightforward_layers(c: Complex, f0: Iterable) -> list[list[frozenset]] | None:
    """Breadth-first ridge layers from ``f0`` if they give a straightforward shelling.

    Success means the layers satisfy the partition criterion (for F in
    layer i, F' in layer j >= i, some F'' in an earlier layer than j and
    v in F' give F ∩ F' ⊆ F'' ∩ F' = F' - {v}), so every layer-by-layer
    refinement is a shelling, and type(F) equals the layer index of F
    under every such refinement.  Returns None otherwise.
    """
    f0 = frozenset(f0)
    if f0 not in c.facets:
        raise DomainError("bad-seed", "f0 is not a facet")
    if not is_pure(c):
        raise DomainError("nonpure", "straightforward shellings are defined for pure complexes")
    nb = _ridge_neighbors(c.sorted_facets)
    layers = [[f0]]
    placed = {f0}
    while True:
        nxt = {g for f in layers[-1] for g in nb[f] if g not in placed}
        if not nxt:
            break
        layer = sorted(nxt, key=c.key)
        layers.append(layer)
        placed |= nxt
    if len(placed) != len(c.facets):
        return None
    before: list[frozenset] = []
    for j, layer in enumerate(layers):
        for fp in layer:
            cand = restriction_candidates(fp, before)
            # smallest and largest possible predecessor sets of any refinement
            widest = restriction_candidates(fp, before + [g for g in layer if g != fp])
            if len(cand) != j or len(widest) != j:
                return None
            earlier_or_same = [g for lay in layers[:j + 1] for g in lay if g != fp]
            if _first_bad(fp, earlier_or_same, cand) is not None:
                return None
        before += layer
    return layers


def types_by_layer(layers: list[list[frozenset]]) -> dict[frozenset, int]:
    return {f: i for i, layer in enumerate(layers) for f in layer}


def order_from_layers(c: Complex, layers: list[list[frozenset]]) -> ShellingOrder:
    return verify_shelling(c, [f for layer in layers for f in layer])

