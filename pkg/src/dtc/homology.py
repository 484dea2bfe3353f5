"""Reduced Betti numbers over GF(p) from boundary-matrix ranks.

Used as the independent check on every wedge-of-spheres claim; homotopy
type is only ever certified at this level.
"""
from __future__ import annotations

import numpy as np

from .errors import DomainError
from .forest_complex import Complex

DENSE_LIMIT = 4000
NONZERO_CAP = 200_000


def boundary_matrix(lower: list[frozenset], upper: list[frozenset], key, p: int = 2) -> np.ndarray:
    """Matrix of the boundary map from faces ``upper`` (size k+1) to ``lower`` (size k).

    ``key`` orders the vertices inside a face; signs follow that order.
    """
    row = {f: i for i, f in enumerate(lower)}
    m = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for j, f in enumerate(upper):
        members = sorted(f, key=key)
        for i, x in enumerate(members):
            m[row[f - {x}], j] = (-1) ** i % p
    return m


def _rank_dense(m: np.ndarray, p: int) -> int:
    m = m.copy() % p
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        below = r + 1 + np.flatnonzero(m[r + 1:, c])
        if below.size:
            m[below] = (m[below] - np.outer(m[below, c], m[r])) % p
        r += 1
    return r


def _rank_sparse(columns: list[dict[int, int]], p: int) -> int:
    # column reduction keyed by pivot row
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        col = {i: v % p for i, v in col.items() if v % p}
        while col:
            low = max(col)
            if low not in pivots:
                pivots[low] = col
                rank += 1
                break
            other = pivots[low]
            factor = col[low] * pow(other[low], -1, p) % p
            for i, v in other.items():
                nv = (col.get(i, 0) - factor * v) % p
                if nv:
                    col[i] = nv
                else:
                    col.pop(i, None)
    return rank


def boundary_rank(lower: list[frozenset], upper: list[frozenset], key, p: int = 2) -> int:
    if not lower or not upper:
        return 0
    nnz = sum(len(f) for f in upper)
    if nnz > NONZERO_CAP:
        raise DomainError("too-large", f"{nnz} nonzeros in boundary matrix")
    if len(lower) <= DENSE_LIMIT and len(upper) <= DENSE_LIMIT:
        return _rank_dense(boundary_matrix(lower, upper, key, p), p)
    row = {f: i for i, f in enumerate(lower)}
    columns = []
    for f in upper:
        members = sorted(f, key=key)
        columns.append({row[f - {x}]: (-1) ** i for i, x in enumerate(members)})
    return _rank_sparse(columns, p)


def betti(c: Complex, p: int = 2) -> dict[int, int]:
    """Reduced Betti numbers {k: b~_k} for k = -1 .. dim.

    The void complex returns an empty dict.
    """
    if not c.facets:
        return {}
    faces = c.faces()
    key = c.pos.__getitem__
    top = max(faces)
    ranks = {s: boundary_rank(faces.get(s - 1, []), faces[s], key, p) for s in range(1, top + 1)}
    out = {}
    for s in range(0, top + 1):
        out[s - 1] = len(faces.get(s, [])) - ranks.get(s, 0) - ranks.get(s + 1, 0)
    return out


def nonzero(b: dict[int, int]) -> dict[int, int]:
    return {k: v for k, v in b.items() if v}


def wedge_check(c: Complex, profile: dict[int, int], p: int = 2) -> bool:
    """True iff the reduced Betti numbers equal the sphere counts of ``profile``."""
    return nonzero(betti(c, p)) == {k: v for k, v in profile.items() if v}


def euler_reduced(c: Complex) -> int:
    faces = c.faces()
    return sum((-1) ** (s - 1) * len(v) for s, v in faces.items())
