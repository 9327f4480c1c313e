"""Independent sets and partitions of the vertex set of a complex.

Vertex sets are bitmasks over the complex's internal vertex indices; use
``K.mask(labels)`` and ``K.labels_of(mask)`` to convert. A partition is a tuple
of block masks ordered by lowest vertex.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from math import ceil, comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from .complex import SimplicialComplex, bits, popcount
from .errors import InvalidParameters
from .graphs import SimpleGraph

log = logging.getLogger(__name__)

Partition = tuple[int, ...]


def _as_mask(K: SimplicialComplex, B) -> int:
    return B if isinstance(B, int) else K.mask(B)


def canonical(blocks: Iterable[int]) -> Partition:
    return tuple(sorted(blocks, key=lambda b: b & -b))


@lru_cache(maxsize=64)
def dependence_table(K: SimplicialComplex, s: int) -> bytes:
    """Byte ``X`` is 1 iff the vertex set ``X`` contains an ``s``-face of ``K``."""
    if s < 1:
        raise InvalidParameters("s must be at least 1")
    m = K.m
    dep = np.zeros(1 << m, dtype=np.uint8)
    faces = K.face_masks(s)
    if faces:
        dep[list(faces)] = 1
        for i in range(m):
            view = dep.reshape(-1, 2, 1 << i)
            view[:, 1, :] |= view[:, 0, :]
    return dep.tobytes()


def is_independent(K: SimplicialComplex, B, s: int) -> bool:
    """True iff ``B`` contains no ``s``-simplex of ``K``."""
    B = _as_mask(K, B)
    return not any(f & B == f for f in K.face_masks(s))


def connected_components(K: SimplicialComplex, B) -> list[int]:
    return K.components(_as_mask(K, B))


def block_connected_refinement(K: SimplicialComplex, P: Iterable) -> Partition:
    return canonical(c for b in P for c in K.components(_as_mask(K, b)))


def partition_graph(K: SimplicialComplex, P: Sequence) -> SimpleGraph:
    """Graph on the blocks of ``P`` (in the given order); blocks adjacent iff their union is connected."""
    P = [_as_mask(K, b) for b in P]
    edges = [
        (i, j)
        for i in range(len(P))
        for j in range(i + 1, len(P))
        if K.is_connected_set(P[i] | P[j])
    ]
    return SimpleGraph.from_edges(len(P), edges)


def _blocks_containing_low(U: int, ok) -> Iterator[int]:
    low = U & -U
    rest = U ^ low
    sub = rest
    while True:
        B = low | sub
        if ok(B):
            yield B
        if sub == 0:
            return
        sub = (sub - 1) & rest


def enumerate_bcp(K: SimplicialComplex, s: int) -> Iterator[Partition]:
    """All block-connected ``s``-independent partitions of ``V(K)``, duplicate-free.

    Blocks are grown around the least remaining vertex, so each partition is
    produced exactly once; blocks that are dependent or disconnected are skipped.
    """
    dep = dependence_table(K, s)
    good: dict[int, bool] = {}

    def ok(B: int) -> bool:
        v = good.get(B)
        if v is None:
            v = good[B] = not dep[B] and K.is_connected_set(B)
        return v

    def rec(U: int, acc: list[int]) -> Iterator[Partition]:
        if not U:
            yield tuple(acc)
            return
        for B in _blocks_containing_low(U, ok):
            acc.append(B)
            yield from rec(U & ~B, acc)
            acc.pop()

    return rec(K.vertex_mask, [])


@lru_cache(maxsize=64)
def stirling_row(K: SimplicialComplex, s: int) -> tuple[int, ...]:
    """``(S(K,0,s), ..., S(K,m,s))`` by the fixed-vertex recurrence.

    The block of the least remaining vertex is chosen among the independent
    subsets of the remaining set; the memo holds, per vertex subset, the counts
    for every number of blocks at once.
    """
    dep = dependence_table(K, s)
    memo: dict[int, list[int]] = {0: [1]}

    def row(U: int) -> list[int]:
        hit = memo.get(U)
        if hit is not None:
            return hit
        acc = [0] * (popcount(U) + 1)
        low = U & -U
        rest = U ^ low
        sub = rest
        while True:
            B = low | sub
            if not dep[B]:
                for k, c in enumerate(row(U ^ B)):
                    if c:
                        acc[k + 1] += c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        memo[U] = acc
        return acc

    if K.m > 14:
        log.info("subset DP over 2^%d vertex sets (s=%d)", K.m, s)
    return tuple(row(K.vertex_mask))


def count_independent_partitions(K: SimplicialComplex, r: int, s: int) -> int:
    """``S(K, r, s)``: partitions of ``V(K)`` into ``r`` blocks containing no ``s``-simplex."""
    if r < 0:
        raise InvalidParameters("r must be non-negative")
    row = stirling_row(K, s)
    return row[r] if r < len(row) else 0


@lru_cache(maxsize=None)
def stirling2(m: int, r: int) -> int:
    """Stirling numbers of the second kind, ``S(m, r)``."""
    if m < 0 or r < 0:
        raise InvalidParameters("negative argument")
    if m == r:
        return 1
    if r == 0 or r > m:
        return 0
    return stirling2(m - 1, r - 1) + r * stirling2(m - 1, r)


@lru_cache(maxsize=None)
def stirling_simplex(m: int, r: int, s: int) -> int:
    """``S(m, r, s)``: partitions of an ``m``-set into ``r`` blocks of size at most ``s``."""
    if m < 0 or r < 0 or s < 1:
        raise InvalidParameters("need m, r >= 0 and s >= 1")
    if m == 0:
        return 1 if r == 0 else 0
    if r == 0:
        return 0
    return sum(comb(m - 1, j) * stirling_simplex(j, r - 1, s) for j in range(max(m - s, 0), m))


def weighted_count(weights: Sequence[int], r: int, s: int) -> int:
    """``S(M, w, r, s)`` with ``M`` the index set of ``weights``.

    A block is admissible if it is a singleton or has weight at most ``s``.
    """
    if any(w < 1 for w in weights):
        raise InvalidParameters("weights must be positive")
    return _weighted_row(tuple(weights), s)[r] if r <= len(weights) else 0


@lru_cache(maxsize=4096)
def _weighted_row(weights: tuple[int, ...], s: int) -> tuple[int, ...]:
    n = len(weights)

    def admissible(B: int) -> bool:
        return popcount(B) == 1 or sum(weights[i] for i in bits(B)) <= s

    memo: dict[int, list[int]] = {0: [1]}

    def row(M: int) -> list[int]:
        hit = memo.get(M)
        if hit is not None:
            return hit
        top = 1 << (M.bit_length() - 1)
        rest = M ^ top
        acc = [0] * (popcount(M) + 1)
        # J = the part not in the block of max(M); M - J must be admissible
        J = rest
        while True:
            if admissible(M ^ J):
                for k, c in enumerate(row(J)):
                    if c:
                        acc[k + 1] += c
            if J == 0:
                break
            J = (J - 1) & rest
        memo[M] = acc
        return acc

    return tuple(row((1 << n) - 1))


def maximal_independent_sets(K: SimplicialComplex, s: int) -> list[int]:
    """Inclusion-maximal ``s``-independent vertex sets.

    Bron–Kerbosch without pivoting, run on the independence system of the
    ``s``-faces: a vertex stays a candidate while adding it keeps the current
    set independent.
    """
    dep = dependence_table(K, s)
    out: list[int] = []

    def extend(R: int, P: list[int], X: list[int]) -> None:
        if not P and not X:
            out.append(R)
            return
        P = list(P)
        X = list(X)
        while P:
            v = P.pop(0)
            R2 = R | (1 << v)
            extend(
                R2,
                [u for u in P if not dep[R2 | (1 << u)]],
                [u for u in X if not dep[R2 | (1 << u)]],
            )
            X.append(v)

    extend(0, [v for v in range(K.m) if not dep[1 << v]], [])
    return sorted(out, key=bits)


def _greedy_cover(sets: list[int], universe: int) -> int:
    left, used = universe, 0
    while left:
        best = max(sets, key=lambda x: popcount(x & left))
        left &= ~best
        used += 1
    return used


def _lp_bound(sets: list[int], universe: int) -> int:
    from scipy.optimize import linprog

    verts = bits(universe)
    A = np.array([[-1.0 if (S >> v) & 1 else 0.0 for S in sets] for v in verts])
    res = linprog(
        np.ones(len(sets)), A_ub=A, b_ub=-np.ones(len(verts)), bounds=(0, 1), method="highs"
    )
    if not res.success:
        return 1
    return max(1, ceil(res.fun - 1e-7))


def min_set_cover(sets: Sequence[int], universe: int) -> int:
    """Fewest members of ``sets`` whose union contains ``universe`` (exact branch and bound)."""
    sets = [S & universe for S in sets if S & universe]
    if not universe:
        return 0
    if not sets or (universe & ~_union(sets)):
        raise InvalidParameters("sets do not cover the universe")
    best = _greedy_cover(sets, universe)
    lower = _lp_bound(sets, universe)
    if lower >= best:
        return best
    largest = max(popcount(S) for S in sets)
    containing = {v: [S for S in sets if (S >> v) & 1] for v in bits(universe)}

    def search(left: int, depth: int) -> None:
        nonlocal best
        if not left:
            best = min(best, depth)
            return
        if depth + ceil(popcount(left) / largest) >= best:
            return
        v = min(bits(left), key=lambda u: len(containing[u]))
        for S in sorted(containing[v], key=lambda x: -popcount(x & left)):
            search(left & ~S, depth + 1)
            if best <= lower:
                return

    search(universe, 0)
    return best


def _union(sets: Iterable[int]) -> int:
    u = 0
    for S in sets:
        u |= S
    return u


def chromatic_number_setcover(K: SimplicialComplex, s: int) -> int:
    """``χ_s(K)`` as the minimum number of maximal ``s``-independent sets covering ``V(K)``."""
    return min_set_cover(maximal_independent_sets(K, s), K.vertex_mask)
