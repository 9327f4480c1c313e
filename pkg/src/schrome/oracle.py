"""Brute-force references.

Deliberately naive: every function here enumerates its search space in full
and shares no code with the dynamic programs it is meant to check (beyond the
complex itself). Guards keep the enumeration small; set
``SCHROME_GUARD_OVERRIDE=1`` to lift them.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Hashable, Iterator, Sequence

from .complex import SimplicialComplex
from .errors import TooLarge, check_guard

MAX_COLORINGS = 10**9
MAX_PARTITION_VERTICES = 12
MAX_POSET = 5000
MAX_RECURRENCE_VERTICES = 10


def _faces(K: SimplicialComplex, s: int) -> list[tuple[int, ...]]:
    """``s``-faces as index tuples, straight from the facets."""
    out = set()
    for F in K.facets:
        idx = [i for i in range(K.m) if (F >> i) & 1]
        out.update(combinations(idx, s + 1))
    return sorted(out)


def brute_colorings(K: SimplicialComplex, r: int, s: int) -> int:
    """Number of maps ``V(K) -> [r]`` with no monochrome ``s``-simplex."""
    check_guard(r ** K.m <= MAX_COLORINGS, f"{r}^{K.m} colorings exceed the enumeration limit")
    faces = _faces(K, s)
    count = 0
    for col in product(range(r), repeat=K.m):
        if not any(len({col[v] for v in f}) == 1 for f in faces):
            count += 1
    return count


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    """All set partitions of ``items`` via restricted growth strings."""
    n = len(items)
    if n == 0:
        yield []
        return

    def grow(i: int, rgs: list[int], top: int):
        if i == n:
            blocks: list[list] = [[] for _ in range(top + 1)]
            for x, b in zip(items, rgs):
                blocks[b].append(x)
            yield blocks
            return
        for b in range(top + 2):
            rgs.append(b)
            yield from grow(i + 1, rgs, max(top, b))
            rgs.pop()

    rgs = [0]
    yield from grow(1, rgs, 0)


def _independent(block, faces_sets) -> bool:
    return not any(f <= block for f in faces_sets)


def _connected(K: SimplicialComplex, block: frozenset[int]) -> bool:
    """Graph search over facets restricted to ``block`` (not the library's adjacency)."""
    if not block:
        return False
    edges = {v: set() for v in block}
    for F in K.facets:
        inside = [v for v in block if (F >> v) & 1]
        for u in inside:
            edges[u].update(inside)
    start = next(iter(block))
    seen, todo = {start}, [start]
    while todo:
        u = todo.pop()
        for w in edges[u] - seen:
            seen.add(w)
            todo.append(w)
    return seen == set(block)


def brute_partitions(K: SimplicialComplex, r: int, s: int) -> int:
    """``S(K, r, s)`` by filtering every set partition of ``V(K)``."""
    check_guard(K.m <= MAX_PARTITION_VERTICES, f"Bell({K.m}) partitions exceed the enumeration limit")
    faces = [frozenset(f) for f in _faces(K, s)]
    return sum(
        1
        for P in set_partitions(list(range(K.m)))
        if len(P) == r and all(_independent(frozenset(b), faces) for b in P)
    )


def brute_bcp(K: SimplicialComplex, s: int) -> list[tuple[int, ...]]:
    """Block-connected ``s``-independent partitions, as sorted tuples of block masks."""
    check_guard(K.m <= MAX_PARTITION_VERTICES, f"Bell({K.m}) partitions exceed the enumeration limit")
    faces = [frozenset(f) for f in _faces(K, s)]
    out = []
    for P in set_partitions(list(range(K.m))):
        blocks = [frozenset(b) for b in P]
        if all(_independent(b, faces) and _connected(K, b) for b in blocks):
            out.append(tuple(sorted(sum(1 << v for v in b) for b in blocks)))
    return sorted(out)


def brute_mobius(
    elements: Sequence[Hashable], leq: Callable[[Hashable, Hashable], bool]
) -> dict[tuple[Hashable, Hashable], int]:
    """Every ``μ(x, y)`` with ``x <= y`` from ``μ(x,x) = 1`` and ``sum_{x<=z<=y} μ(x,z) = 0``."""
    n = len(elements)
    check_guard(n <= MAX_POSET, f"poset with {n} elements exceeds the limit")
    els = list(elements)
    up = {x: [y for y in els if leq(x, y)] for x in els}
    mu: dict[tuple[Hashable, Hashable], int] = {}
    for x in els:
        # process the upper set of x from the bottom: sort by size of the down-set inside it
        above = up[x]
        depth = {y: sum(1 for z in above if leq(z, y)) for y in above}
        for y in sorted(above, key=depth.__getitem__):
            if y == x:
                mu[x, y] = 1
            else:
                mu[x, y] = -sum(mu[x, z] for z in above if z != y and leq(z, y))
    return mu


def brute_lattice(K: SimplicialComplex, s: int, limit: int = 16) -> list[frozenset[tuple[int, ...]]]:
    """Every subset of ``F^s(K)`` whose components are closed simplex sets."""
    faces = _faces(K, s)
    check_guard(len(faces) <= limit, f"2^{len(faces)} simplex sets exceed the enumeration limit")
    face_sets = [frozenset(f) for f in faces]

    def components(chosen: list[frozenset[int]]) -> list[list[frozenset[int]]]:
        comps: list[list[frozenset[int]]] = []
        for f in chosen:
            touching = [c for c in comps if any(f & g for g in c)]
            merged = [f] + [g for c in touching for g in c]
            comps = [c for c in comps if c not in touching] + [merged]
        return comps

    out = []
    for mask in range(1 << len(faces)):
        chosen = [face_sets[i] for i in range(len(faces)) if (mask >> i) & 1]
        ok = True
        for comp in components(chosen):
            supp = frozenset().union(*comp)
            inside = sum(1 for f in face_sets if f <= supp)
            if inside != len(comp):
                ok = False
                break
        if ok:
            out.append(frozenset(faces[i] for i in range(len(faces)) if (mask >> i) & 1))
    return out


def brute_maximal_independent(K: SimplicialComplex, s: int) -> list[int]:
    """Inclusion-maximal ``s``-independent vertex sets by scanning all subsets."""
    check_guard(K.m <= 16, f"2^{K.m} vertex subsets exceed the enumeration limit")
    faces = [sum(1 << v for v in f) for f in _faces(K, s)]
    indep = [X for X in range(1 << K.m) if not any(f & X == f for f in faces)]
    iset = set(indep)
    return sorted(
        X for X in indep if not any((X | (1 << v)) in iset for v in range(K.m) if not (X >> v) & 1)
    )


def alt_stirling_recurrence(K: SimplicialComplex, r: int, s: int) -> int:
    """``S(K, r, s)`` by removing the first vertex ``v0``.

    Either ``v0`` is a block on its own (a partition of ``K - v0`` into
    ``r - 1`` blocks) or it joins a block ``B`` of a partition of ``K - v0``
    into ``r`` blocks, which is allowed iff ``B + v0`` stays independent.
    """
    check_guard(K.m <= MAX_RECURRENCE_VERTICES, f"{K.m} vertices exceed the recurrence limit")
    faces = [frozenset(f) for f in _faces(K, s)]

    @lru_cache(maxsize=None)
    def S(U: frozenset[int], r: int) -> int:
        if not U:
            return 1 if r == 0 else 0
        if r <= 0:
            return 0
        if r == 1:
            return 1 if _independent(U, faces) else 0
        v0 = min(U)
        rest = sorted(U - {v0})
        total = S(frozenset(rest), r - 1)
        for P in set_partitions(rest):
            if len(P) != r:
                continue
            blocks = [frozenset(b) for b in P]
            if all(_independent(b, faces) for b in blocks):
                total += sum(1 for b in blocks if _independent(b | {v0}, faces))
        return total

    return S(frozenset(range(K.m)), r)


__all__ = [
    "TooLarge",
    "alt_stirling_recurrence",
    "brute_bcp",
    "brute_colorings",
    "brute_lattice",
    "brute_maximal_independent",
    "brute_mobius",
    "brute_partitions",
    "set_partitions",
]
