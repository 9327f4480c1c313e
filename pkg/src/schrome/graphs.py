"""Chromatic polynomials and chromatic numbers of simple graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .complex import bits, popcount
from .errors import InvalidInput
from .polynomial import IntPolynomial, _falling_coeffs


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        clean = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidInput(f"loop at node {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidInput(f"edge {(u, v)} outside 0..{self.n - 1}")
            clean.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        return cls(n, frozenset(edges))

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        return cls(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))

    def adjacency(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)


def _pmul(a: list[int], b: tuple[int, ...] | list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _padd(a, b, sign: int = 1) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + sign * (b[i] if i < len(b) else 0) for i in range(n)]


def _remove(adj: tuple[int, ...], v: int) -> tuple[int, ...]:
    """Delete node ``v`` and renumber the nodes above it."""
    low = (1 << v) - 1
    out = []
    for i, a in enumerate(adj):
        if i != v:
            out.append((a & low) | ((a >> (v + 1)) << v))
    return tuple(out)


def _components(adj: tuple[int, ...]) -> list[int]:
    rest = (1 << len(adj)) - 1
    comps = []
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def _restrict(adj: tuple[int, ...], keep: int) -> tuple[int, ...]:
    idx = bits(keep)
    pos = {v: i for i, v in enumerate(idx)}
    return tuple(sum(1 << pos[u] for u in bits(adj[v] & keep)) for v in idx)


@lru_cache(maxsize=200_000)
def _chrom(adj: tuple[int, ...]) -> tuple[int, ...]:
    n = len(adj)
    if n == 0:
        return (1,)
    degs = [popcount(a) for a in adj]
    m2 = sum(degs)
    if m2 == 0:
        return (0,) * n + (1,)
    if m2 == n * (n - 1):
        return _falling_coeffs(n)
    comps = _components(adj)
    if len(comps) > 1:
        out = [1]
        for c in comps:
            out = _pmul(out, _chrom(_restrict(adj, c)))
        return tuple(out)
    # simplicial vertex: its neighbours form a clique, so P(G) = (r - deg) P(G - v);
    # this covers leaves, hence trees
    for v in sorted(range(n), key=degs.__getitem__):
        nb = adj[v]
        if all((adj[u] | (1 << u)) & nb == nb for u in bits(nb)):
            return tuple(_pmul([-degs[v], 1], _chrom(_remove(adj, v))))
    if m2 > n * (n - 1) // 2:
        # dense: P(G) = P(G + uv) + P(G / uv) for a non-edge uv
        for u in range(n):
            missing = ((1 << n) - 1) & ~adj[u] & ~(1 << u)
            if missing:
                v = (missing & -missing).bit_length() - 1
                break
        added = list(adj)
        added[u] |= 1 << v
        added[v] |= 1 << u
        return tuple(_padd(_chrom(tuple(added)), _chrom(_contract(adj, u, v))))
    # sparse: P(G) = P(G - uv) - P(G / uv)
    u = max(range(n), key=degs.__getitem__)
    v = (adj[u] & -adj[u]).bit_length() - 1
    deleted = list(adj)
    deleted[u] &= ~(1 << v)
    deleted[v] &= ~(1 << u)
    return tuple(_padd(_chrom(tuple(deleted)), _chrom(_contract(adj, u, v)), -1))


def _contract(adj: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    merged = list(adj)
    merged[u] = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
    for w in bits(adj[v]):
        if w != u:
            merged[w] |= 1 << u
    return _remove(tuple(merged), v)


def chromatic_polynomial_graph(G: SimpleGraph) -> IntPolynomial:
    """Exact chromatic polynomial by deletion–contraction."""
    return IntPolynomial(_chrom(G.adjacency()))


def chromatic_number_graph(G: SimpleGraph) -> int:
    """Least ``r >= 1`` with a proper ``r``-coloring (0 for the empty graph)."""
    if G.n == 0:
        return 0
    p = chromatic_polynomial_graph(G)
    r = 1
    while p(r) <= 0:
        r += 1
    return r
