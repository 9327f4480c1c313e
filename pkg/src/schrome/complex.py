"""Finite simplicial complexes on labeled vertices.

Vertices are relabeled densely to ``0..m-1`` and every face is a bitmask over
those indices; the original labels are kept for input and output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Hashable, Iterable, Sequence

from .errors import EmptyComplex, InvalidFacet, InvalidParameters, UnknownComplex, UnknownVertex


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _sort_labels(labels: Iterable[Hashable]) -> list:
    labels = list(labels)
    try:
        return sorted(labels)
    except TypeError:
        return sorted(labels, key=lambda x: (type(x).__name__, str(x)))


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    kept: list[int] = []
    for f in sorted(set(masks), key=lambda x: -popcount(x)):
        if not any(f & g == f for g in kept):
            kept.append(f)
    return tuple(sorted(kept, key=bits))


@lru_cache(maxsize=4096)
def _face_masks(facets: tuple[int, ...], s: int) -> tuple[int, ...]:
    out = set()
    for f in facets:
        vs = bits(f)
        if len(vs) >= s + 1:
            for c in combinations(vs, s + 1):
                out.add(mask_of(c))
    return tuple(sorted(out, key=bits))


@dataclass(frozen=True)
class SimplicialComplex:
    """Immutable complex given by its facets (bitmasks over ``0..m-1``)."""

    labels: tuple
    facets: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.labels)

    num_vertices = m

    @cached_property
    def dim(self) -> int:
        return max(popcount(f) for f in self.facets) - 1

    @property
    def vertex_mask(self) -> int:
        return (1 << self.m) - 1

    @cached_property
    def _index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index_of(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            # file loaders produce ints; accept the string spelling too
            if isinstance(label, str) and label.lstrip("-").isdigit() and int(label) in self._index:
                return self._index[int(label)]
            raise UnknownVertex(f"vertex {label!r} not in complex") from None

    def mask(self, labels: Iterable) -> int:
        """Bitmask of a set of external labels."""
        return mask_of(self.index_of(v) for v in labels)

    def labels_of(self, mask: int) -> tuple:
        return tuple(self.labels[i] for i in bits(mask))

    def face_masks(self, s: int) -> tuple[int, ...]:
        """All ``s``-faces as bitmasks, lexicographic in vertex index."""
        if s < 0:
            raise InvalidParameters("dimension must be non-negative")
        return _face_masks(self.facets, s)

    def faces(self, s: int) -> list[tuple]:
        return [self.labels_of(f) for f in self.face_masks(s)]

    def f_vector(self) -> tuple[int, ...]:
        """Face counts ``(f_0, ..., f_dim)``; the empty face is not counted."""
        return tuple(len(self.face_masks(d)) for d in range(self.dim + 1))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        adj = [0] * self.m
        for e in self.face_masks(1):
            u, v = bits(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def components(self, subset: int) -> list[int]:
        """Vertex sets of the connected components of ``K ∩ D[subset]``."""
        adj = self.adjacency
        rest = subset
        out = []
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                new = adj[low.bit_length() - 1] & subset & ~comp
                comp |= new
                frontier |= new
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected_set(self, subset: int) -> bool:
        return len(self.components(subset)) <= 1

    def is_connected(self) -> bool:
        return self.is_connected_set(self.vertex_mask)

    def skeleton(self, s: int) -> SimplicialComplex:
        if s < 0:
            raise InvalidParameters("dimension must be non-negative")
        if s >= self.dim:
            return self
        low = [f for f in self.facets if popcount(f) <= s]
        return SimplicialComplex(self.labels, _maximal(list(self.face_masks(s)) + low))

    def induced(self, subset: Iterable) -> SimplicialComplex:
        """The full subcomplex on a set of vertex labels."""
        sub = self.mask(subset)
        if not sub:
            raise EmptyComplex("induced subcomplex on an empty vertex set")
        return self.induced_mask(sub)

    def induced_mask(self, sub: int) -> SimplicialComplex:
        keep = bits(sub)
        pos = {v: i for i, v in enumerate(keep)}
        new = [mask_of(pos[v] for v in bits(f & sub)) for f in self.facets if f & sub]
        return SimplicialComplex(tuple(self.labels[v] for v in keep), _maximal(new))

    def facet_labels(self) -> list[tuple]:
        return [self.labels_of(f) for f in self.facets]

    def __repr__(self) -> str:
        return f"SimplicialComplex(m={self.m}, dim={self.dim}, facets={self.facet_labels()})"


def from_facets(facets: Iterable[Iterable[Hashable]]) -> SimplicialComplex:
    """Build a complex from vertex sets; non-maximal and repeated sets are discarded."""
    sets = []
    for f in facets:
        f = set(f)
        if not f:
            raise InvalidFacet("empty facet")
        sets.append(f)
    if not sets:
        raise EmptyComplex("no facets given")
    labels = _sort_labels(set().union(*sets))
    index = {lab: i for i, lab in enumerate(labels)}
    masks = [mask_of(index[v] for v in f) for f in sets]
    return SimplicialComplex(tuple(labels), _maximal(masks))


def faces(K: SimplicialComplex, s: int) -> list[tuple]:
    return K.faces(s)


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    return K.f_vector()


def skeleton(K: SimplicialComplex, s: int) -> SimplicialComplex:
    return K.skeleton(s)


def induced(K: SimplicialComplex, subset: Iterable) -> SimplicialComplex:
    return K.induced(subset)


def full_simplex(m: int) -> SimplicialComplex:
    """``D[m]`` on vertices ``1..m``."""
    if m < 1:
        raise InvalidParameters("full simplex needs at least one vertex")
    return SimplicialComplex(tuple(range(1, m + 1)), ((1 << m) - 1,))


def _gale_facet(sigma: Sequence[int], m: int) -> bool:
    inside = set(sigma)
    outside = [v for v in range(1, m + 1) if v not in inside]
    for a, b in combinations(outside, 2):
        if sum(1 for v in sigma if a < v < b) % 2:
            return False
    return True


def cyclic_polytope_boundary(m: int, n: int) -> SimplicialComplex:
    """Boundary of the cyclic ``n``-polytope on ``m`` vertices via Gale's evenness condition."""
    if not (m > n >= 2):
        raise InvalidParameters(f"need m > n >= 2, got m={m}, n={n}")
    facets = [c for c in combinations(range(1, m + 1), n) if _gale_facet(c, m)]
    return from_facets(facets)


def disjoint_union(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """``K ⊔ L`` with vertices relabeled ``1..m(K)+m(L)`` (K first)."""
    shift = K.m
    facets = list(K.facets) + [f << shift for f in L.facets]
    return SimplicialComplex(tuple(range(1, K.m + L.m + 1)), _maximal(facets))


def wedge(K: SimplicialComplex, L: SimplicialComplex, vK=None, vL=None) -> SimplicialComplex:
    """One-point union identifying ``vK`` with ``vL`` (defaults: first vertices).

    The result is labeled ``1..m(K)+m(L)-1``: K's vertices first, then L's
    remaining vertices in order.
    """
    iK = 0 if vK is None else K.index_of(vK)
    iL = 0 if vL is None else L.index_of(vL)
    target = {}
    nxt = K.m
    for j in range(L.m):
        if j == iL:
            target[j] = iK
        else:
            target[j] = nxt
            nxt += 1
    facets = list(K.facets) + [mask_of(target[j] for j in bits(f)) for f in L.facets]
    return SimplicialComplex(tuple(range(1, nxt + 1)), _maximal(facets))


# Facet lists are frozen; docs/builtin_validation.md records the checks
# (f-vectors, target polynomials, BCP counts) they passed.
_BUILTINS: dict[str, list[tuple[int, ...]]] = {
    "MB": [(1, 2, 4), (2, 4, 5), (2, 3, 5), (1, 3, 5), (1, 3, 4)],
    "K_EX": [(1, 2, 3), (2, 3, 4), (4, 5, 6)],
    # the two complexes with identical chromatic tables: a pair of triangles glued
    # along an edge, wedged with a third triangle off / on that edge
    "NU6_A": [(1, 2, 3), (2, 3, 4), (4, 5, 6)],
    "NU6_B": [(1, 2, 4), (1, 3, 4), (4, 5, 6)],
    # Z/7-invariant 7-vertex torus: {i,i+1,i+3}, {i,i+2,i+3} mod 7
    "MT7": [
        (1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 7), (1, 5, 6), (1, 5, 7), (2, 3, 5),
        (2, 3, 7), (2, 4, 5), (2, 6, 7), (3, 4, 6), (3, 5, 6), (4, 5, 7), (4, 6, 7),
    ],
    # 6-vertex real projective plane (hemi-icosahedron)
    "P2_6": [
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
        (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
    ],
    # 3x3 grid torus, rows (1 2 3), (4 6 7), (5 8 9), every square cut by its
    # lower-left to upper-right diagonal
    "T2_9": [
        (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 9), (1, 4, 6), (1, 5, 9),
        (2, 3, 7), (2, 3, 8), (2, 5, 8), (2, 6, 7), (3, 4, 7), (3, 8, 9),
        (4, 5, 7), (4, 5, 8), (4, 6, 8), (5, 7, 9), (6, 7, 9), (6, 8, 9),
    ],
}

BUILTIN_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> SimplicialComplex:
    try:
        return from_facets(_BUILTINS[name])
    except KeyError:
        raise UnknownComplex(f"unknown builtin {name!r}; choose from {', '.join(_BUILTINS)}") from None


def _parse_label(tok: str):
    return int(tok) if tok.lstrip("-").isdigit() else tok


def parse_facets(text: str) -> list[list]:
    """Parse the plain (whitespace or comma separated, ``#`` comments) or JSON facet format."""
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        data = json.loads(text)
        facets = data["facets"] if isinstance(data, dict) else data
        return [list(f) for f in facets]
    facets = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].replace(",", " ").strip()
        if line:
            facets.append([_parse_label(t) for t in line.split()])
    return facets


def load_facets(path: str | Path) -> SimplicialComplex:
    return from_facets(parse_facets(Path(path).read_text()))


def dump_facets(K: SimplicialComplex, fmt: str = "plain") -> str:
    rows = K.facet_labels()
    if fmt == "json":
        return json.dumps({"facets": [list(r) for r in rows]})
    sep = "," if fmt == "csv" else " "
    return "".join(sep.join(str(v) for v in r) + "\n" for r in rows)


def is_neighborly(K: SimplicialComplex, k: int) -> bool:
    """True when every ``k``-subset of the vertices is a face."""
    return len(K.face_masks(k - 1)) == comb(K.m, k)
