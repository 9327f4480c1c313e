"""s-chromatic polynomials, chromatic numbers and chromatic tables.

Three independent routes produce ``χ(K, r, s)``:

* ``partition``: sum of graph chromatic polynomials over block-connected
  ``s``-independent partitions;
* ``lattice``: Möbius function of the ``s``-chromatic lattice;
* ``stirling``: simplicial Stirling numbers in the falling-factorial basis.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, NamedTuple, Sequence

from .complex import SimplicialComplex, full_simplex
from .errors import InvalidFamily, InvalidInput, InvalidParameters, VerificationError
from .graphs import chromatic_polynomial_graph
from .lattice import chrom_poly_via_lattice
from .partitions import (
    _blocks_containing_low,
    chromatic_number_setcover,
    dependence_table,
    enumerate_bcp,
    partition_graph,
    stirling2,
    stirling_row,
    stirling_simplex,
)
from .polynomial import FallingFactorialForm, IntPolynomial

log = logging.getLogger(__name__)

METHODS = ("stirling", "partition", "lattice")


def falling_factorial_form(K: SimplicialComplex, s: int) -> FallingFactorialForm:
    """``{i: S(K, i, s)}`` over the nonzero range ``χ_s(K) <= i <= m(K)``."""
    return FallingFactorialForm(dict(enumerate(stirling_row(K, s))))


def chrom_poly(K: SimplicialComplex, s: int, method: str = "stirling") -> IntPolynomial:
    if s < 1:
        raise InvalidParameters("s must be at least 1")
    if method == "stirling":
        return falling_factorial_form(K, s).to_power_basis()
    if method == "partition":
        total = IntPolynomial()
        for P in enumerate_bcp(K, s):
            total = total + chromatic_polynomial_graph(partition_graph(K, P))
        return total
    if method == "lattice":
        return chrom_poly_via_lattice(K, s)
    raise InvalidParameters(f"unknown method {method!r}; choose from {METHODS}")


def chrom_poly_all(K: SimplicialComplex, s: int, methods: Sequence[str] = METHODS) -> IntPolynomial:
    """Run several routes and insist that they agree."""
    polys = {m: chrom_poly(K, s, m) for m in methods}
    first = next(iter(polys.values()))
    if any(p != first for p in polys.values()):
        detail = "; ".join(f"{m}: {p}" for m, p in polys.items())
        raise VerificationError(f"chromatic polynomial routes disagree for s={s}: {detail}")
    return first


def chromatic_number(K: SimplicialComplex, s: int) -> int:
    """``χ_s(K)`` from the falling-factorial support, the set cover and polynomial evaluation."""
    by_support = falling_factorial_form(K, s).min_index
    by_cover = chromatic_number_setcover(K, s)
    poly = chrom_poly(K, s)
    by_eval = next(r for r in range(1, K.m + 1) if poly(r) > 0)
    if not by_support == by_cover == by_eval:
        raise VerificationError(
            f"chromatic number routes disagree: support {by_support}, set cover {by_cover}, evaluation {by_eval}"
        )
    return by_support


@dataclass(frozen=True)
class ChromaticTable:
    """``S(K, r, s)`` in row ``s`` and column ``r`` (``r = 1..m``)."""

    m: int
    dim: int
    rows: dict[int, tuple[int, ...]]
    stirling_rows: frozenset[int] = field(default_factory=frozenset)

    def entry(self, s: int, r: int) -> int:
        return self.rows[s][r - 1]

    def matrix(self) -> list[list[int]]:
        return [list(self.rows[s]) for s in sorted(self.rows)]

    def row_polys(self) -> dict[int, IntPolynomial]:
        return {
            s: FallingFactorialForm({r + 1: c for r, c in enumerate(row)}).to_power_basis()
            for s, row in self.rows.items()
        }


def _row_task(args):
    K, s = args
    return s, stirling_row(K, s)[1:]


def chromatic_table(K: SimplicialComplex, max_s: int | None = None, threads: int = 1) -> ChromaticTable:
    """Rows ``s = 1..dim(K)`` (or ``..max_s``); rows past ``dim(K)`` are plain Stirling rows, flagged."""
    if K.dim < 1 and max_s is None:
        raise InvalidParameters("chromatic table needs dim(K) >= 1")
    top = K.dim if max_s is None else max_s
    work = [(K, s) for s in range(1, top + 1)]
    if threads > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = dict(pool.map(_row_task, work))
    else:
        rows = dict(map(_row_task, work))
    flagged = frozenset(s for s in rows if s > K.dim)
    return ChromaticTable(K.m, K.dim, rows, flagged)


def table_values(K: SimplicialComplex, table: ChromaticTable | None = None) -> list[list[int]]:
    """``χ(K, j, s)`` for rows ``s`` and ``j = 1..m``: the table times the matrix ``([j]_i)``."""
    table = table or chromatic_table(K)
    m = table.m
    ff = [[_falling(j, i) for j in range(1, m + 1)] for i in range(1, m + 1)]
    return [
        [sum(row[i] * ff[i][j] for i in range(m)) for j in range(m)]
        for row in table.matrix()
    ]


def _falling(j: int, i: int) -> int:
    out = 1
    for k in range(i):
        out *= j - k
    return out


def f_vector_from_table(table: ChromaticTable, m: int | None = None) -> tuple[int, ...]:
    """``(f_0, f_1, ..., f_dim)`` with ``f_s = S(m, m-s) - S(K, m-s, s)``."""
    m = table.m if m is None else m
    return (m,) + tuple(stirling2(m, m - s) - table.entry(s, m - s) for s in range(1, table.dim + 1))


@dataclass(frozen=True)
class SubcomplexFamily:
    """Connected subcomplexes of ``K`` given by their vertex sets (bitmasks)."""

    members: tuple[int, ...]

    @classmethod
    def of(cls, K: SimplicialComplex, members: Iterable) -> SubcomplexFamily:
        """Members may be subcomplexes or vertex-label collections (taken as induced subcomplexes)."""
        masks = []
        for M in members:
            if isinstance(M, SimplicialComplex):
                if not M.is_connected():
                    raise InvalidFamily(f"member {M.facet_labels()} is not connected")
                masks.append(K.mask(M.labels))
            else:
                mask = K.mask(M)
                if not mask or not K.is_connected_set(mask):
                    raise InvalidFamily(f"member {sorted(M)} is not connected")
                masks.append(mask)
        return cls(tuple(masks))

    @classmethod
    def of_faces(cls, K: SimplicialComplex, s: int) -> SubcomplexFamily:
        return cls(K.face_masks(s))


def generalized_chrom_poly(K: SimplicialComplex, family: SubcomplexFamily | Iterable) -> IntPolynomial:
    """Colorings in which no family member is monochrome, by the partition route."""
    if not isinstance(family, SubcomplexFamily):
        family = SubcomplexFamily.of(K, family)
    members = family.members

    def ok(B: int) -> bool:
        return K.is_connected_set(B) and not any(M & B == M for M in members)

    def rec(U: int, acc: list[int]):
        if not U:
            yield tuple(acc)
            return
        for B in _blocks_containing_low(U, ok):
            acc.append(B)
            yield from rec(U & ~B, acc)
            acc.pop()

    total = IntPolynomial()
    for P in rec(K.vertex_mask, []):
        total = total + chromatic_polynomial_graph(partition_graph(K, P))
    return total


def union_wedge_polys(poly_k: IntPolynomial, poly_l: IntPolynomial, op: str) -> IntPolynomial:
    """``χ`` of a disjoint union (product) or one-point union (product over ``r``)."""
    if op == "disjoint":
        return poly_k * poly_l
    if op == "wedge":
        if poly_k.coeff(0) or poly_l.coeff(0):
            raise InvalidInput("wedge needs polynomials divisible by r")
        return (poly_k * poly_l).divide_by_r()
    raise InvalidParameters(f"unknown op {op!r}")


class LogConcavity(NamedTuple):
    status: str  # "strict", "weak" or "fails"
    index: int | None = None  # position of the first violation / non-strict spot


def logconcavity_check(seq: Sequence[int]) -> LogConcavity:
    """Classify ``seq`` over its support (leading and trailing zeros dropped)."""
    if any(a < 0 for a in seq):
        raise InvalidInput("log-concavity is checked for non-negative sequences")
    nz = [i for i, a in enumerate(seq) if a]
    if not nz:
        return LogConcavity("strict")
    lo, hi = nz[0], nz[-1]
    weak_at = None
    for i in range(lo + 1, hi):
        lhs, rhs = seq[i - 1] * seq[i + 1], seq[i] * seq[i]
        if lhs > rhs:
            return LogConcavity("fails", i)
        if lhs == rhs and weak_at is None:
            weak_at = i
    return LogConcavity("strict") if weak_at is None else LogConcavity("weak", weak_at)


def simplex_chrom_poly(m: int, s: int) -> IntPolynomial:
    """``χ(D[m], r, s) = sum_i S(m, i, s) [r]_i``."""
    return FallingFactorialForm({i: stirling_simplex(m, i, s) for i in range(m + 1)}).to_power_basis()


def skeleton_uniqueness_check(K: SimplicialComplex, s: int) -> bool:
    """Does ``K`` share its ``s``-chromatic polynomial with the full simplex on its vertices?

    A match forces a complete ``s``-skeleton; that consequence is checked too.
    """
    same = chrom_poly(K, s) == simplex_chrom_poly(K.m, s)
    if same and len(K.face_masks(s)) != comb(K.m, s + 1):
        raise VerificationError(f"polynomials match D[{K.m}] but the {s}-skeleton is incomplete")
    return same


def leading_terms_ok(K: SimplicialComplex, s: int, poly: IntPolynomial | None = None) -> bool:
    """``χ = r^m - f_s r^{m-s} + ...`` with nothing in between."""
    poly = poly or chrom_poly(K, s)
    m = K.m
    f_s = len(K.face_masks(s))
    if poly.coeff(m) != 1 or poly.degree != m:
        return False
    if any(poly.coeff(m - k) for k in range(1, min(s, m + 1))):
        return False
    return s > m or poly.coeff(m - s) == -f_s or (f_s == 0 and poly.coeff(m - s) == 0)
