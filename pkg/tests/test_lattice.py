import random
from math import comb, factorial

import pytest

from schrome.complex import builtin, full_simplex, mask_of
from schrome.errors import DegenerateLattice, InvalidParameters, LatticeTooLarge
from schrome.lattice import (
    admissible_partitions,
    bms_euler,
    bms_euler_closed,
    bms_euler_direct,
    build_lattice,
    chrom_poly_via_lattice,
    closure,
    components_of_simplex_set,
    euler_sequence,
    has_closed_components,
    induced_partition,
    is_closed,
    mobius_weighted,
    mobius_weighted_via_stirling,
    monochrome_set_of_coloring,
    monochrome_set_of_partition,
    order_complex_euler,
    refines,
    simplex_set,
    stirling_via_lattice,
    support,
    weighted_lattice,
)
from schrome.oracle import brute_lattice, brute_mobius
from schrome.partitions import count_independent_partitions, stirling_row, stirling_simplex
from schrome.polynomial import IntPolynomial

MB = builtin("MB")
K_EX = builtin("K_EX")
SMALL_LATTICE = ["MB", "K_EX", "NU6_A", "NU6_B", "P2_6"]


def test_closure():
    D5 = full_simplex(5)
    assert closure(D5, [(1, 2, 3), (3, 4, 5)], 2) == frozenset(D5.face_masks(2))
    single = simplex_set(MB, [(1, 2, 4)])
    assert closure(MB, single, 2) == single and is_closed(MB, single, 2)
    assert closure(MB, [], 2) == frozenset()


def test_components_and_partition():
    D4 = full_simplex(4)
    assert len(components_of_simplex_set(simplex_set(D4, [(1, 2), (2, 4)]))) == 1
    assert len(components_of_simplex_set(simplex_set(D4, [(1, 2), (3, 4)]))) == 2
    assert len(induced_partition(MB, [])) == MB.m
    assert len(induced_partition(MB, MB.face_masks(2))) == 1


def test_lattice_sizes():
    L = build_lattice(K_EX, 2)
    assert len(L) == 8
    assert {L.simplex_set(i) for i in range(len(L))} == {
        frozenset(c) for c in _powerset(K_EX.face_masks(2))
    }
    assert len(build_lattice(MB, 2)) == 12


def _powerset(xs):
    xs = list(xs)
    for mask in range(1 << len(xs)):
        yield [x for i, x in enumerate(xs) if (mask >> i) & 1]


@pytest.mark.parametrize("m,s", [(m, s) for m in range(3, 8) for s in (1, 2, 3) if s < m])
def test_simplex_lattice_is_partition_lattice(m, s):
    L = build_lattice(full_simplex(m), s)
    blocks = {tuple(sorted(induced_partition(full_simplex(m), L.simplex_set(i)))) for i in range(len(L))}
    expected = {tuple(sorted(P)) for P in admissible_partitions([1] * m, s)}
    assert blocks == expected


@pytest.mark.parametrize("name", SMALL_LATTICE + ["MT7"])
def test_lattice_against_brute_force(name):
    K = builtin(name)
    for s in range(1, K.dim + 1):
        if len(K.face_masks(s)) > 16:
            continue
        L = build_lattice(K, s)
        brute = {frozenset(mask_of(f) for f in S) for S in brute_lattice(K, s)}
        assert {L.simplex_set(i) for i in range(len(L))} == brute


def test_degenerate_lattice():
    L = build_lattice(MB, 3)
    assert len(L) == 1
    assert chrom_poly_via_lattice(MB, 3) == IntPolynomial.monomial(5)
    with pytest.raises(DegenerateLattice):
        build_lattice(MB, 3, strict=True)
    with pytest.raises(InvalidParameters):
        build_lattice(MB, 0)


def test_lattice_guard():
    with pytest.raises(LatticeTooLarge):
        build_lattice(full_simplex(9), 1, limit=1000)


def test_block_count_identity(any_builtin):
    K = any_builtin
    for s in range(1, K.dim + 1):
        L = build_lattice(K, s)
        for i, e in enumerate(L.elements):
            S = L.simplex_set(i)
            comps = components_of_simplex_set(S)
            assert e.blocks == len(comps) + K.m - bin(support(S)).count("1")
            assert e.blocks == len(induced_partition(K, S))


@pytest.mark.parametrize("name", SMALL_LATTICE)
def test_meet_closure(name):
    K = builtin(name)
    rng = random.Random(5)
    for s in range(1, K.dim + 1):
        L = build_lattice(K, s)
        for _ in range(200):
            x, y = rng.randrange(len(L)), rng.randrange(len(L))
            inter = L.simplex_set(x) & L.simplex_set(y)
            assert has_closed_components(K, inter, s)
            assert L.simplex_set(L.meet(x, y)) == inter
            j = L.join(x, y)
            assert L.leq(x, j) and L.leq(y, j)


def test_mobius_values_mb():
    L = build_lattice(MB, 2)
    mu = L.mu_bottom
    for i, e in enumerate(L.elements):
        size = bin(e.faces).count("1")
        if size == 1:
            assert mu[i] == -1 and e.blocks == 3
        elif size == 2:
            assert mu[i] == 1 and e.blocks == 2
    assert mu[L.top] == -1
    assert L.mobius(0, 0) == 1
    assert L.mobius(L.top, 0) == 0


@pytest.mark.parametrize("name", SMALL_LATTICE)
def test_mobius_against_brute_force(name):
    K = builtin(name)
    for s in range(1, K.dim + 1):
        L = build_lattice(K, s)
        if len(L) > 200:
            continue
        mu = brute_mobius(range(len(L)), L.leq)
        for (x, y), v in mu.items():
            assert L.mobius(x, y) == v
        assert [mu[0, i] for i in range(len(L))] == L.mu_bottom


@pytest.mark.parametrize("name", SMALL_LATTICE)
def test_mobius_is_reduced_euler_characteristic(name):
    K = builtin(name)
    for s in range(1, K.dim + 1):
        L = build_lattice(K, s)
        if len(L) > 200 or len(L) < 2:
            continue
        inner = [i for i in range(len(L)) if i not in (0, L.top)]
        lt = lambda a, b: a != b and L.leq(a, b)
        assert L.mu_bottom[L.top] == order_complex_euler(inner, lt)


def test_lattice_route_and_degree_one_identity(any_builtin):
    K = any_builtin
    for s in range(1, K.dim + 1):
        L = build_lattice(K, s)
        row = stirling_row(K, s)
        euler = sum((-1) ** (i - 1) * factorial(i - 1) * row[i] for i in range(1, K.m + 1))
        assert L.mu_bottom[L.top] == euler
        poly = chrom_poly_via_lattice(K, s, L)
        assert poly.coeff(1) == euler
        for r in range(K.m + 1):
            assert stirling_via_lattice(K, r, s, L) == count_independent_partitions(K, r, s)


def test_stirling_via_lattice_examples():
    assert stirling_via_lattice(MB, 3, 2) == 20
    assert stirling_via_lattice(K_EX, 2, 2) == 15
    assert stirling_via_lattice(K_EX, 6, 2) == 1


def test_monochrome_sets_in_lattice(small_builtin):
    K = small_builtin
    rng = random.Random(2024)
    for s in range(1, K.dim + 1):
        L = build_lattice(K, s)
        assert monochrome_set_of_coloring(K, [0] * K.m, s) == frozenset(K.face_masks(s))
        for _ in range(1000):
            col = [rng.randrange(rng.randint(1, 4)) for _ in range(K.m)]
            M = monochrome_set_of_coloring(K, col, s)
            assert L.element_of(M) is not None
            P = [sum(1 << v for v in range(K.m) if col[v] == c) for c in set(col)]
            assert monochrome_set_of_partition(K, P, s) == M


def test_coloring_by_label():
    col = {1: "r", 2: "r", 3: "b", 4: "b", 5: "r", 6: "r"}
    assert monochrome_set_of_coloring(K_EX, col, 2) == frozenset()


def test_non_graded_simplex_lattice():
    L = build_lattice(full_simplex(6), 2)
    assert len(L) == 53
    assert L.maximal_chain_lengths() == {3, 4}
    for m in (3, 4, 5):
        assert len(build_lattice(full_simplex(m), 2).maximal_chain_lengths()) == 1


def test_mb_not_semimodular():
    L = build_lattice(MB, 2)
    a = L.element_of(simplex_set(MB, [(2, 3, 5)]))
    b = L.element_of(simplex_set(MB, [(1, 3, 4)]))
    assert L.meet(a, b) == L.bottom
    assert L.join(a, b) == L.top
    covers = L.covers()
    assert a in covers[L.bottom] and b in covers[L.bottom]
    assert L.top not in covers[a] and L.top not in covers[b]
    assert L.maximal_chain_lengths() == {3}


# weighted lattices


def test_weighted_examples():
    assert mobius_weighted([4, 1, 1], 2) == 1
    assert mobius_weighted([3, 3], 2) == -1
    assert mobius_weighted([1] * 6, 2) == 0
    for m in range(2, 9):
        assert mobius_weighted([1] * m, 1) == (-1) ** (m - 1) * factorial(m - 1)


def test_weighted_meet():
    W = weighted_lattice([1, 1, 1, 1], 2)
    x = (0b0111, 0b1000)
    y = (0b0001, 0b1110)
    assert W.meet(x, y) == (0b0001, 0b0010, 0b0100, 0b1000)
    for p in W.elements:
        for q in W.elements:
            z = W.meet(p, q)
            assert z in W.elements and refines(z, p) and refines(z, q)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_weighted_recursion_matches_explicit_lattice(s):
    rng = random.Random(s)
    for _ in range(40):
        m = rng.randint(1, 7)
        w = [rng.randint(1, 4) for _ in range(m)]
        if m > 1 and sum(w) <= s:
            continue
        W = weighted_lattice(w, s)
        explicit = W.mobius_bottom_top()
        assert mobius_weighted(w, s) == explicit
        assert mobius_weighted_via_stirling(w, s) == explicit
        if len(W.elements) <= 150:
            bm = brute_mobius(W.elements, refines)
            assert bm[_finest(W), _top(W)] == explicit


def _finest(W):
    return next(p for p in W.elements if len(p) == W.m)


def _top(W):
    return next(p for p in W.elements if len(p) == 1)


def test_weighted_invalid():
    with pytest.raises(InvalidParameters):
        mobius_weighted([1, 1], 2)
    with pytest.raises(InvalidParameters):
        mobius_weighted([0, 3], 2)


def test_euler_sequences_head():
    assert euler_sequence(2, 10) == [3, -6, 0, 90, -630, 2520, 0]
    assert euler_sequence(3, 10) == [4, -10, 20, -70, 560, -4200]


@pytest.mark.parametrize("s", range(1, 9))
def test_window_formula(s):
    seq = euler_sequence(s, 2 * s + 1)
    for m, v in zip(range(s + 2, 2 * s + 2), seq):
        assert v == (-1) ** (m - s) * comb(m - 1, s)


def test_euler_sequence_is_stirling_sum():
    for s in range(1, 5):
        for m, v in zip(range(s + 2, 11), euler_sequence(s, 10)):
            assert v == sum((-1) ** (i - 1) * factorial(i - 1) * stirling_simplex(m, i, s) for i in range(1, m + 1))


def test_euler_sequence_args():
    with pytest.raises(InvalidParameters):
        euler_sequence(3, 4)


# B(m, s)


def test_bms():
    for m in range(1, 9):
        assert bms_euler(m, 2) == m - 1
        for s in range(1, m + 2):
            assert bms_euler_closed(m, s) == bms_euler_direct(m, s)
    assert bms_euler(4, 3) == -3
    with pytest.raises(InvalidParameters):
        bms_euler(3, 5)


def test_bms_against_generic_order_complex():
    for m in range(1, 6):
        for s in range(1, m + 2):
            elems = [A for A in range(1, 1 << m) if bin(A).count("1") < s]
            lt = lambda a, b: a != b and a & b == a
            assert order_complex_euler(elems, lt) == bms_euler_closed(m, s)
