from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schrome.errors import InvalidInput
from schrome.graphs import SimpleGraph, chromatic_number_graph, chromatic_polynomial_graph
from schrome.polynomial import IntPolynomial

r = IntPolynomial.monomial(1)
one = IntPolynomial.constant(1)


def proper_colorings(G: SimpleGraph, k: int) -> int:
    return sum(
        1 for col in product(range(k), repeat=G.n) if all(col[u] != col[v] for u, v in G.edges)
    )


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return SimpleGraph.from_edges(n, chosen)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_against_brute_force(G):
    p = chromatic_polynomial_graph(G)
    for k in range(5):
        assert p(k) == proper_colorings(G, k)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_monic_and_sign_alternating(G):
    p = chromatic_polynomial_graph(G)
    assert p.degree == G.n and p.coeff(G.n) == 1
    for i in range(G.n + 1):
        c = p.coeff(i)
        assert c == 0 or (c > 0) == ((G.n - i) % 2 == 0)


def test_cliques_and_empty():
    assert chromatic_polynomial_graph(SimpleGraph.complete(3)) == IntPolynomial.falling_factorial(3)
    assert chromatic_polynomial_graph(SimpleGraph.complete(5)) == IntPolynomial((0, 24, -50, 35, -10, 1))
    assert chromatic_polynomial_graph(SimpleGraph.from_edges(4, [])) == IntPolynomial.monomial(4)
    assert chromatic_polynomial_graph(SimpleGraph.from_edges(0, [])) == one
    assert chromatic_number_graph(SimpleGraph.complete(5)) == 5
    assert chromatic_number_graph(SimpleGraph.from_edges(3, [])) == 1


def test_cycles():
    for n in range(3, 9):
        C = SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
        p = IntPolynomial((-1, 1))
        assert chromatic_polynomial_graph(C) == _pow(p, n) + p * (-1) ** n
        assert chromatic_number_graph(C) == (2 if n % 2 == 0 else 3)


def _pow(p, n):
    out = one
    for _ in range(n):
        out = out * p
    return out


def test_rejects_loops_and_range():
    with pytest.raises(InvalidInput):
        SimpleGraph.from_edges(2, [(0, 0)])
    with pytest.raises(InvalidInput):
        SimpleGraph.from_edges(2, [(0, 2)])
    G = SimpleGraph.from_edges(3, [(1, 0), (0, 1)])
    assert G.edges == frozenset({(0, 1)})
