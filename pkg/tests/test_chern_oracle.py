import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from brute import random_weights
from contact_curves.census import ColoredTree, enumerate_graphs
from contact_curves.chern_oracle import (
    _cramer_last,
    interpolating_polynomial,
    cramer_coefficient,
    determinant,
    edge_character,
    faulhaber_polynomial,
    faulhaber_sum,
    incidence_via_cramer,
    poly_eval,
    tree_character,
    vandermonde_system,
)
from contact_curves.classes import incidence_class


def test_edge_character_examples():
    w = random_weights(3, 1)
    li, lj = w[0], w[1]
    assert edge_character(1, 0, 1, 1, 1, w) == li + lj
    assert edge_character(1, 0, 1, 2, 0, w) == 3
    assert edge_character(2, 0, 1, 1, 1, w) == Fraction(3, 2) * (li + lj)


def test_edge_character_rejects_loop():
    with pytest.raises(ValueError):
        edge_character(1, 2, 2, 1, 1, [1, 2, 3])


def test_tree_character_examples():
    w = random_weights(3, 2)
    e = ColoredTree((0, 1), ((0, 1, 1),), 3)
    assert tree_character(e, 2, 3, w) == edge_character(1, 0, 1, 2, 3, w)
    p = ColoredTree((0, 2, 3), ((0, 1, 1), (1, 2, 1)), 3)
    assert tree_character(p, 1, 1, w) == w[0] + w[2] + w[3]
    star = ColoredTree((0, 1, 2, 3), ((0, 1, 1), (0, 2, 1), (0, 3, 1)), 3)
    assert tree_character(star, 1, 1, w) == sum(w[0] + w[k] for k in (1, 2, 3)) - 2 * w[0]


def test_cramer_examples():
    w = random_weights(3, 3)
    e1 = ColoredTree((0, 1), ((0, 1, 1),), 3)
    assert incidence_via_cramer(e1, 1, w) == w[0] + w[1]
    e3 = ColoredTree((2, 3), ((0, 1, 3),), 3)
    assert incidence_via_cramer(e3, 1, w) == 3 * (w[2] + w[3])


def test_determinant():
    assert determinant([[2, 0], [0, 3]]) == 6
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[1, 2], [2, 4]]) == 0
    # Vandermonde-type: prod a * prod_{a<b} (b - a)
    for r in range(5):
        n = r + 1
        expected = math.factorial(n) * math.prod(b - a for a in range(1, n + 1) for b in range(a + 1, n + 1))
        assert determinant(vandermonde_system(r)) == expected


@pytest.mark.parametrize("N,d", [(N, d) for N in (2, 3, 4, 5) for d in (1, 2, 3)])
def test_oracle_equivalence(N, d):
    for seed in (1, 2):
        w = random_weights(N, 1000 * N + 10 * d + seed)
        for g in enumerate_graphs(N, d):
            for r in range(1, min(4, N - 1) + 1):
                assert incidence_via_cramer(g.tree, r, w) == incidence_class(g.tree, r, w)


def test_vertex_term_insensitivity():
    rng = random.Random(4)
    w = random_weights(5, 4)
    for g in enumerate_graphs(5, 2)[::7]:
        for r in range(1, 5):
            rhs = [tree_character(g.tree, a, r, w) for a in range(1, r + 2)]
            base = _cramer_last(rhs)
            for k in range(1, r + 1):
                delta = Fraction(rng.randint(-999, 999), rng.randint(1, 99))
                assert _cramer_last([x + delta * a**k for a, x in enumerate(rhs, start=1)]) == base
            # the top column does matter
            assert _cramer_last([x + a ** (r + 1) for a, x in enumerate(rhs, start=1)]) == base + 1


def test_faulhaber_examples():
    assert faulhaber_sum(1, 3) == 6
    assert faulhaber_sum(0, 5) == 5
    assert faulhaber_sum(2, 4) == 30


@pytest.mark.parametrize("q", range(8))
def test_faulhaber_polynomial(q):
    poly = faulhaber_polynomial(q)
    assert len(poly) == q + 2
    assert poly[-1] == Fraction(1, q + 1)
    assert poly[0] == 0
    for m in range(20):
        assert poly_eval(poly, m) == faulhaber_sum(q, m)


def test_faulhaber_known_closed_forms():
    assert faulhaber_polynomial(1) == (0, Fraction(1, 2), Fraction(1, 2))
    assert faulhaber_polynomial(2) == (0, Fraction(1, 6), Fraction(1, 2), Fraction(1, 3))


def _binomial_power_sum(r, t, m):
    return math.comb(r, t) * sum((m - k) ** t * k ** (r - t) for k in range(m + 1))


@pytest.mark.parametrize("r", range(1, 6))
def test_interpolating_polynomial(r):
    for t in range(r + 1):
        p = interpolating_polynomial(r, t)
        assert len(p) == r + 2
        assert p[0] == 0
        assert p[-1] == Fraction(1, r + 1)
        for d in range(1, 5):
            for a in range(1, r + 2):
                assert poly_eval(p, a * d) == _binomial_power_sum(r, t, a * d)


@pytest.mark.parametrize("r", range(1, 6))
def test_interpolating_polynomial_at_top_is_power_sum(r):
    # reversing the summation turns the t = r case into S^r itself
    assert interpolating_polynomial(r, r) == faulhaber_polynomial(r)


def test_interpolating_polynomial_domain():
    with pytest.raises(ValueError):
        interpolating_polynomial(2, 3)


@pytest.mark.parametrize("r", range(1, 6))
def test_cramer_coefficient_is_degree(r):
    for t in range(r + 1):
        for d in range(1, 5):
            assert cramer_coefficient(r, t, d) == d


@st.composite
def trees(draw, N=5):
    nv = draw(st.integers(2, 6))
    labels = [draw(st.integers(0, N))]
    edges = []
    for v in range(1, nv):
        p = draw(st.integers(0, v - 1))
        labels.append(draw(st.sampled_from([q for q in range(N + 1) if q != labels[p]])))
        edges.append((p, v, draw(st.integers(1, 3))))
    return ColoredTree(tuple(labels), tuple(edges), N)


@settings(max_examples=60, deadline=None)
@given(trees(), st.integers(1, 4), st.integers(0, 10**6))
def test_oracle_equivalence_random_trees(t, r, seed):
    w = random_weights(t.N, seed)
    assert incidence_via_cramer(t, r, w) == incidence_class(t, r, w)
