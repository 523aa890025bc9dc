import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from brute import brute_canonical, brute_census
from contact_curves.census import (
    ColoredTree,
    automorphism_order,
    canonical_code,
    compositions,
    enumerate_graphs,
    tree_shapes,
)


def shape_of(g):
    t = g.tree
    degs = tuple(sorted(d for _, _, d in t.edges))
    return len(t.labels), degs


def test_g1_in_p3():
    classes = enumerate_graphs(3, 1)
    assert len(classes) == 6
    pairs = {tuple(sorted(g.tree.labels)) for g in classes}
    assert pairs == set(itertools.combinations(range(4), 2))
    assert all(g.a_gamma == 1 for g in classes)


def test_g2_in_p3_breakdown():
    classes = enumerate_graphs(3, 2)
    assert len(classes) == 30
    paths = [g for g in classes if len(g.tree.labels) == 3]
    distinct_ends = [g for g in paths if len(set(g.tree.labels)) == 3]
    repeated_ends = [g for g in paths if len(set(g.tree.labels)) == 2]
    double_edges = [g for g in classes if len(g.tree.labels) == 2]
    assert len(distinct_ends) == 12 and all(g.a_gamma == 1 for g in distinct_ends)
    assert len(repeated_ends) == 12 and all(g.a_gamma == 2 for g in repeated_ends)
    assert len(double_edges) == 6 and all(g.a_gamma == 2 for g in double_edges)


def test_single_class_on_p1():
    (g,) = enumerate_graphs(1, 1)
    assert sorted(g.tree.labels) == [0, 1]


@pytest.mark.parametrize("N,d", [(0, 1), (3, 0), (-1, 2)])
def test_rejects_bad_domain(N, d):
    with pytest.raises(ValueError):
        enumerate_graphs(N, d)


def test_automorphism_examples():
    path = ColoredTree((0, 1, 0), ((0, 1, 1), (1, 2, 1)), 3)
    assert automorphism_order(path) == 2
    edge = ColoredTree((0, 1), ((0, 1, 2),), 3)
    assert automorphism_order(edge) == 1
    star = ColoredTree((0, 1, 1, 1), ((0, 1, 1), (0, 2, 1), (0, 3, 1)), 3)
    assert automorphism_order(star) == 6


def test_degree_breaks_symmetry():
    path = ColoredTree((0, 1, 0), ((0, 1, 1), (1, 2, 2)), 3)
    assert automorphism_order(path) == 1


def test_bicentroid_swap():
    # 0-1-0-1 path, halves (0[1]) and (1[0]) are different -> no swap
    t = ColoredTree((0, 1, 0, 1), ((0, 1, 1), (1, 2, 1), (2, 3, 1)), 3)
    assert automorphism_order(t) == 1
    t = ColoredTree((0, 1, 2, 0), ((0, 1, 1), (1, 2, 1), (2, 3, 1)), 3)
    assert automorphism_order(t) == 1


def test_reversed_path_is_same_class():
    a = ColoredTree((2, 0, 1, 2), ((0, 1, 1), (1, 2, 1), (2, 3, 1)), 3)
    b = ColoredTree((2, 1, 0, 2), ((0, 1, 1), (1, 2, 1), (2, 3, 1)), 3)
    assert canonical_code(a) == canonical_code(b)
    assert automorphism_order(a) == 1


@pytest.mark.parametrize(
    "labels,edges",
    [
        ((0, 0), ((0, 1, 1),)),
        ((0, 1), ((0, 1, 0),)),
        ((0, 1, 2), ((0, 1, 1),)),
        ((0, 1, 2), ((0, 1, 1), (0, 1, 1))),
        ((0, 5), ((0, 1, 1),)),
    ],
)
def test_tree_invariants_enforced(labels, edges):
    with pytest.raises(ValueError):
        ColoredTree(labels, edges, 3)


@pytest.mark.parametrize("N,d", [(N, d) for N in (1, 2, 3) for d in (1, 2, 3)])
def test_matches_brute_force(N, d):
    classes = enumerate_graphs(N, d)
    expected, raw = brute_census(N, d)
    got = {}
    for g in classes:
        key = brute_canonical(g.tree.labels, g.tree.edges)
        assert key not in got, "two returned classes are isomorphic"
        got[key] = g.aut_order
    assert got == expected
    # orbit counting: labeled objects = sum |V|!/|Aut|
    assert sum(math.factorial(len(g.tree.labels)) // g.aut_order for g in classes) == raw


def test_aut_recomputed_from_representative():
    for g in enumerate_graphs(4, 3):
        assert automorphism_order(g.tree) == g.aut_order
        assert canonical_code(g.tree) == g.code
        assert g.a_gamma == g.aut_order * math.prod(d for _, _, d in g.tree.edges)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_monotone_in_N(d):
    sizes = [len(enumerate_graphs(N, d)) for N in range(1, 6)]
    assert sizes == sorted(sizes)


def test_deterministic_order():
    a = enumerate_graphs(5, 3)
    b = enumerate_graphs(5, 3)
    assert [g.code for g in a] == [g.code for g in b]
    assert [g.code for g in a] == sorted(g.code for g in a)
    assert [g.tree for g in a] == [g.tree for g in b]


def test_degree_sums():
    for g in enumerate_graphs(3, 4):
        assert g.tree.degree == 4


def test_tree_shape_counts():
    # unlabeled trees on 1..8 vertices
    assert [len(tree_shapes(k)) for k in range(8)] == [1, 1, 1, 2, 3, 6, 11, 23]


def test_compositions():
    assert list(compositions(3, 2)) == [(1, 2), (2, 1)]
    assert len(list(compositions(7, 3))) == math.comb(6, 2)
    assert list(compositions(2, 3)) == []


@st.composite
def colored_trees(draw, max_vertices=7, N=4):
    nv = draw(st.integers(2, max_vertices))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, nv)]
    labels = [draw(st.integers(0, N))]
    for v in range(1, nv):
        p = parents[v - 1]
        choices = [q for q in range(N + 1) if q != labels[p]]
        labels.append(draw(st.sampled_from(choices)))
    edges = [(parents[v - 1], v, draw(st.integers(1, 3))) for v in range(1, nv)]
    return ColoredTree(tuple(labels), tuple(edges), N)


def _shuffle(t, seed):
    perm = list(range(len(t.labels)))
    random.Random(seed).shuffle(perm)
    labels = [None] * len(perm)
    for v, q in enumerate(t.labels):
        labels[perm[v]] = q
    edges = [(perm[u], perm[v], d) if seed % 2 else (perm[v], perm[u], d) for u, v, d in t.edges]
    random.Random(seed + 1).shuffle(edges)
    return ColoredTree(tuple(labels), tuple(edges), t.N)


@settings(max_examples=200, deadline=None)
@given(colored_trees(), st.integers(0, 10**6))
def test_canonical_code_is_relabeling_invariant(t, seed):
    u = _shuffle(t, seed)
    assert canonical_code(u) == canonical_code(t)
    assert automorphism_order(u) == automorphism_order(t)


@settings(max_examples=60, deadline=None)
@given(colored_trees(max_vertices=6))
def test_aut_matches_permutation_count(t):
    from brute import brute_aut

    assert automorphism_order(t) == brute_aut(t.labels, t.edges)
