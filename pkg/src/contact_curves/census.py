"""Torus-fixed graphs of the space of genus-0 stable maps to P^N.

A fixed stable map of degree ``d`` is recorded as a tree whose vertices
carry a fixed-point label in ``0..N`` and whose edges carry a covering
degree.  :func:`enumerate_graphs` lists one representative per
isomorphism class together with its automorphism order.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

__all__ = [
    "ColoredTree",
    "GraphClass",
    "automorphism_order",
    "canonical_code",
    "compositions",
    "enumerate_graphs",
    "tree_shapes",
]


@dataclass(frozen=True)
class ColoredTree:
    """A tree with vertex labels in ``0..N`` and positive edge degrees.

    ``edges`` holds ``(u, v, degree)`` triples indexing into ``labels``.
    """

    labels: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    N: int

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        object.__setattr__(
            self, "edges", tuple((int(u), int(v), int(d)) for u, v, d in self.edges)
        )
        self.validate()

    def validate(self) -> None:
        nv = len(self.labels)
        if nv == 0:
            raise ValueError("a tree needs at least one vertex")
        if len(self.edges) != nv - 1:
            raise ValueError(f"{len(self.edges)} edges on {nv} vertices is not a tree")
        for q in self.labels:
            if not 0 <= q <= self.N:
                raise ValueError(f"label {q} outside 0..{self.N}")
        seen = set()
        for u, v, d in self.edges:
            if not (0 <= u < nv and 0 <= v < nv) or u == v:
                raise ValueError(f"bad edge ({u}, {v})")
            if d < 1:
                raise ValueError(f"edge degree must be >= 1, got {d}")
            if self.labels[u] == self.labels[v]:
                raise ValueError(f"adjacent vertices {u}, {v} share label {self.labels[u]}")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"repeated edge ({u}, {v})")
            seen.add(key)
        # connectivity
        reached = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y, _ in self.adjacency[x]:
                if y not in reached:
                    reached.add(y)
                    stack.append(y)
        if len(reached) != nv:
            raise ValueError("graph is not connected")

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        adj: list[list[tuple[int, int]]] = [[] for _ in self.labels]
        for u, v, d in self.edges:
            adj[u].append((v, d))
            adj[v].append((u, d))
        return tuple(tuple(a) for a in adj)

    @property
    def degree(self) -> int:
        return sum(d for _, _, d in self.edges)

    def valence(self, v: int) -> int:
        return len(self.adjacency[v])

    def relabel(self, perm: Sequence[int]) -> "ColoredTree":
        """Apply a permutation of the fixed points ``q -> perm[q]``."""
        return ColoredTree(tuple(perm[q] for q in self.labels), self.edges, self.N)


@dataclass(frozen=True)
class GraphClass:
    tree: ColoredTree
    aut_order: int
    code: str

    @property
    def a_gamma(self) -> int:
        return self.aut_order * math.prod(d for _, _, d in self.tree.edges)


def _centroids(adj) -> list[int]:
    n = len(adj)
    if n == 1:
        return [0]
    order, parent = [0], {0: -1}
    for x in order:
        for y, _ in adj[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
    size = [1] * n
    for x in reversed(order[1:]):
        size[parent[x]] += size[x]
    best, out = n, []
    for x in range(n):
        heaviest = n - size[x]
        for y, _ in adj[x]:
            if y != parent[x]:
                heaviest = max(heaviest, size[y])
        if heaviest < best:
            best, out = heaviest, [x]
        elif heaviest == best:
            out.append(x)
    return out


def _rooted(labels, adj, root: int, parent: int) -> tuple[str, int]:
    """Canonical string and automorphism order of the subtree at ``root``."""
    parts = []
    aut = 1
    for child, d in adj[root]:
        if child == parent:
            continue
        code, a = _rooted(labels, adj, child, root)
        parts.append(f"{d}:{code}")
        aut *= a
    parts.sort()
    for _, group in itertools.groupby(parts):
        aut *= math.factorial(len(list(group)))
    return f"{labels[root]}[{','.join(parts)}]", aut


def _canonical(tree: ColoredTree) -> tuple[str, int, int]:
    """Return (code, automorphism order, root vertex)."""
    labels, adj = tree.labels, tree.adjacency
    cents = _centroids(adj)
    if len(cents) == 1:
        code, aut = _rooted(labels, adj, cents[0], -1)
        return code, aut, cents[0]
    c1, c2 = cents
    half1, _ = _rooted(labels, adj, c1, c2)
    half2, _ = _rooted(labels, adj, c2, c1)
    (code, aut, root) = min(
        (*_rooted(labels, adj, c, -1), c) for c in (c1, c2)
    )
    if half1 == half2:  # needs equal labels on adjacent centroids; unreachable for valid trees
        aut *= 2
    return code, aut, root


def canonical_code(tree: ColoredTree) -> str:
    """String that is equal for two trees iff they are isomorphic."""
    return _canonical(tree)[0]


def automorphism_order(tree: ColoredTree) -> int:
    """Number of vertex permutations preserving adjacency, labels and degrees."""
    return _canonical(tree)[1]


def _normal_form(tree: ColoredTree, root: int) -> ColoredTree:
    # preorder numbering from the canonical root, children visited in code order
    labels, adj = tree.labels, tree.adjacency
    new_labels: list[int] = []
    new_edges: list[tuple[int, int, int]] = []

    def visit(x: int, parent: int, parent_new: int, d: int) -> None:
        me = len(new_labels)
        new_labels.append(labels[x])
        if parent_new >= 0:
            new_edges.append((parent_new, me, d))
        kids = [
            (f"{dy}:{_rooted(labels, adj, y, x)[0]}", y, dy)
            for y, dy in adj[x]
            if y != parent
        ]
        for _, y, dy in sorted(kids):
            visit(y, x, me, dy)

    visit(root, -1, -1, 0)
    return ColoredTree(tuple(new_labels), tuple(new_edges), tree.N)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0, *cuts, total)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def tree_shapes(num_edges: int) -> list[tuple[tuple[int, int], ...]]:
    """Unlabeled trees with ``num_edges`` edges, one per isomorphism class.

    Built by attaching leaves to every vertex of the smaller shapes and
    keeping the first tree seen for each canonical code.
    """
    shapes: dict[str, tuple[tuple[int, int], ...]] = {"0[]": ()}
    for k in range(num_edges):
        grown: dict[str, tuple[tuple[int, int], ...]] = {}
        for edges in shapes.values():
            for v in range(k + 1):
                new = edges + ((v, k + 1),)
                code = _shape_code(new, k + 2)
                grown.setdefault(code, new)
        shapes = grown
    return [shapes[c] for c in sorted(shapes)]


def _shape_code(edges, nv: int) -> str:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
    for u, v in edges:
        adj[u].append((v, 1))
        adj[v].append((u, 1))
    cents = _centroids(adj)
    return min(_rooted([0] * nv, adj, c, -1)[0] for c in cents)


def _colorings(adj, nv: int, N: int) -> Iterator[tuple[int, ...]]:
    # vertex order where every vertex after the first has an earlier neighbour
    order, parent = [0], {0: -1}
    for x in order:
        for y, _ in adj[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
    colors = [0] * nv

    def rec(pos: int):
        if pos == nv:
            yield tuple(colors)
            return
        x = order[pos]
        forbidden = colors[parent[x]] if pos else -1
        for q in range(N + 1):
            if q != forbidden:
                colors[x] = q
                yield from rec(pos + 1)

    yield from rec(0)


def enumerate_graphs(N: int, d: int) -> list[GraphClass]:
    """All fixed-locus graphs of degree ``d`` with labels in ``0..N``.

    One representative per isomorphism class, sorted by canonical code.

    >>> len(enumerate_graphs(3, 1)), len(enumerate_graphs(3, 2))
    (6, 30)
    """
    if N < 1 or d < 1:
        raise ValueError(f"need N >= 1 and d >= 1, got N={N}, d={d}")
    found: dict[str, GraphClass] = {}
    for k in range(1, d + 1):
        for shape in tree_shapes(k):
            adj: list[list[tuple[int, int]]] = [[] for _ in range(k + 1)]
            for u, v in shape:
                adj[u].append((v, 1))
                adj[v].append((u, 1))
            for degs in compositions(d, k):
                edges = tuple((u, v, dd) for (u, v), dd in zip(shape, degs))
                for labels in _colorings(adj, k + 1, N):
                    tree = ColoredTree(labels, edges, N)
                    code, aut, root = _canonical(tree)
                    if code not in found:
                        found[code] = GraphClass(_normal_form(tree, root), aut, code)
    return [found[c] for c in sorted(found)]
