"""Equivariant classes restricted to a torus-fixed graph.

All functions take the torus weights as a sequence indexed by fixed
point and return exact :class:`fractions.Fraction` values.  The weight
``lambdas[q]`` is the weight of O(-1) at the fixed point ``q``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .census import ColoredTree

__all__ = [
    "DegenerateWeightsError",
    "Flag",
    "WeightAssignment",
    "flags",
    "incidence_class",
    "normal_bundle_euler",
    "obstruction_euler",
]


class DegenerateWeightsError(ArithmeticError):
    """A factor vanished at the chosen weights; draw new weights."""


@dataclass(frozen=True)
class WeightAssignment:
    lambdas: tuple[Fraction, ...]

    def __post_init__(self):
        lam = tuple(Fraction(x) for x in self.lambdas)
        if len(set(lam)) != len(lam):
            raise ValueError("torus weights must be pairwise distinct")
        object.__setattr__(self, "lambdas", lam)

    def __len__(self) -> int:
        return len(self.lambdas)

    def __getitem__(self, q: int) -> Fraction:
        return self.lambdas[q]

    def scaled(self, c) -> "WeightAssignment":
        return WeightAssignment(tuple(c * x for x in self.lambdas))

    def permuted(self, perm: Sequence[int]) -> "WeightAssignment":
        """Weights ``w'`` with ``w'[perm[q]] = w[q]``."""
        out = [Fraction(0)] * len(self.lambdas)
        for q, x in enumerate(self.lambdas):
            out[perm[q]] = x
        return WeightAssignment(tuple(out))


def _lambdas(w) -> Sequence[Fraction]:
    return w.lambdas if isinstance(w, WeightAssignment) else [Fraction(x) for x in w]


@dataclass(frozen=True)
class Flag:
    vertex: int
    neighbour: int
    degree: int
    omega: Fraction


def flags(t: ColoredTree, w) -> list[Flag]:
    """Flags (vertex, incident edge) with ``omega = (lambda_v - lambda_u) / d_e``."""
    lam = _lambdas(w)
    out = []
    for u, v, d in t.edges:
        lu, lv = lam[t.labels[u]], lam[t.labels[v]]
        out.append(Flag(u, v, d, (lu - lv) / d))
        out.append(Flag(v, u, d, (lv - lu) / d))
    return out


def obstruction_euler(t: ColoredTree, w) -> Fraction:
    """Top equivariant Chern class of the contact obstruction bundle at ``t``."""
    lam = _lambdas(w)
    value = Fraction(1)
    for u, v, d in t.edges:
        li, lj = lam[t.labels[u]], lam[t.labels[v]]
        for alpha in range(1, 2 * d):
            f = alpha * li + (2 * d - alpha) * lj
            if f == 0:
                raise DegenerateWeightsError(f"obstruction factor vanished on edge ({u}, {v})")
            value *= f / d
    for v, q in enumerate(t.labels):
        val = t.valence(v)
        if val >= 2:
            if lam[q] == 0:
                raise DegenerateWeightsError(f"zero weight at vertex {v} of valence {val}")
            value *= (2 * lam[q]) ** (val - 1)
    return value


def incidence_class(t: ColoredTree, r: int, w) -> Fraction:
    """Class of maps meeting a codimension ``r + 1`` linear subspace.

    Sum over edges of ``d_e * (li^r + li^(r-1) lj + ... + lj^r)``.
    """
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    lam = _lambdas(w)
    total = Fraction(0)
    for u, v, d in t.edges:
        li, lj = lam[t.labels[u]], lam[t.labels[v]]
        total += d * sum(li**k * lj ** (r - k) for k in range(r + 1))
    return total


def _nonzero(x: Fraction, what: str) -> Fraction:
    if x == 0:
        raise DegenerateWeightsError(f"{what} vanished")
    return x


def normal_bundle_euler(t: ColoredTree, w) -> Fraction:
    """Equivariant Euler class of the normal bundle of the fixed locus of ``t``.

    Genus-0 graph formula: vertex factors carry the tangent weights at the
    fixed point and the psi-class aggregate ``(sum 1/omega)^(val-3)``;
    edge factors carry the moving part of H^0 of the pulled-back tangent
    bundle of the covered coordinate line.
    """
    lam = _lambdas(w)
    N = t.N
    if len(lam) != N + 1:
        raise ValueError(f"expected {N + 1} weights, got {len(lam)}")
    by_vertex: list[list[Fraction]] = [[] for _ in t.labels]
    for f in flags(t, lam):
        by_vertex[f.vertex].append(_nonzero(f.omega, "flag weight"))

    inv_euler = Fraction(1)
    for v, q in enumerate(t.labels):
        val = len(by_vertex[v])
        tangent = math.prod(_nonzero(lam[q] - lam[k], "tangent weight") for k in range(N + 1) if k != q)
        inv_omegas = [1 / om for om in by_vertex[v]]
        psi = sum(inv_omegas, Fraction(0))
        if val != 3:
            _nonzero(psi, "psi aggregate")
        inv_euler *= tangent ** (val - 1) * psi ** (val - 3) * math.prod(inv_omegas)

    edge_euler = Fraction(1)
    for u, v, d in t.edges:
        i, j = t.labels[u], t.labels[v]
        li, lj = lam[i], lam[j]
        factor = Fraction((-1) ** d * math.factorial(d) ** 2, d ** (2 * d)) * (li - lj) ** (2 * d)
        for k in range(N + 1):
            if k == i or k == j:
                continue
            for a in range(d + 1):
                factor *= _nonzero((a * li + (d - a) * lj) / d - lam[k], "edge weight")
        edge_euler *= factor
    return edge_euler / inv_euler
