"""Second route to the incidence class through Chern characters.

For ``a = 1..r+1`` the degree-``r`` Chern character of the pushforward of
``ev^* O(a)`` is a known combination of weights at every fixed graph.  These
values are the right-hand sides of a Vandermonde-type linear system whose
last unknown is ``pi_*(h^(r+1)) / (r+1)!``; solving it with Cramer's rule
gives the incidence class without using the closed form in
:mod:`contact_curves.classes`.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .census import ColoredTree
from .classes import _lambdas

__all__ = [
    "interpolating_polynomial",
    "cramer_coefficient",
    "determinant",
    "edge_character",
    "faulhaber_polynomial",
    "faulhaber_sum",
    "incidence_via_cramer",
    "poly_eval",
    "tree_character",
    "vandermonde_system",
]


def edge_character(d_e: int, i: int, j: int, a: int, r: int, w) -> Fraction:
    """``ch_r`` of H^0 of ``O(a)`` pulled back along a degree ``d_e`` cover of line ``q_i q_j``."""
    if i == j:
        raise ValueError("edge endpoints must carry distinct labels")
    lam = _lambdas(w)
    li, lj = lam[i], lam[j]
    m = a * d_e
    total = sum(((m - k) * li + k * lj) ** r for k in range(m + 1))
    return Fraction(total) / (d_e**r * math.factorial(r))


def tree_character(t: ColoredTree, a: int, r: int, w) -> Fraction:
    """Edge characters summed over ``t``, minus one vertex term per gluing."""
    lam = _lambdas(w)
    total = Fraction(0)
    for u, v, d in t.edges:
        total += edge_character(d, t.labels[u], t.labels[v], a, r, lam)
    for v, q in enumerate(t.labels):
        gluings = t.valence(v) - 1
        if gluings > 0:
            total -= gluings * Fraction(a**r) * lam[q] ** r / math.factorial(r)
    return total


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / m[col][col]
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


@lru_cache(maxsize=None)
def vandermonde_system(r: int) -> tuple[tuple[int, ...], ...]:
    """The matrix with entries ``a^k`` for ``a, k = 1..r+1``."""
    return tuple(tuple(a**k for k in range(1, r + 2)) for a in range(1, r + 2))


def _cramer_last(rhs: Sequence[Fraction]) -> Fraction:
    r = len(rhs) - 1
    V = vandermonde_system(r)
    det_v = determinant(V)
    if det_v == 0:
        raise ArithmeticError("singular Vandermonde system")
    replaced = [list(row[:-1]) + [rhs[a]] for a, row in enumerate(V)]
    return determinant(replaced) / det_v


def incidence_via_cramer(t: ColoredTree, r: int, w) -> Fraction:
    """Incidence class to a codimension ``r + 1`` subspace, via Cramer's rule."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    rhs = [tree_character(t, a, r, w) for a in range(1, r + 2)]
    return math.factorial(r + 1) * _cramer_last(rhs)


def faulhaber_sum(q: int, m: int) -> int:
    """``1^q + 2^q + ... + m^q``."""
    return sum(k**q for k in range(1, m + 1))


@lru_cache(maxsize=None)
def faulhaber_polynomial(q: int) -> tuple[Fraction, ...]:
    """Coefficients ``(c_0, ..., c_{q+1})`` of the polynomial ``S^q``.

    Obtained from the forward differences of ``S^q(0), ..., S^q(q+1)``
    expanded in the falling-factorial basis.
    """
    deg = q + 1
    values = [Fraction(faulhaber_sum(q, m)) for m in range(deg + 1)]
    diffs = []
    row = values
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    # sum_k diffs[k] * x(x-1)...(x-k+1) / k!
    coeffs = [Fraction(0)] * (deg + 1)
    falling = [Fraction(1)]
    for k, delta in enumerate(diffs):
        scale = delta / math.factorial(k)
        for i, c in enumerate(falling):
            coeffs[i] += scale * c
        nxt = [Fraction(0)] * (len(falling) + 1)
        for i, c in enumerate(falling):
            nxt[i + 1] += c
            nxt[i] -= k * c
        falling = nxt
    return tuple(coeffs)


def poly_eval(coeffs: Sequence[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def interpolating_polynomial(r: int, t: int) -> tuple[Fraction, ...]:
    """Polynomial ``p`` with ``p(0) = 0``, leading coefficient ``1/(r+1)`` and
    ``p(m) = C(r,t) * sum_{k=0}^{m} (m-k)^t k^(r-t)`` for every integer ``m >= 0``.

    Built as ``C(r,t) * sum_j (-1)^j C(t,j) x^(t-j) S^(r+j-t)(x)``.  When
    ``t = r`` the ``j = 0`` term needs ``sum_{k=0}^{m} k^0 = m + 1`` while
    ``S^0(m) = m``, so ``x^r`` is added back.

    >>> [poly_eval(interpolating_polynomial(2, 2), m) for m in range(5)]
    [Fraction(0, 1), Fraction(1, 1), Fraction(5, 1), Fraction(14, 1), Fraction(30, 1)]
    """
    if not 0 <= t <= r:
        raise ValueError(f"need 0 <= t <= r, got t={t}, r={r}")
    coeffs = [Fraction(0)] * (r + 2)
    for j in range(t + 1):
        s = faulhaber_polynomial(r + j - t)
        scale = math.comb(r, t) * (-1) ** j * math.comb(t, j)
        for i, c in enumerate(s):
            coeffs[i + t - j] += scale * c
    if t == r:
        coeffs[r] += 1
    return tuple(coeffs)


def cramer_coefficient(r: int, t: int, d: int) -> Fraction:
    """Coefficient of ``li^t lj^(r-t)`` in the incidence class of one degree-``d`` edge.

    Solves the character system with the binomial power sums as right-hand
    sides; the closed form predicts ``d`` for every ``t``.
    """
    rhs = [
        math.comb(r, t) * sum((a * d - k) ** t * k ** (r - t) for k in range(a * d + 1))
        for a in range(1, r + 2)
    ]
    return Fraction(math.factorial(r + 1), d**r * math.factorial(r)) * _cramer_last(rhs)
