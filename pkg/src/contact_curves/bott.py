"""Bott localization sums for counts of rational contact curves.

The count of degree ``d`` contact curves in ``P^(2n+1)`` meeting ``a_c``
general linear subspaces of codimension ``c`` is a sum over the fixed
graphs of the space of stable maps.  Each graph contributes

    obstruction * prod_c incidence(c - 1)^(a_c) / (a_gamma * normal_euler)

evaluated at one common choice of torus weights.  The sum does not depend
on the weights; :func:`count` evaluates it at several independent random
integer weight vectors and insists that all evaluations agree on the same
non-negative integer.
"""
from __future__ import annotations

import logging
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .cache import cached_graphs
from .census import GraphClass
from .chern_oracle import incidence_via_cramer
from .classes import (
    DegenerateWeightsError,
    WeightAssignment,
    incidence_class,
    normal_bundle_euler,
    obstruction_euler,
)

log = logging.getLogger(__name__)

__all__ = [
    "CodimensionRangeError",
    "CountResult",
    "DimensionMismatchError",
    "IncidenceSpec",
    "RunConfig",
    "SpecError",
    "VerificationError",
    "all_specs",
    "count",
    "count_many",
    "draw_weights",
    "evaluate_sum",
    "full_table",
    "graph_contribution",
    "graph_contributions",
    "validate_spec",
]

DEFAULT_SEED = 1729
WEIGHT_BITS = 64
MAX_ATTEMPTS = 64


class SpecError(ValueError):
    pass


class DimensionMismatchError(SpecError):
    def __init__(self, expected: int, supplied: int):
        self.expected = expected
        self.supplied = supplied
        super().__init__(
            f"dimension mismatch: sum of a_c*(c-1) is {supplied}, expected 2n(d+1)-1 = {expected}"
        )


class CodimensionRangeError(SpecError):
    pass


class VerificationError(RuntimeError):
    """Independent evaluations disagreed or were not integral."""


@dataclass(frozen=True)
class IncidenceSpec:
    """Multiplicities ``(a_2, ..., a_N)`` of general codimension-``c`` conditions.

    ``degrees`` optionally replaces the codimension-``c`` linear subspaces
    by subvarieties of degree ``degrees[c-2]``; the class of such a
    condition is that multiple of the linear one.
    """

    n: int
    conditions: tuple[int, ...]
    degrees: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "conditions", tuple(int(a) for a in self.conditions))
        if self.degrees is not None:
            object.__setattr__(self, "degrees", tuple(int(k) for k in self.degrees))

    @property
    def N(self) -> int:
        return 2 * self.n + 1

    @property
    def counts(self) -> dict[int, int]:
        return {c: a for c, a in enumerate(self.conditions, start=2)}

    @property
    def multiplier(self) -> int:
        if self.degrees is None:
            return 1
        return math.prod(k**a for k, a in zip(self.degrees, self.conditions))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.conditions)) + ")"


def validate_spec(n: int, d: int, spec: IncidenceSpec) -> None:
    """Raise unless ``spec`` is a dimensionally correct problem for (n, d)."""
    if n < 1 or d < 1:
        raise SpecError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    if spec.n != n:
        raise SpecError(f"spec is for n={spec.n}, not n={n}")
    N = 2 * n + 1
    if len(spec.conditions) != N - 1:
        raise CodimensionRangeError(
            f"expected {N - 1} multiplicities for codimensions 2..{N}, got {len(spec.conditions)}"
        )
    if any(a < 0 for a in spec.conditions):
        raise SpecError(f"multiplicities must be non-negative: {spec.conditions}")
    if spec.degrees is not None:
        if len(spec.degrees) != len(spec.conditions):
            raise SpecError("one degree per codimension is required")
        if any(k < 1 for k in spec.degrees):
            raise SpecError(f"subvariety degrees must be positive: {spec.degrees}")
    expected = 2 * n * (d + 1) - 1
    supplied = sum(a * (c - 1) for c, a in spec.counts.items())
    if supplied != expected:
        raise DimensionMismatchError(expected, supplied)


def all_specs(n: int, d: int) -> list[IncidenceSpec]:
    """Every dimensionally correct spec for (n, d), in descending lexicographic order."""
    target = 2 * n * (d + 1) - 1
    N = 2 * n + 1

    def rec(c: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if c == N:
            if remaining % (N - 1) == 0:
                yield (remaining // (N - 1),)
            return
        for a in range(remaining // (c - 1), -1, -1):
            for rest in rec(c + 1, remaining - a * (c - 1)):
                yield (a, *rest)

    return [IncidenceSpec(n, cond) for cond in rec(2, target)]


def draw_weights(N: int, seed: int, attempt: int = 0) -> WeightAssignment:
    """N+1 distinct nonzero integer weights, a pure function of (seed, attempt)."""
    rng = random.Random(f"contact-curves/{seed}/{attempt}")
    bound = 1 << WEIGHT_BITS
    seen: set[int] = set()
    out = []
    while len(out) < N + 1:
        x = rng.randint(-bound, bound)
        if x and x not in seen:
            seen.add(x)
            out.append(x)
    return WeightAssignment(tuple(Fraction(x) for x in out))


@dataclass(frozen=True)
class RunConfig:
    seed: int = DEFAULT_SEED
    passes: int = 2
    workers: int | str = 1
    oracle_check: bool = False

    def __post_init__(self):
        if self.passes < 2:
            raise ValueError("at least two independent weight draws are required")
        if self.workers != "auto" and int(self.workers) < 1:
            raise ValueError(f"workers must be >= 1 or 'auto', got {self.workers!r}")

    @property
    def worker_count(self) -> int:
        if self.workers == "auto":
            return os.cpu_count() or 1
        return int(self.workers)


def _incidence(tree, r, w, oracle: bool) -> Fraction:
    return incidence_via_cramer(tree, r, w) if oracle else incidence_class(tree, r, w)


def graph_contribution(
    g: GraphClass, n: int, d: int, spec: IncidenceSpec, w, oracle: bool = False
) -> Fraction:
    """Contribution of one fixed graph to the Bott sum at weights ``w``."""
    t = g.tree
    value = obstruction_euler(t, w)
    for c, a in spec.counts.items():
        if a:
            value *= _incidence(t, c - 1, w, oracle) ** a
    return value * spec.multiplier / (g.a_gamma * normal_bundle_euler(t, w))


def _partial_sums(
    graphs: Sequence[GraphClass],
    specs: Sequence[IncidenceSpec],
    lambdas: tuple[Fraction, ...],
    oracle: bool,
) -> list[Fraction]:
    # incidence classes are shared by every spec and every power
    used = sorted({c for s in specs for c, a in s.counts.items() if a})
    totals = [Fraction(0)] * len(specs)
    for g in graphs:
        t = g.tree
        base = obstruction_euler(t, lambdas) / (g.a_gamma * normal_bundle_euler(t, lambdas))
        inc = {c: _incidence(t, c - 1, lambdas, oracle) for c in used}
        for k, s in enumerate(specs):
            term = base
            for c, a in s.counts.items():
                if a:
                    term *= inc[c] ** a
            totals[k] += term
    return totals


def _chunks(seq: Sequence, parts: int) -> list[Sequence]:
    size = max(1, -(-len(seq) // parts))
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def evaluate_sum(
    graphs: Sequence[GraphClass],
    specs: Sequence[IncidenceSpec],
    w: WeightAssignment,
    workers: int = 1,
    oracle: bool = False,
) -> list[Fraction]:
    """Bott sums (before degree multipliers) for each spec at one weight vector.

    Raises :class:`DegenerateWeightsError` if any graph hits a vanishing
    factor; the caller must then redraw weights for the whole sum.
    """
    lambdas = w.lambdas
    if workers <= 1 or len(graphs) < 2:
        return _partial_sums(graphs, specs, lambdas, oracle)
    chunks = _chunks(list(graphs), workers * 4)
    totals = [Fraction(0)] * len(specs)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_partial_sums, ch, specs, lambdas, oracle) for ch in chunks]
        for fut in futures:
            for k, x in enumerate(fut.result()):
                totals[k] += x
    return totals


@dataclass(frozen=True)
class CountResult:
    spec: IncidenceSpec
    d: int
    count: int
    graph_census_size: int
    weight_seeds: tuple[tuple[int, int], ...]
    elapsed: float = field(compare=False)


def count_many(
    n: int,
    d: int,
    specs: Sequence[IncidenceSpec],
    config: RunConfig | None = None,
    graphs: Sequence[GraphClass] | None = None,
) -> list[CountResult]:
    """Count curves for several specs sharing (n, d), reusing each weight draw."""
    config = config or RunConfig()
    for s in specs:
        validate_spec(n, d, s)
    start = time.perf_counter()
    N = 2 * n + 1
    if graphs is None:
        graphs = cached_graphs(N, d)
    evaluations: list[list[Fraction]] = []
    seeds: list[tuple[int, int]] = []
    for p in range(config.passes):
        seed = config.seed + p
        for attempt in range(MAX_ATTEMPTS):
            w = draw_weights(N, seed, attempt)
            try:
                sums = evaluate_sum(graphs, specs, w, config.worker_count, config.oracle_check)
            except DegenerateWeightsError as exc:
                log.info("weights (seed=%d, attempt=%d) degenerate: %s", seed, attempt, exc)
                continue
            evaluations.append(sums)
            seeds.append((seed, attempt))
            break
        else:
            raise VerificationError(f"no generic weights found for seed {seed}")
    elapsed = time.perf_counter() - start

    results = []
    for k, s in enumerate(specs):
        values = {ev[k] for ev in evaluations}
        if len(values) != 1:
            raise VerificationError(f"{s}: weight draws disagree: {sorted(values)}")
        (value,) = values
        if value.denominator != 1:
            raise VerificationError(f"{s}: Bott sum {value} is not an integer")
        total = value.numerator * s.multiplier
        if total < 0:
            raise VerificationError(f"{s}: negative count {total}")
        results.append(CountResult(s, d, total, len(graphs), tuple(seeds), elapsed))
    return results


def count(n: int, d: int, spec: IncidenceSpec, config: RunConfig | None = None) -> CountResult:
    """Number of degree ``d`` contact curves in P^(2n+1) meeting the conditions.

    >>> count(1, 1, IncidenceSpec(1, (3, 0))).count
    2
    """
    return count_many(n, d, [spec], config)[0]


def full_table(n: int, d: int, config: RunConfig | None = None) -> list[tuple[IncidenceSpec, int]]:
    """Counts for every dimensionally correct spec, in descending lexicographic order."""
    specs = all_specs(n, d)
    return [(r.spec, r.count) for r in count_many(n, d, specs, config)]


def graph_contributions(n: int, d: int, spec: IncidenceSpec, w: WeightAssignment) -> list[tuple[GraphClass, Fraction]]:
    """Per-graph terms at ``w``; individually weight dependent, only the sum is meaningful."""
    validate_spec(n, d, spec)
    return [(g, graph_contribution(g, n, d, spec, w)) for g in cached_graphs(2 * n + 1, d)]
