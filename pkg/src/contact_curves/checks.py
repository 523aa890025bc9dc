"""Self-checks shared by the ``verify`` command and the test suite.

Each check returns a :class:`CheckResult`; none of them raise on a
mathematical failure.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .bott import (
    IncidenceSpec,
    RunConfig,
    all_specs,
    count_many,
    draw_weights,
    evaluate_sum,
    graph_contribution,
)
from .cache import cached_graphs
from .chern_oracle import (
    _cramer_last,
    interpolating_polynomial,
    cramer_coefficient,
    faulhaber_polynomial,
    faulhaber_sum,
    incidence_via_cramer,
    poly_eval,
    tree_character,
)
from .classes import DegenerateWeightsError, incidence_class
from .tables import KNOWN_COUNTS


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")


def table_reproduction(n: int, d: int, config: RunConfig | None = None) -> CheckResult:
    known = KNOWN_COUNTS[(n, d)]
    specs = [IncidenceSpec(n, cond) for cond in known]
    got = {r.spec.conditions: r.count for r in count_many(n, d, specs, config)}
    bad = [f"{c}: expected {v}, computed {got[c]}" for c, v in known.items() if got[c] != v]
    return CheckResult(
        f"table P^{2 * n + 1} d={d} ({len(known)} rows)",
        not bad,
        "; ".join(bad) if bad else f"{len(known)} rows match",
    )


def integrality(n: int, d: int, config: RunConfig | None = None) -> CheckResult:
    # count_many raises VerificationError on non-integral or disagreeing sums
    from .bott import VerificationError

    try:
        results = count_many(n, d, all_specs(n, d), config)
    except VerificationError as exc:
        return CheckResult(f"integrality P^{2 * n + 1} d={d}", False, str(exc))
    return CheckResult(
        f"integrality P^{2 * n + 1} d={d}", True, f"{len(results)} specs, all non-negative integers"
    )


def oracle_equivalence(N: int, d: int, r_max: int, seeds: Iterable[int] = (11, 12)) -> CheckResult:
    graphs = cached_graphs(N, d)
    checked = 0
    for seed in seeds:
        w = draw_weights(N, seed)
        for g in graphs:
            for r in range(1, min(r_max, N - 1) + 1):
                a, b = incidence_via_cramer(g.tree, r, w), incidence_class(g.tree, r, w)
                if a != b:
                    return CheckResult(
                        f"oracle equivalence N={N} d={d}", False, f"{g.code} r={r}: {a} != {b}"
                    )
                checked += 1
    return CheckResult(f"oracle equivalence N={N} d={d}", True, f"{checked} comparisons")


def scale_invariance(n: int, d: int, spec: IncidenceSpec, seed: int = 3) -> CheckResult:
    rng = random.Random(seed)
    w = draw_weights(2 * n + 1, seed)
    c = Fraction(rng.choice([-1, 1]) * rng.randint(2, 10**6), rng.randint(1, 10**6))
    for g in cached_graphs(2 * n + 1, d):
        if graph_contribution(g, n, d, spec, w) != graph_contribution(g, n, d, spec, w.scaled(c)):
            return CheckResult(f"scale invariance {spec} d={d}", False, g.code)
    return CheckResult(f"scale invariance {spec} d={d}", True, f"c={c}")


def weight_independence(n: int, d: int, spec: IncidenceSpec, draws: int = 3, seed: int = 101) -> CheckResult:
    graphs = cached_graphs(2 * n + 1, d)
    values = set()
    for k in range(draws):
        for attempt in range(16):
            try:
                values.add(evaluate_sum(graphs, [spec], draw_weights(2 * n + 1, seed + k, attempt))[0])
                break
            except DegenerateWeightsError:
                continue
    ok = len(values) == 1
    return CheckResult(
        f"weight independence {spec} d={d}", ok, f"{draws} draws -> {sorted(values)}"
    )


def permutation_invariance(n: int, d: int, spec: IncidenceSpec, seed: int = 5) -> CheckResult:
    N = 2 * n + 1
    graphs = cached_graphs(N, d)
    w = draw_weights(N, seed)
    perm = list(range(N + 1))
    random.Random(seed).shuffle(perm)
    a = evaluate_sum(graphs, [spec], w)[0]
    b = evaluate_sum(graphs, [spec], w.permuted(perm))[0]
    return CheckResult(f"permutation invariance {spec} d={d}", a == b, f"perm={perm}")


def vertex_term_insensitivity(N: int = 5, d: int = 2, r_max: int = 4, seed: int = 7) -> CheckResult:
    """Shifting every right-hand side by ``delta * a^k`` (k <= r) leaves the solution alone."""
    rng = random.Random(seed)
    w = draw_weights(N, seed)
    for g in cached_graphs(N, d):
        for r in range(1, min(r_max, N - 1) + 1):
            rhs = [tree_character(g.tree, a, r, w) for a in range(1, r + 2)]
            base = _cramer_last(rhs)
            for k in range(1, r + 1):
                delta = Fraction(rng.randint(-10**9, 10**9), rng.randint(1, 10**9))
                shifted = [x + delta * a**k for a, x in zip(range(1, r + 2), rhs)]
                if _cramer_last(shifted) != base:
                    return CheckResult("vertex-term insensitivity", False, f"{g.code} r={r} k={k}")
    return CheckResult("vertex-term insensitivity", True, f"N={N} d={d} r<={r_max}")


def faulhaber_identities(r_max: int = 5, d_max: int = 4) -> CheckResult:
    """Power-sum polynomials and the interpolating polynomial of the incidence proof."""
    name = "Faulhaber identities"
    for q in range(r_max + 2):
        poly = faulhaber_polynomial(q)
        if poly[-1] != Fraction(1, q + 1):
            return CheckResult(name, False, f"S^{q} leading coefficient {poly[-1]}")
        for m in range(12):
            if poly_eval(poly, m) != faulhaber_sum(q, m):
                return CheckResult(name, False, f"S^{q}({m})")
    for r in range(1, r_max + 1):
        for t in range(r + 1):
            p = interpolating_polynomial(r, t)
            if len(p) != r + 2 or p[0] != 0 or p[-1] != Fraction(1, r + 1):
                return CheckResult(name, False, f"p(r={r},t={t}) coefficients")
            for d in range(1, d_max + 1):
                if cramer_coefficient(r, t, d) != d:
                    return CheckResult(name, False, f"coefficient r={r} t={t} d={d}")
                for a in range(1, r + 2):
                    m = a * d
                    rhs = math.comb(r, t) * sum((m - k) ** t * k ** (r - t) for k in range(m + 1))
                    if poly_eval(p, m) != rhs:
                        return CheckResult(name, False, f"p({m}) r={r} t={t}")
    return CheckResult(name, True, f"r<={r_max}, d<={d_max}")


SCOPES: dict[str, list[tuple[int, int]]] = {
    "p3": [(1, 1), (1, 2), (1, 3)],
    "p5-d1": [(2, 1)],
    "p5-d2": [(2, 2)],
    "all": [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)],
}


def run_scope(scope: str, config: RunConfig | None = None) -> list[CheckResult]:
    """Table reproduction and the property suite for every (n, d) in ``scope``."""
    config = config or RunConfig()
    results = []
    for n, d in SCOPES[scope]:
        N = 2 * n + 1
        spec = all_specs(n, d)[-1]
        results.append(table_reproduction(n, d, config))
        results.append(integrality(n, d, config))
        results.append(oracle_equivalence(N, d, r_max=min(4, N - 1)))
        results.append(scale_invariance(n, d, spec))
        results.append(weight_independence(n, d, spec))
        results.append(permutation_invariance(n, d, spec))
    results.append(vertex_term_insensitivity())
    results.append(faulhaber_identities())
    return results
