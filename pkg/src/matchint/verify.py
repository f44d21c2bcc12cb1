"""End-to-end reproduction checks for the H_k, H'_k and F7 results.

Each check returns a :class:`Check`; ``run_all`` drives them and is what the
``verify-paper`` subcommand prints.
"""

from __future__ import annotations

import random
import time
from collections.abc import Callable
from dataclasses import dataclass

from .families import (
    FamilyKind,
    FamilySpec,
    build_F7,
    build_Hk,
    build_Hk_prime,
    expected_mu,
    expected_zeros,
)
from .graph import (
    Graph,
    cut_vertices,
    delete_vertices,
    new_graph,
    parse_graph6,
    to_graph6,
    vertex_connectivity_at_least,
)
from .matching import (
    count_matchings,
    is_matching_integral,
    matching_polynomial,
    matching_polynomial_recurrence,
)
from .polynomial import extract_integer_zeros
from .search import SearchConfig, filter_stream, generate_small_graphs, generated_lines

__all__ = ["Check", "run_all", "random_graph"]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.name}: {self.seconds:.2f}s{extra}"


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # report, don't crash the whole run
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(name, ok, detail, time.perf_counter() - t0)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def hk_counts(kmax: int) -> tuple[bool, str]:
    bad = []
    for k in range(1, kmax + 1):
        K = k * (k + 2)
        want = (3 * K + 5, (K + 1) * (3 * K + 2) + K + 2, K * K * (K + 1), 0)
        mv = count_matchings(build_Hk(k))
        got = tuple(mv[r] for r in (1, 2, 3, 4))
        if got != want:
            bad.append(f"k={k}: got {got}, want {want}")
    return not bad, "; ".join(bad) or f"k=1..{kmax}"


def hk_factorization(kmax: int) -> tuple[bool, str]:
    bad = []
    for k in range(1, kmax + 1):
        spec = FamilySpec(FamilyKind.HK, k)
        g = build_Hk(k)
        if matching_polynomial_recurrence(g) != expected_mu(spec):
            bad.append(f"k={k}: polynomial mismatch")
            continue
        integral, report = is_matching_integral(g)
        if not integral or report.zero_multiset() != expected_zeros(spec):
            bad.append(f"k={k}: zeros {report.zeros_text()}")
    return not bad, "; ".join(bad) or f"k=1..{kmax}"


def hk_prime_closed_form(kmax: int) -> tuple[bool, str]:
    bad = []
    for k in range(1, kmax + 1):
        g = build_Hk_prime(k)
        if matching_polynomial_recurrence(g) != expected_mu(FamilySpec(FamilyKind.HK_PRIME, k)):
            bad.append(f"k={k}: polynomial mismatch")
        if not cut_vertices(g):
            bad.append(f"k={k}: no cut vertex")
    for k in range(2, min(kmax, 6) + 1):
        if not vertex_connectivity_at_least(delete_vertices(build_Hk_prime(k), [3]), 3):
            bad.append(f"k={k}: minus pendant not 3-connected")
    return not bad, "; ".join(bad) or f"k=1..{kmax}"


def f7_check() -> tuple[bool, str]:
    g = build_F7()
    mu = matching_polynomial_recurrence(g)
    integral, report = is_matching_integral(g)
    ok = (
        mu == expected_mu(FamilySpec(FamilyKind.F7))
        and integral
        and report.zero_multiset() == {-3: 1, -2: 1, -1: 1, 0: 1, 1: 1, 2: 1, 3: 1}
        and vertex_connectivity_at_least(g, 3)
    )
    return ok, str(mu)


def hk_connectivity(kmax: int) -> tuple[bool, str]:
    bad = [k for k in range(1, kmax + 1) if not vertex_connectivity_at_least(build_Hk(k), 2)]
    return not bad, f"not 2-connected for k={bad}" if bad else f"k=1..{kmax}"


def oracle_equivalence(max_n: int = 7, n_random: int = 500, seed: int = 20171) -> tuple[bool, str]:
    checked = 0
    for n in range(1, max_n + 1):
        for g in generate_small_graphs(n):
            if matching_polynomial(g) != matching_polynomial_recurrence(g):
                return False, f"mismatch on {to_graph6(g)}"
            checked += 1
    rng = random.Random(seed)
    for _ in range(n_random):
        g = random_graph(rng, rng.randint(8, 12), rng.uniform(0.15, 0.85))
        if matching_polynomial(g) != matching_polynomial_recurrence(g):
            return False, f"mismatch on {to_graph6(g)}"
        checked += 1
    return True, f"{checked} graphs"


def search_soundness(max_n: int = 7) -> tuple[bool, str]:
    hits = list(filter_stream(SearchConfig(min_connectivity=2, max_n=max_n), generated_lines(max_n)))
    for hit in hits:
        g = parse_graph6(hit.graph6)
        report = extract_integer_zeros(matching_polynomial(g), max(g.n - 1, 0))
        if not report.integral or report.zeros != hit.zeros:
            return False, f"hit {hit.graph6} fails re-verification"
        if not vertex_connectivity_at_least(g, 2):
            return False, f"hit {hit.graph6} not 2-connected"
    h1, f7 = to_graph6(build_Hk(1)), to_graph6(build_F7())
    got2 = [h.graph6 for h in filter_stream(SearchConfig(min_connectivity=2), [h1])]
    got3 = [h.graph6 for h in filter_stream(SearchConfig(min_connectivity=3), [f7])]
    if got2 != [h1] or got3 != [f7]:
        return False, f"family stream hits {got2} {got3}"
    return True, f"{len(hits)} hits with n<={max_n}"


def cospectral_mates() -> tuple[bool, str]:
    h1, h2p = build_Hk(1), build_Hk_prime(2)
    same_mu = matching_polynomial_recurrence(h1) == matching_polynomial_recurrence(h2p)
    d1, d2 = sorted(h1.degrees()), sorted(h2p.degrees())
    return same_mu and d1 != d2, f"degrees {d1} vs {d2}"


def run_all(kmax: int = 10, max_n: int = 7, n_random: int = 500) -> list[Check]:
    return [
        _timed("1 H_k matching counts", lambda: hk_counts(kmax)),
        _timed("2 H_k factorization and integral zeros", lambda: hk_factorization(kmax)),
        _timed("3 H'_k closed form and cut vertex", lambda: hk_prime_closed_form(kmax)),
        _timed("4 F7 polynomial, zeros, 3-connectivity", f7_check),
        _timed("5 H_k 2-connectivity", lambda: hk_connectivity(kmax)),
        _timed("6 enumeration/recurrence agreement", lambda: oracle_equivalence(max_n, n_random)),
        _timed("7 search soundness", lambda: search_soundness(max_n)),
        _timed("8 H_1 and H'_2 share mu but differ", cospectral_mates),
    ]

