"""Matching counts and the matching polynomial, by two independent routes.

``count_matchings`` enumerates matchings directly over the sorted edge list;
``matching_polynomial_recurrence`` uses the vertex-deletion recurrence

    mu(G) = x * mu(G - u) - sum_{v ~ u} mu(G - u - v)

with memoisation on canonical forms of connected pieces. The two never share
code beyond the graph type, so each serves as the other's oracle.
"""

from __future__ import annotations

import threading
from collections.abc import MutableMapping
from dataclasses import dataclass

from .canon import canonical_key
from .graph import Graph, _induced_by_mask, components
from .polynomial import IntegralityReport, IntPolynomial, extract_integer_zeros

__all__ = [
    "MatchVector",
    "count_matchings",
    "matching_polynomial",
    "matching_polynomial_recurrence",
    "polynomial_from_counts",
    "is_matching_integral",
    "SharedMemo",
    "CANON_LIMIT",
]

# connected pieces up to this order are memoised up to isomorphism
CANON_LIMIT = 10


@dataclass(frozen=True)
class MatchVector:
    """``counts[r]`` is the number of r-edge matchings, r = 0..n//2."""

    n: int
    counts: tuple[int, ...]

    def __getitem__(self, r: int) -> int:
        return self.counts[r] if 0 <= r < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)


def count_matchings(g: Graph) -> MatchVector:
    """Count r-matchings for every r by enumerating them.

    Edges are taken in lexicographic order. At each node the set ``avail`` of
    higher-indexed edges disjoint from the current matching is kept as a
    bitmask; every edge in it extends the matching by one, which is counted
    in bulk, and we only descend into extensions that can themselves be
    extended. Descent stops once too few vertices remain for another edge.
    """
    n = g.n
    top = n // 2
    counts = [0] * (top + 1)
    counts[0] = 1
    edges = g.edges()
    if not edges:
        return MatchVector(n, tuple(counts))

    by_vertex = [0] * n
    for i, (u, v) in enumerate(edges):
        by_vertex[u] |= 1 << i
        by_vertex[v] |= 1 << i
    # edges that are later in the order and disjoint from edge i
    after = []
    for i, (u, v) in enumerate(edges):
        after.append(~((2 << i) - 1) & ~(by_vertex[u] | by_vertex[v]))

    stack = [((1 << len(edges)) - 1, 0)]
    while stack:
        avail, size = stack.pop()
        counts[size + 1] += avail.bit_count()
        if size + 2 > top:
            continue
        m = avail
        while m:
            low = m & -m
            child = avail & after[low.bit_length() - 1]
            if child:
                stack.append((child, size + 1))
            m ^= low
    return MatchVector(n, tuple(counts))


def polynomial_from_counts(mv: MatchVector) -> IntPolynomial:
    coeffs = [0] * (mv.n + 1)
    for r, c in enumerate(mv.counts):
        coeffs[mv.n - 2 * r] = -c if r % 2 else c
    return IntPolynomial(coeffs)


def matching_polynomial(g: Graph) -> IntPolynomial:
    """mu(G, x) assembled term by term from :func:`count_matchings`."""
    return polynomial_from_counts(count_matchings(g))


class SharedMemo(MutableMapping):
    """Lock-guarded memo table that several threads may pass to the recurrence."""

    def __init__(self):
        self._d: dict = {}
        self._lock = threading.Lock()

    def __getitem__(self, key):
        with self._lock:
            return self._d[key]

    def __setitem__(self, key, value):
        with self._lock:
            self._d[key] = value

    def __delitem__(self, key):
        with self._lock:
            del self._d[key]

    def __iter__(self):
        with self._lock:
            return iter(list(self._d))

    def __len__(self):
        with self._lock:
            return len(self._d)

    def get(self, key, default=None):
        with self._lock:
            return self._d.get(key, default)


_X = IntPolynomial.x()


def _mu_connected(g: Graph, memo: MutableMapping) -> IntPolynomial:
    n = g.n
    if n == 1:
        return _X
    if n <= CANON_LIMIT:
        key = canonical_key(g)
    else:
        key = ("labelled", n, g.masks)
    hit = memo.get(key)
    if hit is not None:
        return hit

    degs = g.degrees()
    u = max(range(n), key=lambda v: (degs[v], -v))
    full = (1 << n) - 1
    without_u = full & ~(1 << u)
    result = _X * _mu_masked(g, without_u, memo)
    m = g.masks[u]
    while m:
        low = m & -m
        result = result - _mu_masked(g, without_u & ~low, memo)
        m ^= low
    memo[key] = result
    return result


def _mu_masked(g: Graph, keep: int, memo: MutableMapping) -> IntPolynomial:
    return _mu(_induced_by_mask(g, keep), memo)


def _mu(g: Graph, memo: MutableMapping) -> IntPolynomial:
    result = IntPolynomial((1,))
    isolated = 0
    for comp in components(g):
        if comp & (comp - 1) == 0:
            isolated += 1
            continue
        piece = g if comp == (1 << g.n) - 1 else _induced_by_mask(g, comp)
        result = result * _mu_connected(piece, memo)
    if isolated:
        result = IntPolynomial((0,) * isolated + result.coeffs)
    return result


def matching_polynomial_recurrence(g: Graph, memo: MutableMapping | None = None) -> IntPolynomial:
    """mu(G, x) via the vertex recurrence, pivoting on a maximum-degree vertex.

    Pieces with at most ``CANON_LIMIT`` vertices are keyed by canonical form,
    larger ones by their exact labelled adjacency. ``memo`` defaults to a
    fresh per-call dict; pass a :class:`SharedMemo` to reuse across threads.
    """
    return _mu(g, {} if memo is None else memo)


def is_matching_integral(g: Graph) -> tuple[bool, IntegralityReport]:
    """Decide whether every zero of mu(G, x) is an integer.

    Zeros of a matching polynomial are bounded in absolute value by the
    largest adjacency eigenvalue, hence by n - 1, which is the search bound.
    """
    report = extract_integer_zeros(matching_polynomial_recurrence(g), max(g.n - 1, 0))
    return report.integral, report
