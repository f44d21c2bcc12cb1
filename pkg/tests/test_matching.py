import random
import threading

import pytest

from matchint.families import build_F7, build_Hk, build_Hk_prime
from matchint.graph import new_graph
from matchint.matching import (
    SharedMemo,
    count_matchings,
    is_matching_integral,
    matching_polynomial,
    matching_polynomial_recurrence,
)
from matchint.polynomial import IntPolynomial as P
from matchint.polynomial import extract_integer_zeros

from .conftest import K, brute_matching_counts, path, random_graph, star


def disjoint_union(g, h):
    return new_graph(g.n + h.n, g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()])


class TestCountMatchings:
    @pytest.mark.parametrize(
        "g,counts",
        [
            (K(2), (1, 1)),
            (path(3), (1, 2)),
            (new_graph(0), (1,)),
            (new_graph(1), (1,)),
            (new_graph(4), (1, 0, 0)),
        ],
    )
    def test_small(self, g, counts):
        assert count_matchings(g).counts == counts

    def test_h1(self):
        assert count_matchings(build_Hk(1)).counts == (1, 14, 49, 36, 0)

    def test_complete_graph(self):
        # perfect matchings of K_{2m} number (2m-1)!!
        assert count_matchings(K(8))[4] == 7 * 5 * 3 * 1
        assert count_matchings(K(10))[5] == 945

    def test_against_brute_force(self, rng):
        for _ in range(150):
            g = random_graph(rng, rng.randint(0, 9), rng.random())
            assert list(count_matchings(g).counts) == brute_matching_counts(g)

    def test_vector_invariants(self, small_graphs):
        for g in small_graphs:
            mv = count_matchings(g)
            assert mv[0] == 1
            assert len(mv) == g.n // 2 + 1
            if g.n >= 2:
                assert mv[1] == g.num_edges


class TestMatchingPolynomial:
    def test_examples(self):
        assert matching_polynomial(K(2)) == P([-1, 0, 1])
        assert matching_polynomial(build_F7()) == P([0, -36, 0, 49, 0, -14, 0, 1])
        assert matching_polynomial(build_Hk(1)) == P([0, 0, -36, 0, 49, 0, -14, 0, 1])

    def test_recurrence_examples(self):
        assert matching_polynomial_recurrence(new_graph(0)) == P([1])
        assert matching_polynomial_recurrence(path(3)) == P([0, -2, 0, 1])
        # k=2 proof counts: 29, 244, 576
        h2 = matching_polynomial_recurrence(build_Hk(2))
        assert h2 == P([0] * 7 + [-576, 0, 244, 0, -29, 0, 1])
        assert count_matchings(build_Hk(2)).counts == (1, 29, 244, 576, 0, 0, 0)

    def test_oracle_equivalence_exhaustive(self, small_graphs):
        assert len(small_graphs) == 1 + 2 + 4 + 11 + 34 + 156 + 1044
        for g in small_graphs:
            assert matching_polynomial(g) == matching_polynomial_recurrence(g)

    def test_oracle_equivalence_random(self, rng):
        for _ in range(500):
            g = random_graph(rng, rng.randint(8, 12), rng.uniform(0.1, 0.9))
            assert matching_polynomial(g) == matching_polynomial_recurrence(g)

    def test_disjoint_union_multiplicative(self, rng):
        for _ in range(60):
            g = random_graph(rng, rng.randint(0, 6))
            h = random_graph(rng, rng.randint(0, 6))
            u = disjoint_union(g, h)
            want = matching_polynomial(g) * matching_polynomial(h)
            assert matching_polynomial(u) == want
            assert matching_polynomial_recurrence(u) == want

    def test_parity_and_signs(self, small_graphs):
        for g in small_graphs:
            mu = matching_polynomial_recurrence(g)
            mv = count_matchings(g)
            assert mu.degree == g.n and mu[g.n] == 1
            assert mu[g.n - 1] == 0
            for e in range(g.n + 1):
                if (g.n - e) % 2:
                    assert mu[e] == 0
                else:
                    r = (g.n - e) // 2
                    assert mu[e] == (-1) ** r * mv[r] and mv[r] >= 0

    def test_large_family_member_is_fast(self):
        # H_12 has 173 vertices; memoised recurrence collapses the anonymous side
        mu = matching_polynomial_recurrence(build_Hk(12))
        assert mu.degree == 173

    def test_shared_memo_threads(self, rng):
        graphs = [random_graph(rng, rng.randint(5, 11)) for _ in range(40)]
        expected = [matching_polynomial(g) for g in graphs]
        memo = SharedMemo()
        results = [None] * len(graphs)

        def work(i):
            results[i] = matching_polynomial_recurrence(graphs[i], memo)

        threads = [threading.Thread(target=work, args=(i,)) for i in range(len(graphs))]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert results == expected
        assert len(memo) > 0


class TestIntegrality:
    def test_star(self):
        ok, rep = is_matching_integral(star(4))
        assert ok
        assert rep.zero_multiset() == {-2: 1, 0: 3, 2: 1}

    def test_triangle(self):
        ok, rep = is_matching_integral(K(3))
        assert not ok
        assert rep.remainder == P([-3, 0, 1])

    def test_h2_prime(self):
        ok, rep = is_matching_integral(build_Hk_prime(2))
        assert ok
        assert rep.zero_multiset() == {-3: 1, -2: 1, -1: 1, 0: 2, 1: 1, 2: 1, 3: 1}

    def test_empty_and_single(self):
        assert is_matching_integral(new_graph(0))[0]
        assert is_matching_integral(new_graph(1))[1].zero_multiset() == {0: 1}

    def test_zero_bound_soundness(self, small_graphs):
        for g in small_graphs:
            mu = matching_polynomial(g)
            assert extract_integer_zeros(mu, g.n - 1) == extract_integer_zeros(mu, 10 * g.n)

    def test_integer_zeros_within_spectral_radius(self, small_graphs):
        # real-rootedness sanity check: integral verdict implies zeros in [-(n-1), n-1]
        for g in small_graphs:
            ok, rep = is_matching_integral(g)
            if ok:
                assert sum(m for _, m in rep.zeros) == g.n
                assert all(abs(z) <= max(g.n - 1, 0) for z, _ in rep.zeros)


def test_random_seed_independence():
    # recurrence must not depend on vertex labelling
    rng = random.Random(77)
    for _ in range(50):
        n = rng.randint(3, 12)
        g = random_graph(rng, n)
        perm = rng.sample(range(n), n)
        h = new_graph(n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert matching_polynomial_recurrence(g) == matching_polynomial_recurrence(h)
