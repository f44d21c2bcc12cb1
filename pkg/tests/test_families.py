import json

import pytest

from matchint.families import (
    FamilyKind,
    FamilySpec,
    build_F7,
    build_Hk,
    build_Hk_prime,
    expected_mu,
    expected_zeros,
    verify_family,
)
from matchint.graph import cut_vertices, delete_vertices, to_graph6, vertex_connectivity_at_least
from matchint.matching import count_matchings, matching_polynomial, matching_polynomial_recurrence
from matchint.polynomial import IntPolynomial as P

H1_MU = P([0, 0, -36, 0, 49, 0, -14, 0, 1])


class TestConstruction:
    @pytest.mark.parametrize("k,n,m", [(1, 8, 14), (2, 13, 29), (3, 20, 50)])
    def test_hk_size(self, k, n, m):
        g = build_Hk(k)
        assert (g.n, g.num_edges) == (n, m)

    @pytest.mark.parametrize("k,n,m", [(1, 5, 5), (2, 8, 14), (3, 13, 29)])
    def test_hk_prime_size(self, k, n, m):
        g = build_Hk_prime(k)
        assert (g.n, g.num_edges) == (n, m)

    def test_f7(self):
        g = build_F7()
        assert (g.n, g.num_edges) == (7, 14)
        assert sorted(g.degrees()) == [4, 4, 4, 4, 4, 4, 4]

    def test_labelling_golden(self):
        # frozen from networkx.to_graph6_bytes on the same edge lists
        assert to_graph6(build_Hk(1)) == "GMrfF?"
        assert to_graph6(build_Hk_prime(2)) == "GKzfF?"
        assert to_graph6(build_F7()) == "F}oxw"
        assert build_Hk(1).adj(3) == {0, 1}
        assert build_Hk_prime(2).adj(3) == {0}

    def test_bad_k(self):
        for builder in (build_Hk, build_Hk_prime):
            with pytest.raises(ValueError):
                builder(0)
        with pytest.raises(ValueError):
            FamilySpec(FamilyKind.HK, 0)


class TestHkCounts:
    @pytest.mark.parametrize("k", range(1, 8))
    def test_counts(self, k):
        K = k * (k + 2)
        mv = count_matchings(build_Hk(k))
        assert mv[1] == 3 * k * (k + 2) + 5 == k**2 + (k + 1) ** 2 + (k + 2) ** 2
        assert mv[2] == (K + 1) * (3 * K + 2) + K + 2 == 3 * K * K + 6 * K + 4
        assert mv[2] == k**2 * (k + 1) ** 2 + k**2 * (k + 2) ** 2 + (k + 1) ** 2 * (k + 2) ** 2
        assert mv[3] == K * K * (K + 1) == k**2 * (k + 1) ** 2 * (k + 2) ** 2
        assert mv[4] == 0


class TestExpectedMu:
    def test_examples(self):
        assert expected_mu(FamilySpec("hk", 1)) == H1_MU
        assert expected_mu(FamilySpec("hkprime", 2)) == H1_MU
        assert expected_mu(FamilySpec("f7")) == P([0, -36, 0, 49, 0, -14, 0, 1])
        assert expected_mu(FamilySpec("hkprime", 1)) == P([0, 4, 0, -5, 0, 1])

    @pytest.mark.parametrize("kind", ["hk", "hkprime"])
    @pytest.mark.parametrize("k", range(1, 9))
    def test_matches_construction(self, kind, k):
        spec = FamilySpec(kind, k)
        g = build_Hk(k) if kind == "hk" else build_Hk_prime(k)
        assert matching_polynomial_recurrence(g) == expected_mu(spec)

    def test_enumeration_agrees_small(self):
        for k in (1, 2, 3):
            assert matching_polynomial(build_Hk(k)) == expected_mu(FamilySpec("hk", k))
            assert matching_polynomial(build_Hk_prime(k)) == expected_mu(FamilySpec("hkprime", k))

    def test_expected_zeros_total_degree(self):
        for k in range(1, 6):
            for kind in ("hk", "hkprime"):
                spec = FamilySpec(kind, k)
                assert sum(expected_zeros(spec).values()) == expected_mu(spec).degree


class TestStructure:
    @pytest.mark.parametrize("k", range(1, 8))
    def test_hk_two_connected(self, k):
        assert vertex_connectivity_at_least(build_Hk(k), 2)
        assert not vertex_connectivity_at_least(build_Hk(k), 3)

    @pytest.mark.parametrize("k", range(2, 7))
    def test_hk_prime_single_cut_vertex(self, k):
        g = build_Hk_prime(k)
        assert cut_vertices(g) == [0]
        assert vertex_connectivity_at_least(delete_vertices(g, [3]), 3)

    def test_f7_three_connected(self):
        assert vertex_connectivity_at_least(build_F7(), 3)
        assert not vertex_connectivity_at_least(build_F7(), 4)


class TestVerifyFamily:
    def test_hk3(self):
        rep = verify_family(FamilySpec("hk", 3))
        assert rep.match and rep.ok and rep.n == 20
        assert rep.integrality.zero_multiset() == {-5: 1, -4: 1, -3: 1, 0: 14, 3: 1, 4: 1, 5: 1}

    def test_hk_prime3(self):
        rep = verify_family(FamilySpec("hkprime", 3))
        assert rep.match and rep.ok and rep.n == 13
        assert rep.details["cut_vertices"] == [0]

    def test_cospectral_mates(self):
        a, b = verify_family(FamilySpec("hk", 1)), verify_family(FamilySpec("hkprime", 2))
        assert a.computed_mu == b.computed_mu
        assert sorted(build_Hk(1).degrees()) != sorted(build_Hk_prime(2).degrees())

    def test_json(self):
        d = json.loads(verify_family(FamilySpec("f7")).to_json())
        assert d["computed_mu"] == "x^7 - 14*x^5 + 49*x^3 - 36*x"
        assert d["match"] and d["connectivity_claim_holds"]

    def test_large_k_has_no_graph6(self):
        rep = verify_family(FamilySpec("hk", 8))
        assert rep.n == 85 and rep.graph6 is None and rep.ok
