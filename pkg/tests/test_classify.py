"""Structural classification: the four conditions, both theorems' verdicts,
witness integrity, and the index-2 enumeration against a subset-scan oracle."""

from liemetab.catalog import catalog
from liemetab.classify import (
    condition1,
    condition2,
    condition3,
    condition4,
    index2_subgroups,
    is_hamiltonian_2group,
    theorem1_verdict,
    theorem2_verdict,
)

from oracles import index2_subgroups_subset_scan


class TestCondition1:
    def test_abelian_always_true(self, groups):
        for name in ("C12", "C2^4", "C4xC4"):
            ok, K = condition1(groups[name])
            assert ok

    def test_d16_true_via_rotation_subgroup(self, groups):
        ok, K = condition1(groups["D16"])
        assert ok
        assert K.order == 8 and K.is_abelian()

    def test_s4_false(self, groups):
        ok, K = condition1(groups["S4"])
        assert not ok and K.order == 24


class TestIndex2Enumeration:
    def test_matches_subset_scan_up_to_16(self, groups):
        for e in catalog(16):
            fast = {frozenset(H.elements) for H in index2_subgroups(e.group)}
            slow = index2_subgroups_subset_scan(e.group)
            assert fast == slow, e.name

    def test_counts_on_known_groups(self, groups):
        assert len(index2_subgroups(groups["Q8"])) == 3
        assert len(index2_subgroups(groups["A4"])) == 0
        assert len(index2_subgroups(groups["C2^3"])) == 7

    def test_every_enumerated_subgroup_is_valid(self, groups):
        for name in ("D16", "SD16", "Q8xC2"):
            G = groups[name]
            for H in index2_subgroups(G):
                assert H.index() == 2
                assert H.is_closed()


class TestCondition2:
    def test_klein_group(self, groups):
        ok, H = condition2(groups["C2^2"])
        assert ok and H.order == 2

    def test_d8_witness(self, groups):
        ok, H = condition2(groups["D8"])
        assert ok
        assert set(H.elements) == {0, 2, 4, 6}  # {1, r^2, s, r^2*s}
        assert H.is_elementary_abelian_2()

    def test_q8_false(self, groups):
        ok, H = condition2(groups["Q8"])
        assert not ok and H is None


class TestCondition3:
    def test_q8(self, groups):
        ok, (B, x) = condition3(groups["Q8"])
        assert ok
        G = groups["Q8"]
        assert B.order == 4 and B.is_abelian()
        assert G.element_order(x) == 4
        assert all(G.conj(b, x) == G.inv(b) for b in B.elements)

    def test_q16_rotation_subgroup(self, groups):
        ok, (B, x) = condition3(groups["Q16"])
        assert ok and B.order == 8

    def test_sd16_false(self, groups):
        ok, w = condition3(groups["SD16"])
        assert not ok and w is None


class TestCondition4:
    def test_q8(self, groups):
        ok, Z = condition4(groups["Q8"])
        assert ok and Z.elements == (0, 2)

    def test_c2_false_because_index_1(self, groups):
        ok, _ = condition4(groups["C2"])
        assert not ok

    def test_d8_false_extra_involutions(self, groups):
        ok, _ = condition4(groups["D8"])
        assert not ok

    def test_c4_semidirect_c4(self, groups):
        G = groups["C4:C4"]
        ok, Z = condition4(G)
        assert ok
        assert set(Z.elements) == set(G.involution_set())
        assert Z.order == 4


class TestVerdicts:
    def test_c12(self, groups):
        rep = theorem1_verdict(groups["C12"])
        assert rep.c1 and rep.theorem1

    def test_q8xc2_condition_pattern(self, groups):
        rep = theorem1_verdict(groups["Q8xC2"])
        assert (rep.c1, rep.c2, rep.c3, rep.c4) == (False, False, True, True)
        assert rep.theorem1

    def test_a4_all_false(self, groups):
        rep = theorem1_verdict(groups["A4"])
        assert not (rep.c1 or rep.c2 or rep.c3 or rep.c4)
        assert not rep.theorem1

    def test_theorem2(self, groups):
        ok, which = theorem2_verdict(groups["D8"])
        assert ok and which == (1, 2)
        ok, which = theorem2_verdict(groups["Q8xC2"])
        assert not ok and which == ()
        ok, _ = theorem2_verdict(groups["C9"])
        assert ok

    def test_all_witnesses_reverify(self, groups):
        for e in catalog(32):
            G = e.group
            rep = theorem1_verdict(G)
            w = rep.witnesses
            if rep.c1:
                K = G.subgroup(w["c1"]["subgroup"])
                assert K.is_abelian()
                diag_nontrivial = [g for g in G.elements() if G.mul(g, g) != 0]
                assert all(g in K for g in diag_nontrivial)
            if rep.c2:
                H = G.subgroup(w["c2"]["subgroup"])
                assert H.index() == 2 and H.is_elementary_abelian_2()
            if rep.c3:
                B = G.subgroup(w["c3"]["subgroup"])
                x = w["c3"]["x"]
                assert B.index() == 2 and B.is_abelian()
                assert G.element_order(x) == 4
                assert all(G.conj(b, x) == G.inv(b) for b in B.elements)
            if rep.c4:
                Z = G.subgroup(w["c4"]["center"])
                assert Z.elements == G.center().elements
                assert set(Z.elements) == set(G.involution_set())
                assert G.order == 4 * Z.order


class TestRelabellingInvariance:
    def test_verdicts_survive_relabelling(self, groups):
        """Structural verdicts only depend on the group, not its labelling."""
        import random

        from liemetab.groups import group_from_table

        rng = random.Random(11)
        for name in ("Q16", "SD16", "C4:C4", "Dic3"):
            G = groups[name]
            n = G.order
            sigma = list(range(n))
            rng.shuffle(sigma)
            inv_sigma = [0] * n
            for i, v in enumerate(sigma):
                inv_sigma[v] = i
            table = [
                [inv_sigma[G.mul(sigma[i], sigma[j])] for j in range(n)]
                for i in range(n)
            ]
            H = group_from_table(table)
            a, b = theorem1_verdict(G), theorem1_verdict(H)
            assert (a.c1, a.c2, a.c3, a.c4) == (b.c1, b.c2, b.c3, b.c4), name
            assert a.hamiltonian_2group == b.hamiltonian_2group


class TestHamiltonian:
    def test_q8_family(self, groups):
        assert is_hamiltonian_2group(groups["Q8"])
        assert is_hamiltonian_2group(groups["Q8xC2"])
        assert is_hamiltonian_2group(groups["Q8xC2xC2"])

    def test_rejects_others(self, groups):
        assert not is_hamiltonian_2group(groups["D8"])  # <s> is not normal
        assert not is_hamiltonian_2group(groups["C8"])  # abelian
        assert not is_hamiltonian_2group(groups["S3"])  # not a 2-group
        assert not is_hamiltonian_2group(groups["Q16"])
