"""Brute-force checks: generator sets, commutativity, Lie-metabelian scan."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liemetab.brute import (
    BudgetExceeded,
    _to_arrays,
    audit_eq1,
    is_check_commutative,
    is_plus_commutative,
    is_plus_lie_metabelian,
    x_plus_generators,
)
from liemetab.catalog import catalog
from liemetab.groupring import RingElement, lie_bracket
from liemetab.groups import group_from_table
from liemetab import _scan_py

from oracles import (
    check_commutative_oracle,
    lie_metabelian_oracle,
    plus_commutative_oracle,
)

try:
    from liemetab import _scan_c
except ImportError:
    _scan_c = None


class TestGeneratorSets:
    def test_c4_has_three_generators(self, groups):
        gs = x_plus_generators(groups["C4"])
        assert len(gs.plus_gens) == 3
        assert len(gs.check_gens) == 1

    def test_q8_has_five_generators(self, groups):
        gs = x_plus_generators(groups["Q8"])
        assert len(gs.plus_gens) == 5
        assert len(gs.check_gens) == 3

    def test_s4_has_seventeen_generators(self, groups):
        # 10 solutions of g^2 = 1 (identity included) plus 7 inverse pairs
        gs = x_plus_generators(groups["S4"])
        assert len(gs.plus_gens) == 17
        assert len(gs.check_gens) == 7

    def test_symmetry_invariants(self, groups):
        for name in ("S4", "Q16", "D8oC4"):
            gs = x_plus_generators(groups[name])
            assert all(a.is_symmetric() for a in gs.plus_gens)
            assert all(a and a.is_antisymmetric() for a in gs.check_gens)

    def test_one_generator_per_inverse_pair(self, groups):
        G = groups["S4"]
        gs = x_plus_generators(G)
        covered = [g for a in gs.plus_gens for g in a.support()]
        assert sorted(covered) == list(G.elements())


class TestCommutativityChecks:
    def test_abelian_groups(self, groups):
        for name in ("C12", "C2^3", "C4xC4"):
            assert is_plus_commutative(groups[name])
            assert is_check_commutative(groups[name])

    def test_q8_plus_commutative(self, groups):
        assert is_plus_commutative(groups["Q8"])

    def test_d8_not_plus_commutative(self, groups):
        assert not is_plus_commutative(groups["D8"])

    def test_d8_check_commutative(self, groups):
        assert is_check_commutative(groups["D8"])

    def test_q8xc2_not_check_commutative(self, groups):
        assert not is_check_commutative(groups["Q8xC2"])

    def test_agrees_with_oracle_up_to_16(self, groups):
        for e in catalog(16):
            assert is_plus_commutative(e.group) == plus_commutative_oracle(e.group)
            assert is_check_commutative(e.group) == check_commutative_oracle(e.group)

    def test_plus_commutative_implies_lie_metabelian(self, groups):
        for e in catalog(32):
            if is_plus_commutative(e.group):
                assert is_plus_lie_metabelian(e.group).lie_metabelian, e.name


class TestLieMetabelianScan:
    def test_abelian_has_no_brackets(self, groups):
        rep = is_plus_lie_metabelian(groups["C6"])
        assert rep.lie_metabelian
        assert rep.bracket_count == 0 and rep.deduped_bracket_count == 0

    def test_s4_fails_with_reusable_witness(self, groups):
        G = groups["S4"]
        rep = is_plus_lie_metabelian(G)
        assert not rep.lie_metabelian
        gens = x_plus_generators(G).plus_gens
        a, b, c, d = rep.witness
        dbl = lie_bracket(lie_bracket(gens[a], gens[b]), lie_bracket(gens[c], gens[d]))
        assert not dbl.is_zero()

    def test_q16_passes(self, groups):
        rep = is_plus_lie_metabelian(groups["Q16"])
        assert rep.lie_metabelian and rep.witness is None

    def test_witness_only_on_failure(self, groups):
        for e in catalog(16):
            rep = is_plus_lie_metabelian(e.group)
            assert (rep.witness is None) == rep.lie_metabelian

    def test_dedup_counts_are_consistent(self, groups):
        rep = is_plus_lie_metabelian(groups["S4"])
        assert 0 < rep.deduped_bracket_count <= rep.bracket_count

    def test_budget_enforced(self, groups):
        with pytest.raises(BudgetExceeded):
            is_plus_lie_metabelian(groups["D8"], budget=4)

    def test_agrees_with_dedup_free_oracle_up_to_16(self, groups):
        # also certifies sign-deduplication soundness: the oracle uses all
        # ordered pairs with no deduplication at all
        for e in catalog(16):
            assert is_plus_lie_metabelian(e.group).lie_metabelian == lie_metabelian_oracle(
                e.group
            ), e.name

    @given(seed=st.randoms(use_true_random=False))
    @settings(max_examples=15, deadline=None)
    def test_verdict_invariant_under_relabelling(self, groups, seed):
        base = groups["D8oC4"]
        n = base.order
        sigma = list(range(n))
        seed.shuffle(sigma)
        inv_sigma = [0] * n
        for i, v in enumerate(sigma):
            inv_sigma[v] = i
        table = [
            [inv_sigma[base.mul(sigma[i], sigma[j])] for j in range(n)]
            for i in range(n)
        ]
        relabelled = group_from_table(table)
        assert (
            is_plus_lie_metabelian(relabelled).lie_metabelian
            == is_plus_lie_metabelian(base).lie_metabelian
        )


class TestEq1Audit:
    def test_holds_vacuously_on_abelian(self, groups):
        assert audit_eq1(groups["C12"])

    def test_holds_on_d8(self, groups):
        assert audit_eq1(groups["D8"])

    def test_holds_on_every_catalog_group(self, groups):
        for e in catalog(32):
            assert audit_eq1(e.group), e.name


@pytest.mark.skipif(_scan_c is None, reason="compiled kernel not built")
class TestKernelEquivalence:
    def test_scan_results_identical(self, groups):
        for e in catalog(32):
            G = e.group
            sup, co = _to_arrays(x_plus_generators(G).plus_gens)
            got_c = _scan_c.lie_metabelian_scan(G.table, G.inverse, sup, co)
            got_py = _scan_py.lie_metabelian_scan(G.table, G.inverse, sup, co)
            assert got_c == got_py, e.name

    def test_pairwise_commute_identical(self, groups):
        for e in catalog(32):
            G = e.group
            for gens in (x_plus_generators(G).plus_gens, x_plus_generators(G).check_gens):
                sup, co = _to_arrays(gens)
                assert _scan_c.pairwise_commute(G.table, sup, co) == _scan_py.pairwise_commute(
                    G.table, sup, co
                ), e.name

    def test_pure_kernel_forced_by_env(self, monkeypatch):
        from liemetab.brute import active_kernel

        monkeypatch.setenv("LIEMETAB_PURE", "1")
        assert active_kernel() == "python"
        monkeypatch.delenv("LIEMETAB_PURE")
        assert active_kernel() == "cython"


def test_int64_headroom_in_compiled_kernel(groups):
    """Double-bracket coefficients stay far below the int64 range.

    The compiled kernel carries int64; generator coefficients are 1 and
    supports are at most 2, so bracket coefficients are bounded by 4 and
    double products by |support|^2 * 16, comfortably within range.  Verify
    the actual maxima on the largest catalog groups.
    """
    for name in ("S4", "Q8xC2xC2"):
        G = groups[name]
        gens = x_plus_generators(G).plus_gens
        worst = 0
        brackets = []
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                b = lie_bracket(gens[i], gens[j])
                if b:
                    brackets.append(b)
        for u in brackets[:40]:
            for v in brackets[:40]:
                prod = u * v
                if prod:
                    worst = max(worst, max(abs(c) for _, c in prod.items()))
        assert worst < 2**16
