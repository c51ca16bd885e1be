import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperchar.characteristic import characteristic_bitset
from hyperchar.hyperfield import QuotientHyperfield, check_axioms
from hyperchar.modular import Prime

from conftest import subgroup_pairs


class TestConstruction:
    def test_orbits_for_5_2(self):
        H = QuotientHyperfield(5, 2)
        assert H.classes == (0, 1, 2)
        assert H.orbit(1) == (1, 4) and H.orbit(2) == (2, 3) and H.orbit(0) == (0,)

    def test_orbits_for_7_3(self):
        H = QuotientHyperfield(7, 3)
        assert H.classes == (0, 1, 3)
        assert H.orbit(1) == (1, 2, 4) and H.orbit(3) == (3, 5, 6)

    def test_trivial_subgroup_is_the_prime_field(self):
        H = QuotientHyperfield(3, 1)
        assert H.classes == (0, 1, 2)
        assert all(len(H.orbit(x)) == 1 for x in H.classes)

    @pytest.mark.parametrize("p,n", subgroup_pairs(31))
    def test_classes_partition_the_residues(self, p, n):
        H = QuotientHyperfield(p, n)
        assert len(H.classes) == 1 + (p - 1) // n
        seen = set()
        for x in H.classes:
            orbit = H.orbit(x)
            assert x == min(orbit)
            assert len(orbit) == (1 if x == 0 else n)
            seen.update(orbit)
        assert seen == set(range(p))

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            QuotientHyperfield(7, 4)
        with pytest.raises(ValueError):
            QuotientHyperfield(8, 1)


class TestOperations:
    def test_hyperadd_examples(self):
        H = QuotientHyperfield(5, 2)
        assert H.hyperadd(1, 1) == {0, 2}
        K = QuotientHyperfield(7, 3)
        assert K.hyperadd(1, 3) == {0, 1, 3}

    def test_hypermul_examples(self):
        H = QuotientHyperfield(5, 2)
        assert H.hypermul(2, 2) == 1
        K = QuotientHyperfield(7, 3)
        assert K.hypermul(3, 3) == 1

    @pytest.mark.parametrize("p,n", subgroup_pairs(19))
    def test_hyperadd_equals_full_orbit_sum(self, p, n):
        H = QuotientHyperfield(p, n)
        for x in H.classes:
            for y in H.classes:
                brute = frozenset(
                    H.class_of(u + v) for u in H.orbit(x) for v in H.orbit(y)
                )
                assert H.hyperadd(x, y) == brute
                assert brute  # set-valued addition never returns the empty set

    @given(st.sampled_from(subgroup_pairs(31)), st.data())
    @settings(max_examples=80, deadline=None)
    def test_hypermul_is_representative_independent(self, pair, data):
        p, n = pair
        H = QuotientHyperfield(p, n)
        x = data.draw(st.sampled_from(H.classes))
        y = data.draw(st.sampled_from(H.classes))
        u = data.draw(st.sampled_from(H.orbit(x)))
        v = data.draw(st.sampled_from(H.orbit(y)))
        assert H.class_of(u * v) == H.hypermul(x, y)

    @given(st.sampled_from(subgroup_pairs(31)), st.data())
    @settings(max_examples=80, deadline=None)
    def test_hyperadd_is_representative_independent(self, pair, data):
        p, n = pair
        H = QuotientHyperfield(p, n)
        x = data.draw(st.sampled_from(H.classes))
        y = data.draw(st.sampled_from(H.classes))
        u = data.draw(st.sampled_from(H.orbit(x)))
        v = data.draw(st.sampled_from(H.orbit(y)))
        assert H.hyperadd(u, v) == H.hyperadd(x, y)

    def test_neg_is_the_unique_hyperinverse(self):
        for p, n in subgroup_pairs(19):
            H = QuotientHyperfield(p, n)
            for x in H.classes:
                inverses = [y for y in H.classes if 0 in H.hyperadd(x, y)]
                assert inverses == [H.neg(x)]


class TestAxioms:
    @pytest.mark.parametrize("p,n", [(5, 2), (13, 4), (3, 1), (7, 3), (31, 6)])
    def test_reference_quotients_pass_all_flags(self, p, n):
        report = check_axioms(QuotientHyperfield(p, n))
        assert report.all_ok
        assert report.counterexamples == []

    def test_trivial_quotient_addition_is_single_valued(self):
        H = QuotientHyperfield(3, 1)
        assert all(len(H.hyperadd(x, y)) == 1 for x in H.classes for y in H.classes)
        assert check_axioms(H).all_ok

    def test_counterexamples_empty_iff_all_flags(self):
        for p, n in subgroup_pairs(13):
            report = check_axioms(QuotientHyperfield(p, n))
            assert report.all_ok == (report.counterexamples == [])


class TestNFoldSums:
    def test_examples(self):
        H = QuotientHyperfield(5, 2)
        assert H.n_fold_sum_contains_zero(2)
        assert not H.n_fold_sum_contains_zero(1)
        K = QuotientHyperfield(7, 3)
        assert K.n_fold_sum_contains_zero(3)

    def test_zero_fold_sum_is_zero(self):
        H = QuotientHyperfield(5, 2)
        assert H.n_fold_sums(0) == {0}

    @pytest.mark.parametrize("p,n", subgroup_pairs(19))
    def test_agrees_with_membership_table(self, p, n):
        H = QuotientHyperfield(p, n)
        S = characteristic_bitset(Prime(p), n)
        for s in range(0, S.bound + 1):
            assert H.n_fold_sum_contains_zero(s) == S.member[s], (p, n, s)
