import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxdenum import (
    BoundTooSmall,
    NotAMember,
    auto_bound,
    enumerate_factorizations,
    make_semigroup,
    max_denumerant_element,
    oracle_dmax,
    oracle_dmax_element,
    oracle_dmax_empirical,
    oracle_factorizations,
)
from maxdenum.oracle import OracleBound, oracle_dmax_profile

from conftest import NAMED


class TestOracleEnumeration:
    def test_matches_main_enumerator_as_a_set(self):
        gens = (15, 2, 21, 23, 56)
        for n in (0, 5, 26, 41, 56):
            a = sorted(f.coefficients for f in oracle_factorizations(gens, n))
            b = sorted(f.coefficients for f in enumerate_factorizations(gens, n))
            assert a == b

    def test_sorted_ascending_output(self):
        facts = [f.coefficients for f in oracle_factorizations((4, 1, 2), 5)]
        assert facts == sorted(facts)

    @given(
        st.lists(st.integers(1, 20), min_size=1, max_size=3, unique=True),
        st.integers(0, 50),
    )
    @settings(max_examples=60, deadline=None)
    def test_same_factorization_sets_everywhere(self, gens, n):
        a = sorted(f.coefficients for f in oracle_factorizations(gens, n))
        b = sorted(f.coefficients for f in enumerate_factorizations(gens, n))
        assert a == b


class TestOracleDmaxElement:
    def test_reference_values(self):
        S = make_semigroup([15, 17, 36, 38, 71])
        assert oracle_dmax_element(S, 176) == 3
        assert oracle_dmax_element(S, 71) == 1
        assert oracle_dmax_element(S, 0) == 1

    def test_rejects_non_members(self):
        S = make_semigroup([4, 5, 6])
        with pytest.raises(NotAMember):
            oracle_dmax_element(S, 7)

    def test_agrees_with_direct_counting(self):
        S = make_semigroup([5, 6, 7])
        for s in range(0, 60):
            try:
                expected = max_denumerant_element(S, s)
            except NotAMember:
                continue
            assert oracle_dmax_element(S, s) == expected


class TestAutoBound:
    def test_bound_carries_a_rationale(self):
        b = auto_bound(make_semigroup([4, 5, 6]))
        assert b.max_element > 0
        assert "class" in b.rationale

    def test_bound_for_whole_numbers(self):
        assert auto_bound(make_semigroup([1])).max_element >= 0

    def test_explicit_bound_below_minimum_rejected(self):
        S = make_semigroup([5, 6, 7])
        floor = auto_bound(S).max_element
        with pytest.raises(BoundTooSmall):
            oracle_dmax(S, OracleBound(floor - 1, "too small"))

    def test_larger_explicit_bound_changes_nothing(self):
        S = make_semigroup([5, 6, 7])
        floor = auto_bound(S)
        assert oracle_dmax(S) == oracle_dmax(S, OracleBound(floor.max_element * 2, "x"))


class TestOracleDmax:
    def test_named_values(self):
        for gens, expected in NAMED.items():
            assert oracle_dmax(make_semigroup(gens)) == expected, gens

    def test_empirical_doubling_agrees(self):
        for gens in [(4, 5, 6), (5, 6, 7), (7, 10, 12), (15, 17, 36, 38, 71)]:
            S = make_semigroup(gens)
            assert oracle_dmax_empirical(S) == oracle_dmax(S)

    def test_profile_contains_every_member_up_to_bound(self):
        from maxdenum import contains

        S = make_semigroup([6, 9, 20])
        profile = oracle_dmax_profile(S)
        limit = auto_bound(S).max_element
        members = {n for n in range(limit + 1) if contains(S, n)}
        assert set(profile) == members

    def test_profile_values_match_per_element_oracle(self):
        S = make_semigroup([5, 7, 9])
        for s, (toplen, count) in oracle_dmax_profile(S).items():
            assert oracle_dmax_element(S, s) == count
            facts = oracle_factorizations(S, s)
            assert max(f.length for f in facts) == toplen
