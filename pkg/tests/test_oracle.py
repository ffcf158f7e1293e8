"""Combinatorial counting oracle: DP tables versus literal enumeration."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regulus.oracle import (
    EnumerationBudgetError,
    RegularityProfile,
    enumerate_multipartitions,
    multipartition_counts,
    regular_multipartition_counts,
    regular_partition_counts,
    regular_partitions,
)


def brute_force_partitions(n, allowed):
    """All partitions of n into parts from `allowed`, as sorted tuples."""
    allowed = sorted(allowed, reverse=True)
    results = []

    def rec(remaining, max_part, acc):
        if remaining == 0:
            results.append(tuple(acc))
            return
        for part in allowed:
            if part <= min(remaining, max_part):
                acc.append(part)
                rec(remaining - part, part, acc)
                acc.pop()

    rec(n, n, [])
    return results


def test_profile_invariants():
    with pytest.raises(ValueError):
        RegularityProfile(())
    with pytest.raises(ValueError):
        RegularityProfile((3, 1))
    assert RegularityProfile((3, 3)).r == 2


def test_regular_counts_ell3_prefix():
    table = regular_partition_counts(3, 5)
    assert list(table.values) == [1, 1, 2, 2, 4, 5]


def test_regular_counts_zero_index():
    for ell in (2, 3, 7, 55):
        assert regular_partition_counts(ell, 4)[0] == 1


def test_regular_counts_match_brute_force():
    for ell in (2, 3, 4, 5, 7):
        table = regular_partition_counts(ell, 14)
        for n in range(15):
            allowed = [p for p in range(1, n + 1) if p % ell]
            assert table[n] == len(brute_force_partitions(n, allowed)), (ell, n)


def test_ell2_counts_equal_distinct_part_counts():
    # odd-part partitions are equinumerous with distinct-part partitions
    table = regular_partition_counts(2, 12)
    for n in range(13):
        distinct = [
            parts
            for parts in brute_force_partitions(n, range(1, n + 1))
            if len(set(parts)) == len(parts)
        ]
        assert table[n] == len(distinct)


def test_regular_partitions_enumeration_agrees_with_counts():
    for ell in (2, 3, 5):
        table = regular_partition_counts(ell, 10)
        for n in range(11):
            parts = regular_partitions(n, ell)
            assert len(parts) == table[n]
            assert len(set(parts)) == len(parts)
            for lam in parts:
                assert sum(lam) == n
                assert all(x % ell for x in lam)


def test_multipartition_pair_at_two():
    assert multipartition_counts(RegularityProfile((3, 3)), 2)[2] == 5


def test_multipartition_zero_and_one():
    profile = RegularityProfile((3, 3))
    table = multipartition_counts(profile, 1)
    assert table[0] == 1
    assert table[1] == 2
    assert enumerate_multipartitions(profile, 0) == 1
    assert enumerate_multipartitions(profile, 1) == 2


def test_thm_smallest_instance_divisible():
    table = multipartition_counts(RegularityProfile((3,) * 12), 9)
    assert table[9] % 3 == 0


def test_enumerate_small_single_component():
    assert enumerate_multipartitions(RegularityProfile((2,)), 3) == 2


def test_enumeration_budget_guard():
    with pytest.raises(EnumerationBudgetError):
        enumerate_multipartitions(RegularityProfile((2,)), 31)
    with pytest.raises(EnumerationBudgetError):
        enumerate_multipartitions(RegularityProfile((2,) * 5), 4)


def test_enumeration_matches_dp():
    for ells in ((2,), (3,), (7,), (2, 5), (3, 3), (5, 7), (2, 3, 5)):
        profile = RegularityProfile(ells)
        table = multipartition_counts(profile, 12)
        for n in range(13):
            assert enumerate_multipartitions(profile, n) == table[n], (ells, n)


def test_profile_permutation_invariance():
    for perm in itertools.permutations((2, 3, 5)):
        table = multipartition_counts(RegularityProfile(perm), 20)
        base = multipartition_counts(RegularityProfile((2, 3, 5)), 20)
        assert list(table.values) == list(base.values)


def test_counts_monotone_positive():
    for ells in ((2,), (3, 3), (5, 7, 11)):
        table = multipartition_counts(RegularityProfile(ells), 40)
        assert all(v >= 1 for v in table.values)


def test_uniform_profile_shortcut():
    direct = multipartition_counts(RegularityProfile((3,) * 12), 50)
    shortcut = regular_multipartition_counts(3, 12, 50)
    assert list(direct.values) == list(shortcut.values)


def test_large_counts_stay_exact():
    # values overflow 64-bit words well before n = 200
    table = regular_multipartition_counts(55, 54, 200)
    assert table[200] > 2**63


@given(
    st.lists(st.integers(2, 7), min_size=1, max_size=3),
    st.integers(0, 15),
)
@settings(max_examples=40, deadline=None)
def test_enumeration_property(ells, n):
    profile = RegularityProfile(tuple(ells))
    assert enumerate_multipartitions(profile, n) == multipartition_counts(profile, n)[n]
